#include "rhomboid/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "rhomboid/error.hpp"

namespace rhomboid {

namespace {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

std::string_view to_string(witness_side side) {
  switch (side) {
  case witness_side::expression_only:
    return "expression-only";
  case witness_side::graph_only:
    return "graph-only";
  case witness_side::duplicate:
    return "duplicate";
  }
  return "?";
}

} // namespace

std::uint64_t splitmix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ull;
  return mix64(state_);
}

std::uint64_t splitmix64::uniform_nonzero(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold)
      return 1 + r % bound;
  }
}

std::uint64_t dp_eval(const labeled_digraph& g, const assignment& values,
                      const prime_field& field) {
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<std::uint64_t> acc(vs.size(), 0);
  std::size_t s = *g.index_of(g.source());
  acc[s] = field.reduce(1);
  for (std::size_t v = s + 1; v < vs.size(); ++v) {
    for (std::size_t k : g.in_edges(v)) {
      auto it = values.find(es[k].label);
      if (it == values.end())
        throw error(errc::unbound_label,
                    "no value assigned to " + es[k].label.to_string());
      std::uint64_t term =
          field.mul(acc[*g.index_of(es[k].tail)], field.reduce(it->second));
      acc[v] = field.add(acc[v], term);
    }
  }
  return acc[*g.index_of(g.sink())];
}

assignment random_assignment(const std::vector<edge_label>& labels,
                             splitmix64& rng, const prime_field& field) {
  assignment out;
  out.reserve(labels.size());
  for (edge_label l : labels)
    out.emplace(l, rng.uniform_nonzero(field.prime() - 1));
  return out;
}

std::uint64_t assignment_digest(const std::vector<edge_label>& labels,
                                const assignment& values) {
  std::uint64_t h = 0;
  for (edge_label l : labels) {
    auto it = values.find(l);
    h = mix64(h ^ l.key());
    h = mix64(h ^ (it == values.end() ? 0 : it->second));
  }
  return h;
}

std::string verification_report::witness_text() const {
  if (passed)
    return {};
  if (mode == verification_mode::exact) {
    if (!witness_monomial)
      return "term counts differ: expression " +
             std::to_string(expression_terms) + ", graph " +
             std::to_string(graph_paths);
    return "monomial " + witness_monomial->to_string() + " (" +
           std::string(to_string(side)) + ")";
  }
  if (!witness_trial)
    return {};
  return "trial " + std::to_string(witness_trial->trial) + ": expression " +
         std::to_string(witness_trial->expression_value) + " != graph " +
         std::to_string(witness_trial->graph_value) + " (assignment " +
         hex64(witness_trial->assignment_digest) + ")";
}

verification_report check_exact(const expr& e, const labeled_digraph& g,
                                std::uint64_t limit) {
  verification_report report;
  report.mode = verification_mode::exact;
  std::vector<monomial> lhs = expand(e, limit);
  std::vector<monomial> rhs = enumerate_paths(g, limit);
  report.expression_terms = lhs.size();
  report.graph_paths = rhs.size();

  // Both sides are sorted; walk them together.
  auto x = lhs.begin();
  auto y = rhs.begin();
  while (x != lhs.end() || y != rhs.end()) {
    if (x != lhs.end() && std::next(x) != lhs.end() && *x == *std::next(x)) {
      report.witness_monomial = *x;
      report.side = witness_side::duplicate;
      return report;
    }
    if (y == rhs.end() || (x != lhs.end() && *x < *y)) {
      report.witness_monomial = *x;
      report.side = witness_side::expression_only;
      return report;
    }
    if (x == lhs.end() || *y < *x) {
      report.witness_monomial = *y;
      report.side = witness_side::graph_only;
      return report;
    }
    ++x;
    ++y;
  }
  report.passed = true;
  return report;
}

verification_report check_fingerprint(const expr& e, const labeled_digraph& g,
                                      std::uint64_t trials, std::uint64_t seed,
                                      const prime_field& field) {
  if (trials == 0)
    throw error(errc::domain, "fingerprint check needs at least one trial");
  std::uint64_t longest = path_length_bounds(g).max;
  if (field.prime() <= 2 * longest)
    throw error(errc::domain, "prime " + std::to_string(field.prime()) +
                                  " is too small for paths of length " +
                                  std::to_string(longest));

  verification_report report;
  report.mode = verification_mode::fingerprint;
  report.trials = trials;
  report.seed = seed;
  report.prime = field.prime();

  const std::vector<edge_label> labels = labels_of(g);
  splitmix64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    assignment values = random_assignment(labels, rng, field);
    trial_record rec;
    rec.trial = t;
    rec.assignment_digest = assignment_digest(labels, values);
    rec.expression_value = eval(e, values, field);
    rec.graph_value = dp_eval(g, values, field);
    report.transcript.push_back(rec);
    if (!rec.agrees()) {
      report.witness_trial = rec;
      return report;
    }
  }
  report.passed = true;
  return report;
}

nlohmann::json to_json(const verification_report& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  bool exact = report.mode == verification_mode::exact;
  j["mode"] = exact ? "exact" : "fingerprint";
  j["result"] = report.passed ? "pass" : "fail";
  j["trials"] = report.trials;
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json();
  j["prime"] = report.prime ? nlohmann::json(*report.prime) : nlohmann::json();
  if (exact) {
    j["expression_terms"] = report.expression_terms;
    j["graph_paths"] = report.graph_paths;
    if (!report.passed) {
      nlohmann::json w;
      w["side"] = to_string(report.side);
      if (report.witness_monomial)
        w["monomial"] = report.witness_monomial->to_string();
      j["witness"] = w;
    }
  } else {
    auto transcript = nlohmann::json::array();
    for (const trial_record& r : report.transcript)
      transcript.push_back({{"trial", r.trial},
                            {"assignment_digest", hex64(r.assignment_digest)},
                            {"expression_value", r.expression_value},
                            {"graph_value", r.graph_value}});
    j["transcript"] = std::move(transcript);
    if (report.witness_trial)
      j["witness"] = {{"trial", report.witness_trial->trial},
                      {"assignment_digest",
                       hex64(report.witness_trial->assignment_digest)},
                      {"expression_value",
                       report.witness_trial->expression_value},
                      {"graph_value", report.witness_trial->graph_value}};
  }
  return j;
}

} // namespace rhomboid
