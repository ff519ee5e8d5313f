#include "rhomboid/report.hpp"

#include <sstream>

#include "rhomboid/error.hpp"
#include "rhomboid/oracle.hpp"

namespace rhomboid {

namespace {

bool inside(terminal t, std::uint32_t n) {
  return t.index >= 1 && t.index <= (t.is_basic() ? n : n - 1);
}

std::uint64_t extended_value(const std::vector<complexity_row>& rows,
                             count_family family, std::uint32_t size) {
  const complexity_row& row = rows.at(size - 1);
  switch (family) {
  case count_family::sr:
    return row.t;
  case count_family::single_leaf:
    return row.t_hat;
  case count_family::dipterous:
    return row.t_hathat.value_or(0);
  case count_family::dipterous_parallelogram:
    return row.t_hathat_pr.value_or(0);
  case count_family::dipterous_trapezoidal:
    return row.t_hathat_tr.value_or(0);
  }
  return 0;
}

} // namespace

std::size_t discrepancy_report::flagged() const noexcept {
  std::size_t n = 0;
  for (const auto& c : counts)
    n += c.consistent() ? 0 : 1;
  for (const auto& f : formulas)
    n += f.published_sound ? 0 : 1;
  return n;
}

discrepancy_report build_discrepancy_report(std::uint32_t ambient) {
  if (ambient < 4)
    throw error(errc::invalid_size,
                "discrepancy report needs an ambient SR of size >= 4");
  discrepancy_report report;

  std::uint32_t largest = 0;
  for (const auto& b : published_bases())
    largest = std::max(largest, b.size);
  const auto extended = extended_recurrence_table(largest);
  for (const auto& b : published_bases())
    report.counts.push_back({b.family, b.size, b.value,
                             generated_count(b.family, b.size),
                             extended_value(extended, b.family, b.size)});

  const labeled_digraph g = build_sr(ambient);
  for (const base_pattern& pattern : base_patterns()) {
    formula_check check;
    check.pattern = pattern;
    check.published_sound = true;
    check.corrected_sound = true;
    for (std::uint32_t p = 1;; ++p) {
      subexpr_key key = pattern.at(p);
      if (!inside(key.src, ambient) || !inside(key.dst, ambient))
        break;
      const labeled_digraph sub = induced_subgraph(g, key.src, key.dst);
      const expr published = base_expression(key, base_variant::as_published);
      const expr corrected = base_expression(key, base_variant::corrected);
      if (p == 1) {
        check.published_text = to_text(published);
        check.published_literals = published.literal_count();
        check.corrected_literals = corrected.literal_count();
      }
      auto pub = check_exact(published, sub, std::uint64_t{1} << 20);
      if (!pub.passed && check.published_sound) {
        check.published_sound = false;
        check.published_witness = "p=" + std::to_string(p) + ": " +
                                  pub.witness_text();
      }
      if (!check_exact(corrected, sub, std::uint64_t{1} << 20).passed)
        check.corrected_sound = false;
    }
    report.formulas.push_back(std::move(check));
  }
  return report;
}

nlohmann::json to_json(const discrepancy_report& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["flagged"] = report.flagged();
  auto counts = nlohmann::json::array();
  for (const auto& c : report.counts)
    counts.push_back({{"quantity", std::string(symbol(c.family)) + "(" +
                                       std::to_string(c.size) + ")"},
                      {"published", c.published},
                      {"generated", c.generated},
                      {"by_recurrence", c.by_recurrence},
                      {"consistent", c.consistent()}});
  j["counts"] = std::move(counts);
  auto formulas = nlohmann::json::array();
  for (const auto& f : report.formulas) {
    nlohmann::json item{{"pattern", f.pattern.to_string()},
                        {"published_at_p1", f.published_text},
                        {"published_sound", f.published_sound},
                        {"corrected_sound", f.corrected_sound},
                        {"published_literals", f.published_literals},
                        {"corrected_literals", f.corrected_literals}};
    if (!f.published_sound)
      item["witness"] = f.published_witness;
    formulas.push_back(std::move(item));
  }
  j["formulas"] = std::move(formulas);
  return j;
}

std::string to_text(const discrepancy_report& report) {
  std::ostringstream os;
  os << "base counts (published / generated / recurrence from sizes 1-2)\n";
  for (const auto& c : report.counts) {
    os << "  " << (c.consistent() ? "ok      " : "FLAGGED ") << symbol(c.family)
       << "(" << c.size << "): " << c.published << " / " << c.generated
       << " / " << c.by_recurrence << "\n";
  }
  os << "base formulas (published form vs path oracle)\n";
  for (const auto& f : report.formulas) {
    os << "  " << (f.published_sound ? "ok      " : "FLAGGED ")
       << f.pattern.to_string();
    if (!f.published_sound)
      os << ": " << f.published_witness << "; corrected form "
         << (f.corrected_sound ? "sound" : "UNSOUND") << ", literals "
         << f.published_literals << " -> " << f.corrected_literals;
    os << "\n";
  }
  os << report.flagged() << " item(s) flagged\n";
  return os.str();
}

} // namespace rhomboid
