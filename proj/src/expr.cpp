#include "rhomboid/expr.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

#include "rhomboid/error.hpp"

namespace rhomboid {

struct expr::node {
  expr_kind kind = expr_kind::one;
  edge_label label;
  std::vector<expr> children;
  std::uint64_t literals = 0;
  std::uint64_t terms = 1;
};

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  return x > saturated - y ? saturated : x + y;
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > saturated / x)
    return saturated;
  return x * y;
}

} // namespace

expr::expr() {
  static const auto unit = std::make_shared<const node>();
  node_ = unit;
}

expr expr::literal(edge_label label) {
  auto n = std::make_shared<node>();
  n->kind = expr_kind::literal;
  n->label = label;
  n->literals = 1;
  return expr(std::move(n));
}

expr expr::sum(std::vector<expr> terms) {
  if (terms.empty())
    throw error(errc::domain, "empty sum");
  std::vector<expr> flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (t.kind() == expr_kind::sum)
      flat.insert(flat.end(), t.node_->children.begin(),
                  t.node_->children.end());
    else
      flat.push_back(std::move(t));
  }
  if (flat.size() == 1)
    return flat.front();
  auto n = std::make_shared<node>();
  n->kind = expr_kind::sum;
  n->literals = 0;
  n->terms = 0;
  for (const auto& t : flat) {
    n->literals += t.literal_count();
    n->terms = sat_add(n->terms, t.term_count());
  }
  n->children = std::move(flat);
  return expr(std::move(n));
}

expr expr::product(std::vector<expr> factors) {
  std::vector<expr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind() == expr_kind::product)
      flat.insert(flat.end(), f.node_->children.begin(),
                  f.node_->children.end());
    else if (!f.is_one())
      flat.push_back(std::move(f));
  }
  if (flat.empty())
    return one();
  if (flat.size() == 1)
    return flat.front();
  auto n = std::make_shared<node>();
  n->kind = expr_kind::product;
  n->literals = 0;
  n->terms = 1;
  for (const auto& f : flat) {
    n->literals += f.literal_count();
    n->terms = sat_mul(n->terms, f.term_count());
  }
  n->children = std::move(flat);
  return expr(std::move(n));
}

expr_kind expr::kind() const noexcept { return node_->kind; }
edge_label expr::label() const noexcept { return node_->label; }
std::span<const expr> expr::children() const noexcept {
  return node_->children;
}
std::uint64_t expr::literal_count() const noexcept { return node_->literals; }
std::uint64_t expr::term_count() const noexcept { return node_->terms; }

bool operator==(const expr& x, const expr& y) {
  if (x.node_ == y.node_)
    return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.literals != b.literals || a.terms != b.terms ||
      a.children.size() != b.children.size())
    return false;
  if (a.kind == expr_kind::literal)
    return a.label == b.label;
  return std::equal(a.children.begin(), a.children.end(), b.children.begin());
}

namespace {

using expansion = std::vector<monomial>;

const expansion& expand_memo(
    const expr& e, std::unordered_map<const void*, expansion>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end())
    return it->second;
  expansion out;
  switch (e.kind()) {
  case expr_kind::one:
    out.emplace_back();
    break;
  case expr_kind::literal:
    out.emplace_back(std::vector<edge_label>{e.label()});
    break;
  case expr_kind::sum:
    out.reserve(e.term_count());
    for (const expr& c : e.children()) {
      const expansion& part = expand_memo(c, memo);
      out.insert(out.end(), part.begin(), part.end());
    }
    break;
  case expr_kind::product: {
    out.emplace_back();
    for (const expr& c : e.children()) {
      const expansion& part = expand_memo(c, memo);
      expansion next;
      next.reserve(out.size() * part.size());
      for (const monomial& x : out)
        for (const monomial& y : part)
          next.push_back(x * y);
      out = std::move(next);
    }
    break;
  }
  }
  return memo.emplace(e.id(), std::move(out)).first->second;
}

} // namespace

std::vector<monomial> expand(const expr& e, std::uint64_t limit) {
  if (e.term_count() > limit)
    throw error(errc::capacity,
                "expansion has " +
                    (e.term_count() == saturated
                         ? std::string("more than 2^64")
                         : std::to_string(e.term_count())) +
                    " terms, limit is " + std::to_string(limit));
  std::unordered_map<const void*, expansion> memo;
  expansion out = expand_memo(e, memo);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t eval_memo(const expr& e, const assignment& values,
                        const prime_field& field,
                        std::unordered_map<const void*, std::uint64_t>& memo) {
  switch (e.kind()) {
  case expr_kind::one:
    return field.reduce(1);
  case expr_kind::literal: {
    auto it = values.find(e.label());
    if (it == values.end())
      throw error(errc::unbound_label,
                  "no value assigned to " + e.label().to_string());
    return field.reduce(it->second);
  }
  default:
    break;
  }
  if (auto it = memo.find(e.id()); it != memo.end())
    return it->second;
  bool is_sum = e.kind() == expr_kind::sum;
  std::uint64_t acc = field.reduce(is_sum ? 0 : 1);
  for (const expr& c : e.children()) {
    std::uint64_t v = eval_memo(c, values, field, memo);
    acc = is_sum ? field.add(acc, v) : field.mul(acc, v);
  }
  memo.emplace(e.id(), acc);
  return acc;
}

void write_text(const expr& e, const text_style& style, std::string& out) {
  switch (e.kind()) {
  case expr_kind::one:
    out += '1';
    return;
  case expr_kind::literal:
    out += e.label().to_string();
    return;
  case expr_kind::sum: {
    bool first = true;
    for (const expr& c : e.children()) {
      if (!first)
        out += '+';
      first = false;
      write_text(c, style, out);
    }
    return;
  }
  case expr_kind::product: {
    bool first = true;
    for (const expr& c : e.children()) {
      if (!first && !style.juxtapose)
        out += '*';
      first = false;
      bool wrap = c.kind() == expr_kind::sum;
      if (wrap)
        out += '(';
      write_text(c, style, out);
      if (wrap)
        out += ')';
    }
    return;
  }
  }
}

void collect_labels(const expr& e, std::set<edge_label>& seen,
                    std::unordered_map<const void*, bool>& visited) {
  if (e.kind() == expr_kind::literal) {
    seen.insert(e.label());
    return;
  }
  if (!visited.emplace(e.id(), true).second)
    return;
  for (const expr& c : e.children())
    collect_labels(c, seen, visited);
}

} // namespace

std::uint64_t eval(const expr& e, const assignment& values,
                   const prime_field& field) {
  std::unordered_map<const void*, std::uint64_t> memo;
  return eval_memo(e, values, field, memo);
}

std::string to_text(const expr& e, text_style style) {
  std::string out;
  out.reserve(static_cast<std::size_t>(
      std::min<std::uint64_t>(e.literal_count() * 5, 1u << 26)));
  write_text(e, style, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const expr& e) {
  return os << to_text(e);
}

nlohmann::json to_json(const expr& e) {
  switch (e.kind()) {
  case expr_kind::one:
    return {{"one", true}};
  case expr_kind::literal:
    return {{"lit", e.label().to_string()}};
  case expr_kind::sum:
  case expr_kind::product: {
    auto items = nlohmann::json::array();
    for (const expr& c : e.children())
      items.push_back(to_json(c));
    return {{e.kind() == expr_kind::sum ? "sum" : "prod", std::move(items)}};
  }
  }
  return nullptr;
}

expr expr_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw error(errc::parse, "expression node must be a one-key object");
  const std::string key = j.begin().key();
  const nlohmann::json& value = j.begin().value();
  if (key == "one") {
    if (value != true)
      throw error(errc::parse, "\"one\" must be true");
    return expr::one();
  }
  if (key == "lit") {
    if (!value.is_string())
      throw error(errc::parse, "\"lit\" must be a string");
    return expr::literal(edge_label::parse(value.get<std::string>()));
  }
  if (key == "sum" || key == "prod") {
    if (!value.is_array() || value.empty())
      throw error(errc::parse, "\"" + key + "\" must be a non-empty array");
    std::vector<expr> children;
    children.reserve(value.size());
    for (const auto& c : value)
      children.push_back(expr_from_json(c));
    return key == "sum" ? expr::sum(std::move(children))
                        : expr::product(std::move(children));
  }
  throw error(errc::parse, "unknown expression node \"" + key + "\"");
}

std::vector<edge_label> labels_in(const expr& e) {
  std::set<edge_label> seen;
  std::unordered_map<const void*, bool> visited;
  collect_labels(e, seen, visited);
  return {seen.begin(), seen.end()};
}

} // namespace rhomboid
