#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "rhomboid/field.hpp"
#include "rhomboid/label.hpp"
#include "rhomboid/monomial.hpp"

namespace rhomboid {

enum class expr_kind : std::uint8_t { one, literal, sum, product };

/*
 * Immutable expression over edge-label literals.
 *
 * Nodes are shared (copying an expr copies a pointer), which lets memoized
 * generation reuse subexpressions. Every node caches its literal count and
 * the size of its expansion, both computed compositionally, so counts always
 * reflect the written tree even when the underlying graph of nodes is shared.
 *
 * The sum() and product() factories normalize:
 *   - nested sums / nested products are flattened (associativity),
 *   - One factors are removed from products,
 *   - a sum or product left with a single child collapses to that child,
 *   - an empty product is One.
 * After normalization every Sum/Prod has at least two children.
 */
class expr {
public:
  /// One.
  expr();

  static expr one() { return {}; }
  static expr literal(edge_label label);
  static expr sum(std::vector<expr> terms);
  static expr product(std::vector<expr> factors);

  expr_kind kind() const noexcept;
  bool is_one() const noexcept { return kind() == expr_kind::one; }

  /// Only meaningful for literals.
  edge_label label() const noexcept;
  std::span<const expr> children() const noexcept;

  std::uint64_t literal_count() const noexcept;

  /// Number of monomials in the full expansion (saturates at UINT64_MAX).
  std::uint64_t term_count() const noexcept;

  /// Stable node identity, for memo tables keyed on shared structure.
  const void* id() const noexcept { return node_.get(); }

  /// Structural equality.
  friend bool operator==(const expr& x, const expr& y);

private:
  struct node;
  explicit expr(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  std::shared_ptr<const node> node_;
};

inline expr lit(edge_label label) { return expr::literal(label); }
inline expr operator+(expr x, expr y) {
  return expr::sum({std::move(x), std::move(y)});
}
inline expr operator*(expr x, expr y) {
  return expr::product({std::move(x), std::move(y)});
}

inline std::uint64_t literal_count(const expr& e) noexcept {
  return e.literal_count();
}

/// Full distributive expansion as a sorted multiset of monomials.
/// Throws errc::capacity if the expansion has more than `limit` terms.
std::vector<monomial> expand(const expr& e, std::uint64_t limit);

using assignment = std::unordered_map<edge_label, std::uint64_t>;

/// Value over Z/pZ. Throws errc::unbound_label for a literal missing from
/// `values`.
std::uint64_t eval(const expr& e, const assignment& values,
                   const prime_field& field);

struct text_style {
  /// Drop the explicit `*` between factors.
  bool juxtapose = false;
};

/// Infix text; parentheses appear exactly around sums that are factors.
std::string to_text(const expr& e, text_style style = {});

std::ostream& operator<<(std::ostream& os, const expr& e);

/// {"lit": "b1"} | {"one": true} | {"sum": [...]} | {"prod": [...]}
nlohmann::json to_json(const expr& e);
/// Inverse of to_json; the result is normalized. Throws errc::parse.
expr expr_from_json(const nlohmann::json& j);

/// Distinct labels occurring in e, sorted.
std::vector<edge_label> labels_in(const expr& e);

} // namespace rhomboid
