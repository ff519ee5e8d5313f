#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "rhomboid/expr.hpp"
#include "rhomboid/graph.hpp"

namespace rhomboid {

/// How the decomposition vertex is rounded when a span has no exact middle.
enum class split_rounding : std::uint8_t { ceil, floor };

struct vda_config {
  split_rounding rounding = split_rounding::ceil;
  bool memoize = true;
};

/*
 * Decomposition vertex for a subgraph whose source has index p and sink has
 * index q.
 *
 * SR and single-leaf subgraphs split at (q+p)/2, dipterous ones at
 * (q+p+1)/2, rounded per `rounding`. The vertex must leave a non-degenerate
 * subgraph on each side, i.e. p+1 <= i (p+2 for an upper/lower source) and
 * i <= q-1. Ceiling rounding always lands in that window; floor rounding can
 * undershoot it for an odd-span upper/lower-source single-leaf graph and is
 * clamped.
 *
 * Throws errc::base_case_expected when the subgraph is small enough to be a
 * base case (size < 3).
 */
std::uint32_t choose_split(subgraph_family family, std::uint32_t p,
                           std::uint32_t q,
                           split_rounding rounding = split_rounding::ceil);

struct subexpr_key {
  terminal src;
  terminal dst;

  friend bool operator==(const subexpr_key&, const subexpr_key&) = default;
  friend auto operator<=>(const subexpr_key&, const subexpr_key&) = default;
};

/// Shape of a size-1 or size-2 subgraph: sink index = source index + offset.
struct base_pattern {
  terminal_kind src;
  terminal_kind dst;
  std::uint32_t offset;

  subexpr_key at(std::uint32_t p) const {
    return {{src, p}, {dst, p + offset}};
  }
  /// E.g. `E(u_p,l_p+2)`.
  std::string to_string() const;
};

/// All eighteen base shapes, sizes 1 then 2.
std::span<const base_pattern> base_patterns();

enum class base_variant : std::uint8_t {
  corrected,    ///< what the generator uses; every shape passes the path oracle
  as_published, ///< verbatim published formulas, including two letter swaps
};

/// True for the two shapes whose published second addend swaps a/d for c/e.
bool published_form_differs(const base_pattern& pattern);

/// Factored base-case expression for a key of size 1 or 2. The indices are
/// not range-checked against any ambient graph.
/// Throws errc::base_case_expected for larger keys.
expr base_expression(const subexpr_key& key,
                     base_variant variant = base_variant::corrected);

/*
 * Generator of factored expressions for SR(n) and its subgraphs.
 *
 * Sizes 1 and 2 come from base_expression(); larger subgraphs split at
 * choose_split() into six parts:
 *
 *   E(s,t) = E(s,i) E(i,t) + E(s,u_{i-1}) c_{i-1} E(u_i,t)
 *                          + E(s,l_{i-1}) a_{i-1} E(l_i,t)
 *
 * With memoization each distinct key is built once and shared, so generation
 * touches O(n) keys while literal counts still reflect the written tree.
 */
class generator {
public:
  explicit generator(std::uint32_t n, vda_config config = {});

  std::uint32_t size() const noexcept { return n_; }
  const vda_config& config() const noexcept { return config_; }

  /// Throws errc::range if a terminal is not a vertex of SR(n),
  /// errc::ordering if dst does not follow src.
  expr expression(const subexpr_key& key);
  expr expression(terminal src, terminal dst) {
    return expression(subexpr_key{src, dst});
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

private:
  expr build(const subexpr_key& key);

  std::uint32_t n_;
  vda_config config_;
  std::map<subexpr_key, expr> memo_;
};

/// Expression of the whole SR(n), i.e. E(b1, bn). Throws errc::invalid_size
/// for n == 0.
expr generate(std::uint32_t n, vda_config config = {});

} // namespace rhomboid
