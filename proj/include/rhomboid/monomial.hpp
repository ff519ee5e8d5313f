#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rhomboid/label.hpp"

namespace rhomboid {

/// Product of the labels along one path, kept as a sorted label list.
/// SR-family paths never repeat an edge, so no exponents are needed.
class monomial {
public:
  monomial() = default;

  /// Sorts `labels` into canonical order.
  explicit monomial(std::vector<edge_label> labels);

  const std::vector<edge_label>& labels() const noexcept { return labels_; }
  std::size_t degree() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  /// Product of two monomials: merged, still sorted.
  friend monomial operator*(const monomial& x, const monomial& y);

  /// `1` for the empty monomial, otherwise labels joined by `*`.
  std::string to_string() const;

  friend bool operator==(const monomial&, const monomial&) = default;
  friend auto operator<=>(const monomial&, const monomial&) = default;

private:
  std::vector<edge_label> labels_;
};

} // namespace rhomboid
