#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

#include "rhomboid/graph.hpp"
#include "rhomboid/vda.hpp"

namespace rhomboid {

/// Literal counts for size n.
///
/// `t` counts E(SR(n)), `t_hat` a single-leaf graph, `t_hathat` a dipterous
/// one. Trapezoidal and parallelogram dipterous counts only coincide from
/// size 3 on, so for n <= 2 `t_hathat` is empty and the two are reported
/// separately.
struct complexity_row {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t t_hat = 0;
  std::optional<std::uint64_t> t_hathat;
  std::optional<std::uint64_t> t_hathat_pr;
  std::optional<std::uint64_t> t_hathat_tr;

  friend bool operator==(const complexity_row&,
                         const complexity_row&) = default;
};

/// Which count a base value describes.
enum class count_family : std::uint8_t {
  sr,
  single_leaf,
  dipterous,
  dipterous_parallelogram,
  dipterous_trapezoidal,
};

/// "T", "T_hat", "T_hathat", "T_hathat_pr", "T_hathat_tr".
std::string_view symbol(count_family family) noexcept;

struct published_base {
  count_family family;
  std::uint32_t size;
  std::uint64_t value;
};

/// The published base values of the recurrences, verbatim (sizes 1..6),
/// including the misprinted dipterous size-6 value.
std::span<const published_base> published_bases();

/// Literal count of the generated expression of the given subgraph family
/// and size, built inside the smallest SR that contains it. `dipterous`
/// means trapezoidal.
std::uint64_t generated_count(subgraph_family family, std::uint32_t size,
                              vda_config config = {});
std::uint64_t generated_count(count_family family, std::uint32_t size,
                              vda_config config = {});

/// Counts of generated expressions for n = 1..n_max.
std::vector<complexity_row> generated_table(std::uint32_t n_max,
                                            vda_config config = {});

/*
 * Rows n = 1..n_max from the published recurrences:
 *
 *   T(n)   = T(ceil(n/2)) + T(floor(n/2)+1) + 2 T^(ceil(n/2)-1)
 *            + 2 T^(floor(n/2)) + 2                                  n > 2
 *   T^(n)  = T(floor(n/2)+1) + T^(ceil(n/2)) + 2 T^(floor(n/2))
 *            + 2 T^^(ceil(n/2)-1) + 2                                n > 6
 *   T^^(n) = T^(ceil(n/2)) + T^(floor(n/2)+1) + 2 T^^(ceil(n/2)-1)
 *            + 2 T^^(floor(n/2)) + 2                                 n > 6
 *
 * seeded with published_bases(), except that the dipterous size-6 base is
 * replaced by the count of the generated expression.
 *
 * Throws errc::domain for n_max < 2.
 */
std::vector<complexity_row> recurrence_table(std::uint32_t n_max);

/*
 * Rows n = 1..n_max from the size-1 and size-2 bases only, applying the
 * recurrences for every n > 2. Where a recurrence needs "2 T^^(s)" for
 * s <= 2 it uses T^^_tr(s) + T^^_pr(s): every split reveals one trapezoidal
 * and one parallelogram subgraph of each revealed size.
 */
std::vector<complexity_row> extended_recurrence_table(std::uint32_t n_max);

struct closed_form_values {
  std::uint64_t t = 0;
  std::uint64_t t_hat = 0;
  std::uint64_t t_hathat = 0;

  friend bool operator==(const closed_form_values&,
                         const closed_form_values&) = default;
};

/// Exact evaluation at n = 2^k, k >= 2, with n^log2(6) = 6^k and
/// n^log2(3) = 3^k:
///   T    = 154/135 6^k +  1/27 3^k - 2/5
///   T^   = 154/135 6^k + 19/27 3^k - 2/5
///   T^^  = 154/135 6^k + 58/27 3^k - 2/5
/// Throws errc::domain for other n (or on uint64 overflow) and
/// errc::integrity if a value is not an integer.
closed_form_values closed_form(std::uint64_t n);

using exact_ratio = boost::rational<std::int64_t>;

/// 154/135.
exact_ratio leading_coefficient();

struct asymptotic_sample {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  double ratio = 0; ///< T(n) / n^log2(6)
};

struct asymptotic_result {
  std::vector<asymptotic_sample> samples;
  /// Whether |ratio - 154/135| shrinks from each sample to the next;
  /// empty for a single sample.
  std::optional<bool> converging;
};

/// Samples must be powers of two >= 4; they are processed in ascending order.
/// Throws errc::domain otherwise.
asymptotic_result asymptotic_check(std::span<const std::uint64_t> samples);

/// Published literal counts of four generators for n = 4..10.
struct reference_row {
  std::uint32_t n;
  std::uint64_t fda;
  std::uint64_t cda;
  std::uint64_t ifda;
  std::uint64_t vda;
};

std::span<const reference_row> reference_table();
std::optional<reference_row> reference_row_for(std::uint32_t n);

struct reference_coefficients {
  exact_ratio fda;
  exact_ratio cda;
  exact_ratio ifda;
  exact_ratio vda;
};

/// Published leading coefficients of n^log2(6).
reference_coefficients reference_leading_coefficients();

nlohmann::json to_json(const complexity_row& row);

} // namespace rhomboid
