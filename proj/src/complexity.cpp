#include "rhomboid/complexity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "rhomboid/error.hpp"

namespace rhomboid {

namespace {

using CF = count_family;

constexpr std::array<published_base, 16> bases{{
    {CF::sr, 1, 0},
    {CF::single_leaf, 1, 1},
    {CF::dipterous_parallelogram, 1, 2},
    {CF::dipterous_trapezoidal, 1, 3},
    {CF::sr, 2, 5},
    {CF::single_leaf, 2, 8},
    {CF::dipterous_parallelogram, 2, 12},
    {CF::dipterous_trapezoidal, 2, 11},
    {CF::single_leaf, 3, 22},
    {CF::dipterous, 3, 28},
    {CF::single_leaf, 4, 47},
    {CF::dipterous, 4, 60},
    {CF::single_leaf, 5, 79},
    {CF::dipterous, 5, 92},
    {CF::single_leaf, 6, 132},
    {CF::dipterous, 6, 50},
}};

constexpr std::array<reference_row, 7> reference_rows{{
    {4, 47, 43, 43, 41},
    {5, 110, 102, 100, 66},
    {6, 173, 161, 157, 119},
    {7, 252, 236, 228, 172},
    {8, 331, 311, 299, 247},
    {9, 520, 488, 470, 322},
    {10, 709, 665, 641, 439},
}};

std::uint64_t published(CF family, std::uint32_t size) {
  for (const auto& b : bases)
    if (b.family == family && b.size == size)
      return b.value;
  throw error(errc::integrity, "no published base for " +
                                   std::string(symbol(family)) + "(" +
                                   std::to_string(size) + ")");
}

std::uint32_t ceil_half(std::uint32_t n) { return (n + 1) / 2; }
std::uint32_t floor_half(std::uint32_t n) { return n / 2; }

// Three count families indexed by size; dipterous sizes 1 and 2 keep the
// trapezoidal / parallelogram values apart.
struct count_tables {
  std::vector<std::uint64_t> t, t_hat, t_hathat;
  std::array<std::uint64_t, 3> tr{}, pr{};

  explicit count_tables(std::uint32_t n_max)
      : t(n_max + 1), t_hat(n_max + 1), t_hathat(n_max + 1) {}

  // The "2 T^^(s)" term: one trapezoidal plus one parallelogram subgraph.
  std::uint64_t dipterous_pair(std::uint32_t s) const {
    return s <= 2 ? tr[s] + pr[s] : 2 * t_hathat[s];
  }

  std::uint64_t next_t(std::uint32_t n) const {
    return t[ceil_half(n)] + t[floor_half(n) + 1] +
           2 * t_hat[ceil_half(n) - 1] + 2 * t_hat[floor_half(n)] + 2;
  }
  std::uint64_t next_t_hat(std::uint32_t n) const {
    return t[floor_half(n) + 1] + t_hat[ceil_half(n)] +
           2 * t_hat[floor_half(n)] + dipterous_pair(ceil_half(n) - 1) + 2;
  }
  std::uint64_t next_t_hathat(std::uint32_t n) const {
    return t_hat[ceil_half(n)] + t_hat[floor_half(n) + 1] +
           dipterous_pair(ceil_half(n) - 1) + dipterous_pair(floor_half(n)) +
           2;
  }

  void seed_small() {
    for (std::uint32_t s = 1; s <= 2 && s < t.size(); ++s) {
      t[s] = published(CF::sr, s);
      t_hat[s] = published(CF::single_leaf, s);
    }
    for (std::uint32_t s = 1; s <= 2; ++s) {
      tr[s] = published(CF::dipterous_trapezoidal, s);
      pr[s] = published(CF::dipterous_parallelogram, s);
    }
  }

  std::vector<complexity_row> rows() const {
    std::vector<complexity_row> out;
    for (std::uint32_t n = 1; n < t.size(); ++n) {
      complexity_row row;
      row.n = n;
      row.t = t[n];
      row.t_hat = t_hat[n];
      if (n <= 2) {
        row.t_hathat_tr = tr[n];
        row.t_hathat_pr = pr[n];
      } else {
        row.t_hathat = t_hathat[n];
      }
      out.push_back(row);
    }
    return out;
  }
};

struct ambient_key {
  std::uint32_t n;
  subexpr_key key;
};

ambient_key locate(subgraph_family family, std::uint32_t size) {
  using F = subgraph_family;
  if (size == 0)
    throw error(errc::invalid_size, "subgraph size must be >= 1");
  switch (family) {
  case F::sr:
    return {size, {basic(1), basic(size)}};
  case F::sl_basic_upper:
    return {size + 1, {basic(1), upper(size)}};
  case F::sl_basic_lower:
    return {size + 1, {basic(1), lower(size)}};
  case F::sl_upper_basic:
    return {size + 1, {upper(1), basic(size + 1)}};
  case F::sl_lower_basic:
    return {size + 1, {lower(1), basic(size + 1)}};
  case F::trap_upper_upper:
    return {size + 2, {upper(1), upper(size + 1)}};
  case F::trap_lower_lower:
    return {size + 2, {lower(1), lower(size + 1)}};
  case F::para_lower_upper:
    return {size + 2, {lower(1), upper(size + 1)}};
  case F::para_upper_lower:
    return {size + 2, {upper(1), lower(size + 1)}};
  }
  throw error(errc::integrity, "unhandled family");
}

bool is_power_of_two_from_4(std::uint64_t n) {
  return n >= 4 && std::has_single_bit(n);
}

} // namespace

std::string_view symbol(count_family family) noexcept {
  switch (family) {
  case CF::sr:
    return "T";
  case CF::single_leaf:
    return "T_hat";
  case CF::dipterous:
    return "T_hathat";
  case CF::dipterous_parallelogram:
    return "T_hathat_pr";
  case CF::dipterous_trapezoidal:
    return "T_hathat_tr";
  }
  return "?";
}

std::span<const published_base> published_bases() { return bases; }

std::uint64_t generated_count(subgraph_family family, std::uint32_t size,
                              vda_config config) {
  ambient_key where = locate(family, size);
  generator gen(where.n, config);
  return gen.expression(where.key).literal_count();
}

std::uint64_t generated_count(count_family family, std::uint32_t size,
                              vda_config config) {
  switch (family) {
  case CF::sr:
    return generated_count(subgraph_family::sr, size, config);
  case CF::single_leaf:
    return generated_count(subgraph_family::sl_basic_upper, size, config);
  case CF::dipterous:
  case CF::dipterous_trapezoidal:
    return generated_count(subgraph_family::trap_upper_upper, size, config);
  case CF::dipterous_parallelogram:
    return generated_count(subgraph_family::para_lower_upper, size, config);
  }
  throw error(errc::integrity, "unhandled count family");
}

std::vector<complexity_row> generated_table(std::uint32_t n_max,
                                            vda_config config) {
  std::vector<complexity_row> out;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    complexity_row row;
    row.n = n;
    row.t = generated_count(CF::sr, n, config);
    row.t_hat = generated_count(CF::single_leaf, n, config);
    if (n <= 2) {
      row.t_hathat_tr = generated_count(CF::dipterous_trapezoidal, n, config);
      row.t_hathat_pr = generated_count(CF::dipterous_parallelogram, n, config);
    } else {
      row.t_hathat = generated_count(CF::dipterous, n, config);
    }
    out.push_back(row);
  }
  return out;
}

std::vector<complexity_row> recurrence_table(std::uint32_t n_max) {
  if (n_max < 2)
    throw error(errc::domain, "recurrence table needs n_max >= 2");
  constexpr std::uint32_t last_base = 6;
  count_tables c(std::max(n_max, last_base));
  c.seed_small();
  for (std::uint32_t s = 3; s <= last_base; ++s) {
    c.t_hat[s] = published(CF::single_leaf, s);
    c.t_hathat[s] = s == last_base ? generated_count(CF::dipterous, s)
                                   : published(CF::dipterous, s);
  }
  for (std::uint32_t n = 3; n <= c.t.size() - 1; ++n) {
    c.t[n] = c.next_t(n);
    if (n > last_base) {
      c.t_hat[n] = c.next_t_hat(n);
      c.t_hathat[n] = c.next_t_hathat(n);
    }
  }
  auto rows = c.rows();
  rows.resize(n_max);
  return rows;
}

std::vector<complexity_row> extended_recurrence_table(std::uint32_t n_max) {
  if (n_max < 2)
    throw error(errc::domain, "recurrence table needs n_max >= 2");
  count_tables c(n_max);
  c.seed_small();
  for (std::uint32_t n = 3; n <= n_max; ++n) {
    c.t[n] = c.next_t(n);
    c.t_hat[n] = c.next_t_hat(n);
    c.t_hathat[n] = c.next_t_hathat(n);
  }
  return c.rows();
}

exact_ratio leading_coefficient() { return {154, 135}; }

closed_form_values closed_form(std::uint64_t n) {
  if (!is_power_of_two_from_4(n))
    throw error(errc::domain,
                "closed form needs n = 2^k with k >= 2, got " +
                    std::to_string(n));
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const unsigned k = static_cast<unsigned>(std::countr_zero(n));
  const cpp_int six_k = boost::multiprecision::pow(cpp_int(6), k);
  const cpp_int three_k = boost::multiprecision::pow(cpp_int(3), k);
  const cpp_rational lead = cpp_rational(154, 135) * six_k;
  const cpp_rational tail = cpp_rational(2, 5);

  auto to_count = [&](const cpp_rational& value, const char* name) {
    if (denominator(value) != 1)
      throw error(errc::integrity, std::string(name) + "(" +
                                       std::to_string(n) + ") = " +
                                       value.str() + " is not an integer");
    const cpp_int v = numerator(value);
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
      throw error(errc::domain, std::string(name) + "(" + std::to_string(n) +
                                    ") does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
  };

  closed_form_values out;
  out.t = to_count(lead + cpp_rational(1, 27) * three_k - tail, "T");
  out.t_hat = to_count(lead + cpp_rational(19, 27) * three_k - tail, "T_hat");
  out.t_hathat =
      to_count(lead + cpp_rational(58, 27) * three_k - tail, "T_hathat");
  return out;
}

asymptotic_result asymptotic_check(std::span<const std::uint64_t> samples) {
  std::vector<std::uint64_t> ns(samples.begin(), samples.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.empty())
    throw error(errc::domain, "no samples");
  for (std::uint64_t n : ns)
    if (!is_power_of_two_from_4(n) || n > (1u << 20))
      throw error(errc::domain, "sample " + std::to_string(n) +
                                    " is not a power of two in [4, 2^20]");

  auto rows = recurrence_table(static_cast<std::uint32_t>(ns.back()));
  const double target = boost::rational_cast<double>(leading_coefficient());
  asymptotic_result out;
  for (std::uint64_t n : ns) {
    const std::uint64_t t = rows[n - 1].t;
    const double scale =
        std::pow(6.0, static_cast<double>(std::countr_zero(n)));
    out.samples.push_back({n, t, static_cast<double>(t) / scale});
  }
  if (out.samples.size() > 1) {
    bool converging = true;
    for (std::size_t i = 1; i < out.samples.size(); ++i)
      converging = converging && std::abs(out.samples[i].ratio - target) <
                                     std::abs(out.samples[i - 1].ratio - target);
    out.converging = converging;
  }
  return out;
}

std::span<const reference_row> reference_table() { return reference_rows; }

std::optional<reference_row> reference_row_for(std::uint32_t n) {
  for (const auto& r : reference_rows)
    if (r.n == n)
      return r;
  return std::nullopt;
}

reference_coefficients reference_leading_coefficients() {
  return {{79, 45}, {227, 135}, {212, 135}, leading_coefficient()};
}

nlohmann::json to_json(const complexity_row& row) {
  nlohmann::json j;
  j["n"] = row.n;
  j["T"] = row.t;
  j["T_hat"] = row.t_hat;
  if (row.t_hathat)
    j["T_hathat"] = *row.t_hathat;
  if (row.t_hathat_pr)
    j["T_hathat_pr"] = *row.t_hathat_pr;
  if (row.t_hathat_tr)
    j["T_hathat_tr"] = *row.t_hathat_tr;
  return j;
}

} // namespace rhomboid
