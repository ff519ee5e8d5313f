#include "rhomboid/vda.hpp"

#include <algorithm>
#include <array>

#include "rhomboid/error.hpp"

namespace rhomboid {

namespace {

using K = terminal_kind;

constexpr std::array<base_pattern, 18> all_base_patterns{{
    {K::basic, K::basic, 0},
    {K::basic, K::upper, 0},
    {K::basic, K::lower, 0},
    {K::upper, K::basic, 1},
    {K::lower, K::basic, 1},
    {K::upper, K::upper, 1},
    {K::upper, K::lower, 1},
    {K::lower, K::upper, 1},
    {K::lower, K::lower, 1},
    {K::basic, K::basic, 1},
    {K::basic, K::upper, 1},
    {K::basic, K::lower, 1},
    {K::upper, K::basic, 2},
    {K::lower, K::basic, 2},
    {K::upper, K::upper, 2},
    {K::upper, K::lower, 2},
    {K::lower, K::upper, 2},
    {K::lower, K::lower, 2},
}};

char kind_char(K k) {
  return k == K::basic ? 'b' : k == K::upper ? 'u' : 'l';
}

expr a(std::uint32_t i) { return lit(label_a(i)); }
expr b(std::uint32_t i) { return lit(label_b(i)); }
expr c(std::uint32_t i) { return lit(label_c(i)); }
expr d(std::uint32_t i) { return lit(label_d(i)); }
expr e(std::uint32_t i) { return lit(label_e(i)); }

} // namespace

std::string base_pattern::to_string() const {
  std::string out = "E(";
  out += kind_char(src);
  out += "_p,";
  out += kind_char(dst);
  out += "_p";
  if (offset != 0)
    out += "+" + std::to_string(offset);
  out += ')';
  return out;
}

std::span<const base_pattern> base_patterns() { return all_base_patterns; }

bool published_form_differs(const base_pattern& pattern) {
  return pattern.offset == 2 && pattern.src == pattern.dst &&
         pattern.src != K::basic;
}

std::uint32_t choose_split(subgraph_family family, std::uint32_t p,
                           std::uint32_t q, split_rounding rounding) {
  using F = subgraph_family;
  bool basic_source = family == F::sr || family == F::sl_basic_upper ||
                      family == F::sl_basic_lower;
  // Guards: q > p+1 with a basic source, q > p+2 otherwise.
  std::uint32_t min_q = basic_source ? p + 2 : p + 3;
  if (q < min_q)
    throw error(errc::base_case_expected,
                std::string(to_string(family)) + " from " + std::to_string(p) +
                    " to " + std::to_string(q) + " is a base case");
  std::uint64_t twice_mid = std::uint64_t{q} + p + (is_dipterous(family) ? 1 : 0);
  auto i = static_cast<std::uint32_t>(
      rounding == split_rounding::ceil ? (twice_mid + 1) / 2 : twice_mid / 2);
  std::uint32_t lo = basic_source ? p + 1 : p + 2;
  std::uint32_t hi = q - 1;
  return std::clamp(i, lo, hi);
}

expr base_expression(const subexpr_key& key, base_variant variant) {
  subgraph_kind kind = classify(key.src, key.dst);
  if (kind.size > 2)
    throw error(errc::base_case_expected,
                "E(" + key.src.to_string() + "," + key.dst.to_string() +
                    ") has size " + std::to_string(kind.size));
  const std::uint32_t p = key.src.index;
  const std::uint32_t offset = key.dst.index - p;
  const bool published = variant == base_variant::as_published;

  switch (key.src.kind) {
  case K::basic:
    if (offset == 0) {
      switch (key.dst.kind) {
      case K::basic:
        return expr::one();
      case K::upper:
        return e(2 * p - 1);
      case K::lower:
        return d(2 * p - 1);
      }
    }
    switch (key.dst.kind) {
    case K::basic:
      return b(p) + e(2 * p - 1) * e(2 * p) + d(2 * p - 1) * d(2 * p);
    case K::upper:
      return (b(p) + d(2 * p - 1) * d(2 * p)) * e(2 * p + 1) +
             e(2 * p - 1) * (c(p) + e(2 * p) * e(2 * p + 1));
    case K::lower:
      return (b(p) + e(2 * p - 1) * e(2 * p)) * d(2 * p + 1) +
             d(2 * p - 1) * (a(p) + d(2 * p) * d(2 * p + 1));
    }
    break;

  case K::upper:
    if (offset == 1) {
      switch (key.dst.kind) {
      case K::basic:
        return e(2 * p);
      case K::upper:
        return c(p) + e(2 * p) * e(2 * p + 1);
      case K::lower:
        return e(2 * p) * d(2 * p + 1);
      }
    }
    switch (key.dst.kind) {
    case K::basic:
      return (c(p) + e(2 * p) * e(2 * p + 1)) * e(2 * p + 2) +
             e(2 * p) * (b(p + 1) + d(2 * p + 1) * d(2 * p + 2));
    case K::upper: {
      expr through_basic =
          e(2 * p) * (b(p + 1) + d(2 * p + 1) * d(2 * p + 2)) * e(2 * p + 3);
      if (published)
        return through_basic + (a(p) + d(2 * p) * d(2 * p + 1)) *
                                   (a(p + 1) + d(2 * p + 2) * d(2 * p + 3));
      return through_basic + (c(p) + e(2 * p) * e(2 * p + 1)) *
                                 (c(p + 1) + e(2 * p + 2) * e(2 * p + 3));
    }
    case K::lower:
      return e(2 * p) * (b(p + 1) * d(2 * p + 3) +
                         d(2 * p + 1) * (a(p + 1) + d(2 * p + 2) * d(2 * p + 3))) +
             (c(p) + e(2 * p) * e(2 * p + 1)) * e(2 * p + 2) * d(2 * p + 3);
    }
    break;

  case K::lower:
    if (offset == 1) {
      switch (key.dst.kind) {
      case K::basic:
        return d(2 * p);
      case K::upper:
        return d(2 * p) * e(2 * p + 1);
      case K::lower:
        return a(p) + d(2 * p) * d(2 * p + 1);
      }
    }
    switch (key.dst.kind) {
    case K::basic:
      return (a(p) + d(2 * p) * d(2 * p + 1)) * d(2 * p + 2) +
             d(2 * p) * (b(p + 1) + e(2 * p + 1) * e(2 * p + 2));
    case K::upper:
      return d(2 * p) * (b(p + 1) * e(2 * p + 3) +
                         e(2 * p + 1) * (c(p + 1) + e(2 * p + 2) * e(2 * p + 3))) +
             (a(p) + d(2 * p) * d(2 * p + 1)) * d(2 * p + 2) * e(2 * p + 3);
    case K::lower: {
      expr through_basic =
          d(2 * p) * (b(p + 1) + e(2 * p + 1) * e(2 * p + 2)) * d(2 * p + 3);
      if (published)
        return through_basic + (c(p) + e(2 * p) * e(2 * p + 1)) *
                                   (c(p + 1) + e(2 * p + 2) * e(2 * p + 3));
      return through_basic + (a(p) + d(2 * p) * d(2 * p + 1)) *
                                 (a(p + 1) + d(2 * p + 2) * d(2 * p + 3));
    }
    }
    break;
  }
  throw error(errc::integrity, "unhandled base shape");
}

generator::generator(std::uint32_t n, vda_config config)
    : n_(n), config_(config) {
  if (n == 0)
    throw error(errc::invalid_size, "square rhomboid size must be >= 1");
}

expr generator::expression(const subexpr_key& key) {
  for (const terminal& t : {key.src, key.dst}) {
    std::uint32_t top = t.is_basic() ? n_ : n_ - 1;
    if (t.index < 1 || t.index > top)
      throw error(errc::range, "terminal " + t.to_string() +
                                   " is outside SR(" + std::to_string(n_) + ")");
  }
  classify(key.src, key.dst);
  return build(key);
}

expr generator::build(const subexpr_key& key) {
  if (config_.memoize) {
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
  }
  subgraph_kind kind = classify(key.src, key.dst);
  expr result;
  if (kind.size <= 2) {
    result = base_expression(key);
  } else {
    std::uint32_t i = choose_split(kind.family, key.src.index, key.dst.index,
                                   config_.rounding);
    result = expr::sum({
        build({key.src, basic(i)}) * build({basic(i), key.dst}),
        expr::product({build({key.src, upper(i - 1)}), c(i - 1),
                       build({upper(i), key.dst})}),
        expr::product({build({key.src, lower(i - 1)}), a(i - 1),
                       build({lower(i), key.dst})}),
    });
  }
  if (config_.memoize)
    memo_.emplace(key, result);
  return result;
}

expr generate(std::uint32_t n, vda_config config) {
  generator gen(n, config);
  return gen.expression(basic(1), basic(n));
}

} // namespace rhomboid
