#pragma once

#include <cstdint>

namespace rhomboid {

__extension__ using u128 = unsigned __int128;

/// 2^61 - 1, the default evaluation modulus.
inline constexpr std::uint64_t mersenne_61 = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in Z/pZ. The modulus is validated on construction.
class prime_field {
public:
  explicit prime_field(std::uint64_t prime = mersenne_61);

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t reduce(std::uint64_t x) const noexcept { return x % p_; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept {
    std::uint64_t s = x + y; // may wrap when p > 2^63
    if (s < x || s >= p_)
      s -= p_;
    return s;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept {
    return static_cast<std::uint64_t>(
        static_cast<u128>(x) * y % p_);
  }

private:
  std::uint64_t p_;
};

} // namespace rhomboid
