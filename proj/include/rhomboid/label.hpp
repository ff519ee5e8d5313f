#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace rhomboid {

/// Edge families of a square rhomboid. Declaration order is the canonical
/// letter order used when sorting monomials.
enum class edge_letter : std::uint8_t { a, b, c, d, e };

char to_char(edge_letter letter) noexcept;

/// An edge name such as `b3` or `e10`.
///
/// Indices are the global indices of the ambient SR(n); subgraphs keep them,
/// so subexpressions compose without relabeling. Labels order by
/// (letter, index).
class edge_label {
public:
  edge_label() = default;
  edge_label(edge_letter letter, std::uint32_t index);

  edge_letter letter() const noexcept {
    return static_cast<edge_letter>(key_ >> 24);
  }
  std::uint32_t index() const noexcept { return key_ & 0x00ffffffu; }

  /// Packed (letter, index); ordering by key is the canonical order.
  std::uint32_t key() const noexcept { return key_; }

  std::string to_string() const;

  /// Parses `<letter><index>`, e.g. `d12`.
  static edge_label parse(std::string_view text);

  friend auto operator<=>(edge_label, edge_label) = default;

private:
  std::uint32_t key_ = 0;
};

inline edge_label label_a(std::uint32_t i) { return {edge_letter::a, i}; }
inline edge_label label_b(std::uint32_t i) { return {edge_letter::b, i}; }
inline edge_label label_c(std::uint32_t i) { return {edge_letter::c, i}; }
inline edge_label label_d(std::uint32_t i) { return {edge_letter::d, i}; }
inline edge_label label_e(std::uint32_t i) { return {edge_letter::e, i}; }

enum class terminal_kind : std::uint8_t { basic, upper, lower };

/// A vertex of a square rhomboid, used directly as the vertex key.
///
/// Upper and lower vertex p sit between basic vertices p and p+1, so a
/// terminal has horizontal position 2p (basic) or 2p+1 (upper/lower).
/// Terminals order by (position, kind); every edge of an SR-family graph
/// strictly increases position, so the order is a topological order.
struct terminal {
  terminal_kind kind = terminal_kind::basic;
  std::uint32_t index = 1;

  std::uint64_t position() const noexcept {
    return 2 * std::uint64_t{index} + (kind == terminal_kind::basic ? 0 : 1);
  }

  bool is_basic() const noexcept { return kind == terminal_kind::basic; }

  /// `b3`, `u3` or `l3`.
  std::string to_string() const;
  static terminal parse(std::string_view text);

  friend bool operator==(const terminal&, const terminal&) = default;
  friend std::strong_ordering operator<=>(const terminal& x,
                                          const terminal& y) noexcept {
    if (auto c = x.position() <=> y.position(); c != 0)
      return c;
    return x.kind <=> y.kind;
  }
};

inline terminal basic(std::uint32_t i) { return {terminal_kind::basic, i}; }
inline terminal upper(std::uint32_t i) { return {terminal_kind::upper, i}; }
inline terminal lower(std::uint32_t i) { return {terminal_kind::lower, i}; }

} // namespace rhomboid

template <> struct std::hash<rhomboid::edge_label> {
  std::size_t operator()(rhomboid::edge_label l) const noexcept {
    return std::hash<std::uint32_t>{}(l.key());
  }
};
