#include "rhomboid/label.hpp"

#include <charconv>

#include "rhomboid/error.hpp"

namespace rhomboid {

namespace {

constexpr std::uint32_t max_index = 0x00ffffffu;

std::uint32_t parse_index(std::string_view digits, std::string_view whole) {
  std::uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} ||
      ptr != digits.data() + digits.size() || value == 0 || value > max_index)
    throw error(errc::parse, "bad index in '" + std::string(whole) + "'");
  return value;
}

} // namespace

char to_char(edge_letter letter) noexcept {
  return static_cast<char>('a' + static_cast<int>(letter));
}

edge_label::edge_label(edge_letter letter, std::uint32_t index) {
  if (index == 0 || index > max_index)
    throw error(errc::range, "edge index out of range: " + std::to_string(index));
  key_ = (std::uint32_t{static_cast<std::uint8_t>(letter)} << 24) | index;
}

std::string edge_label::to_string() const {
  return to_char(letter()) + std::to_string(index());
}

edge_label edge_label::parse(std::string_view text) {
  if (text.empty() || text[0] < 'a' || text[0] > 'e')
    throw error(errc::parse, "bad edge label '" + std::string(text) + "'");
  return {static_cast<edge_letter>(text[0] - 'a'),
          parse_index(text.substr(1), text)};
}

std::string terminal::to_string() const {
  char prefix = kind == terminal_kind::basic   ? 'b'
                : kind == terminal_kind::upper ? 'u'
                                               : 'l';
  return prefix + std::to_string(index);
}

terminal terminal::parse(std::string_view text) {
  if (text.empty())
    throw error(errc::parse, "empty terminal");
  terminal_kind kind;
  switch (text[0]) {
  case 'b':
    kind = terminal_kind::basic;
    break;
  case 'u':
    kind = terminal_kind::upper;
    break;
  case 'l':
    kind = terminal_kind::lower;
    break;
  default:
    throw error(errc::parse, "bad terminal '" + std::string(text) +
                                 "' (expected b<i>, u<i> or l<i>)");
  }
  return {kind, parse_index(text.substr(1), text)};
}

} // namespace rhomboid
