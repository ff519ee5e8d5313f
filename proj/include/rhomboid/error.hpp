#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhomboid {

/// Failure categories raised by the library. The CLI maps these onto exit
/// codes, so every throw site picks the category that describes the caller's
/// mistake rather than the place it was detected.
enum class errc {
  invalid_size,       ///< a size argument is out of its domain (e.g. n = 0)
  range,              ///< a terminal or label lies outside the ambient graph
  ordering,           ///< a terminal pair is not source-before-sink
  empty_subgraph,     ///< no directed path connects the requested terminals
  capacity,           ///< an expansion or enumeration exceeds its limit
  unbound_label,      ///< an evaluation met a literal with no assigned value
  base_case_expected, ///< a recursive split was requested below its guard
  domain,             ///< argument outside a function's mathematical domain
  integrity,          ///< an internal consistency check failed
  parse,              ///< malformed textual or JSON input
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace rhomboid
