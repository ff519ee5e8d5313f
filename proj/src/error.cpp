#include "rhomboid/error.hpp"

namespace rhomboid {

std::string_view to_string(errc code) noexcept {
  switch (code) {
  case errc::invalid_size:
    return "invalid-size";
  case errc::range:
    return "range";
  case errc::ordering:
    return "ordering";
  case errc::empty_subgraph:
    return "empty-subgraph";
  case errc::capacity:
    return "capacity";
  case errc::unbound_label:
    return "unbound-label";
  case errc::base_case_expected:
    return "base-case-expected";
  case errc::domain:
    return "domain";
  case errc::integrity:
    return "integrity";
  case errc::parse:
    return "parse";
  }
  return "unknown";
}

} // namespace rhomboid
