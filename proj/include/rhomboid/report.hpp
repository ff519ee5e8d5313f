#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rhomboid/complexity.hpp"
#include "rhomboid/vda.hpp"

namespace rhomboid {

/// A published base count set against independently derived values.
struct count_check {
  count_family family;
  std::uint32_t size;
  std::uint64_t published;
  std::uint64_t generated;    ///< literal count of the generated expression
  std::uint64_t by_recurrence; ///< from the size-1/2 bases alone

  bool consistent() const noexcept {
    return published == generated && published == by_recurrence;
  }
};

/// A published base formula run through the exact path oracle.
struct formula_check {
  base_pattern pattern;
  std::string published_text;
  bool published_sound = false;
  std::string published_witness; ///< first failing position, if any
  bool corrected_sound = false;
  std::uint64_t published_literals = 0;
  std::uint64_t corrected_literals = 0;
};

struct discrepancy_report {
  std::vector<count_check> counts;
  std::vector<formula_check> formulas;

  std::size_t flagged() const noexcept;
};

/// Checks every published base count against generation and the extended
/// recurrence, and every published base formula at every position inside
/// SR(`ambient`) against the induced subgraph's path set.
discrepancy_report build_discrepancy_report(std::uint32_t ambient = 8);

nlohmann::json to_json(const discrepancy_report& report);
std::string to_text(const discrepancy_report& report);

} // namespace rhomboid
