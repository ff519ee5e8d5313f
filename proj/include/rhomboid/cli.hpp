#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rhomboid/field.hpp"
#include "rhomboid/vda.hpp"

namespace rhomboid::cli {

enum class output_format : std::uint8_t { text, json };

/// Settings shared by the subcommands. Defaults give byte-identical output
/// across runs.
struct config {
  std::uint32_t n = 0;
  split_rounding rounding = split_rounding::ceil;
  output_format output = output_format::text;
  std::uint64_t seed = 42;
  std::uint64_t trials = 10;
  std::uint64_t prime = mersenne_61;
  std::uint64_t limit = 1'000'000;
};

/// Exit codes: 0 success, 1 verification or consistency failure, 2 usage
/// error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace rhomboid::cli
