#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rhomboid/expr.hpp"
#include "rhomboid/field.hpp"
#include "rhomboid/graph.hpp"

namespace rhomboid {

/*
 * SplitMix64. The transcript format depends on this exact sequence:
 *
 *   state += 0x9e3779b97f4a7c15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
 *   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
 *   return z ^ (z >> 31)
 */
class splitmix64 {
public:
  explicit splitmix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform draw from [1, bound], by rejection of the low 2^64 mod bound
  /// outputs followed by `1 + r % bound`.
  std::uint64_t uniform_nonzero(std::uint64_t bound) noexcept;

private:
  std::uint64_t state_;
};

/// Value of the canonical path-sum of g under `values`, without expanding:
/// value(source) = 1, value(v) = sum over in-edges (u, v, l) of
/// value(u) * values[l], in topological order.
/// Throws errc::unbound_label if an edge label has no value.
std::uint64_t dp_eval(const labeled_digraph& g, const assignment& values,
                      const prime_field& field);

/// Draws one nonzero field element per label, in the given order.
assignment random_assignment(const std::vector<edge_label>& labels,
                             splitmix64& rng, const prime_field& field);

/// Order-sensitive 64-bit digest of an assignment over sorted labels.
std::uint64_t assignment_digest(const std::vector<edge_label>& labels,
                                const assignment& values);

enum class verification_mode : std::uint8_t { exact, fingerprint };

struct trial_record {
  std::uint64_t trial = 0;
  std::uint64_t assignment_digest = 0;
  std::uint64_t expression_value = 0;
  std::uint64_t graph_value = 0;

  bool agrees() const noexcept { return expression_value == graph_value; }
  friend bool operator==(const trial_record&, const trial_record&) = default;
};

/// Where an exact-mode witness monomial was found.
enum class witness_side : std::uint8_t {
  expression_only, ///< produced by the expression, not a path of the graph
  graph_only,      ///< a path the expression misses
  duplicate,       ///< produced more than once by the expression
};

struct verification_report {
  verification_mode mode = verification_mode::exact;
  bool passed = false;

  // exact mode
  std::uint64_t expression_terms = 0;
  std::uint64_t graph_paths = 0;
  std::optional<monomial> witness_monomial;
  witness_side side = witness_side::expression_only;

  // fingerprint mode; the transcript stops at the first disagreeing trial
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> prime;
  std::vector<trial_record> transcript;
  std::optional<trial_record> witness_trial;

  /// One-line human summary of the witness, empty on pass.
  std::string witness_text() const;
};

/// Passes iff expand(e) equals the path monomials of g as multisets and has
/// no repeated monomial. Throws errc::capacity when either side exceeds
/// `limit` terms.
verification_report check_exact(const expr& e, const labeled_digraph& g,
                                std::uint64_t limit);

/*
 * Randomized identity test: `trials` independent nonzero assignments from a
 * seeded splitmix64 stream (labels of g drawn in sorted order, trial after
 * trial), comparing eval(e) against dp_eval(g). A false pass on one trial has
 * probability at most deg / prime with deg <= the longest path of g.
 *
 * Throws errc::domain if trials == 0 or prime <= 2 * longest path length.
 */
verification_report check_fingerprint(const expr& e, const labeled_digraph& g,
                                      std::uint64_t trials, std::uint64_t seed,
                                      const prime_field& field = prime_field{});

/// {schema_version, mode, result, trials, seed, prime, witness?, ...}
nlohmann::json to_json(const verification_report& report);

} // namespace rhomboid
