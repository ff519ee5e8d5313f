#include "doctest.h"

#include "rhomboid/error.hpp"
#include "rhomboid/oracle.hpp"
#include "rhomboid/vda.hpp"

using namespace rhomboid;

namespace {

expr b(unsigned i) { return lit(label_b(i)); }
expr e(unsigned i) { return lit(label_e(i)); }
expr d(unsigned i) { return lit(label_d(i)); }

assignment ones(const labeled_digraph& g) {
  assignment v;
  for (auto l : labels_of(g))
    v[l] = 1;
  return v;
}

} // namespace

TEST_CASE("splitmix64 reference values") {
  // First outputs for seed 0 of the published SplitMix64 reference.
  splitmix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);

  splitmix64 draw(1);
  for (int i = 0; i < 1000; ++i) {
    auto v = draw.uniform_nonzero(6);
    CHECK(v >= 1);
    CHECK(v <= 6);
  }
}

TEST_CASE("path-sum evaluation") {
  prime_field f;
  CHECK(dp_eval(build_sr(1), {}, f) == 1);
  CHECK(dp_eval(build_sr(3), ones(build_sr(3)), f) == 11);
  assignment v{{label_b(1), 2}, {label_e(1), 3}, {label_e(2), 5},
               {label_d(1), 7}, {label_d(2), 11}};
  CHECK(dp_eval(build_sr(2), v, f) == 94);
  CHECK(eval(b(1) + e(1) * e(2) + d(1) * d(2), v, f) == 94);

  for (unsigned n : {1u, 2u, 5u, 17u, 40u, 64u, 100u, 128u}) {
    auto g = build_sr(n);
    big_count expected = path_count(g) % big_count(f.prime());
    CHECK(dp_eval(g, ones(g), f) == static_cast<std::uint64_t>(expected));
  }

  bool raised = false;
  try {
    dp_eval(build_sr(2), {{label_b(1), 1}}, f);
  } catch (const error& err) {
    raised = err.code() == errc::unbound_label;
  }
  CHECK(raised);
}

TEST_CASE("exact check") {
  auto ok = check_exact(generate(3), build_sr(3), 100);
  CHECK(ok.passed);
  CHECK(ok.expression_terms == 11);
  CHECK(ok.graph_paths == 11);
  CHECK(check_exact(expr::one(), build_sr(1), 1).passed);

  auto missing = check_exact(e(1) * e(2) + d(1) * d(2), build_sr(2), 100);
  CHECK_FALSE(missing.passed);
  REQUIRE(missing.witness_monomial);
  CHECK(missing.witness_monomial->to_string() == "b1");
  CHECK(missing.side == witness_side::graph_only);

  auto extra = check_exact(b(1) + e(1) * e(2) + d(1) * d(2) + e(1) * d(2),
                           build_sr(2), 100);
  CHECK_FALSE(extra.passed);
  CHECK(extra.side == witness_side::expression_only);

  auto twice = check_exact(b(1) + b(1) + e(1) * e(2) + d(1) * d(2), build_sr(2), 100);
  CHECK_FALSE(twice.passed);
  CHECK(twice.side == witness_side::duplicate);
  CHECK(twice.witness_monomial->to_string() == "b1");

  bool raised = false;
  try {
    check_exact(generate(6), build_sr(6), 100);
  } catch (const error& err) {
    raised = err.code() == errc::capacity;
  }
  CHECK(raised);

  for (unsigned n = 1; n <= 12; ++n)
    CHECK(check_exact(generate(n), build_sr(n), 2'000'000).passed);
}

TEST_CASE("fingerprint check") {
  auto unit = check_fingerprint(expr::one(), build_sr(1), 1, 0);
  CHECK(unit.passed);
  REQUIRE(unit.transcript.size() == 1);
  CHECK(unit.transcript[0].expression_value == 1);
  CHECK(unit.transcript[0].graph_value == 1);

  auto swapped = check_fingerprint(b(1) + e(1) * d(2) + d(1) * d(2), build_sr(2), 10, 1);
  CHECK_FALSE(swapped.passed);
  REQUIRE(swapped.witness_trial);
  CHECK(swapped.transcript.size() == swapped.witness_trial->trial + 1);
  CHECK_FALSE(swapped.transcript.back().agrees());

  for (unsigned n = 2; n <= 10; ++n) {
    auto g = build_sr(n);
    CHECK(check_fingerprint(generate(n), g, 5, n).passed);
  }
  for (unsigned n = 1; n <= 128; n += (n < 16 ? 1 : 7))
    CHECK(check_fingerprint(generate(n), build_sr(n), 10, 42).passed);

  auto x = check_fingerprint(generate(64), build_sr(64), 10, 42);
  auto y = check_fingerprint(generate(64), build_sr(64), 10, 42);
  CHECK(x.passed);
  CHECK(x.transcript == y.transcript);
  CHECK(to_json(x).dump() == to_json(y).dump());
  auto z = check_fingerprint(generate(64), build_sr(64), 10, 43);
  CHECK(z.transcript != x.transcript);

  // Small prime still above twice the longest path.
  CHECK(check_fingerprint(generate(16), build_sr(16), 10, 7, prime_field(101)).passed);

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const error& err) {
      return err.code();
    }
    return errc::integrity;
  };
  CHECK(code([] { check_fingerprint(generate(2), build_sr(2), 0, 1); }) == errc::domain);
  CHECK(code([] { check_fingerprint(generate(16), build_sr(16), 1, 1, prime_field(59)); }) ==
        errc::domain);
  CHECK(code([] { prime_field(100); }) == errc::domain);
}

TEST_CASE("report json") {
  auto pass = to_json(check_exact(generate(3), build_sr(3), 100));
  CHECK(pass["schema_version"] == 1);
  CHECK(pass["mode"] == "exact");
  CHECK(pass["result"] == "pass");
  auto fp = to_json(check_fingerprint(generate(4), build_sr(4), 3, 42));
  CHECK(fp["mode"] == "fingerprint");
  CHECK(fp["transcript"].size() == 3);
  CHECK(fp["seed"] == 42);
}
