#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rhomboid/error.hpp"
#include "rhomboid/expr.hpp"
#include "rhomboid/field.hpp"

using namespace rhomboid;

namespace {

expr b(unsigned i) { return lit(label_b(i)); }
expr e(unsigned i) { return lit(label_e(i)); }
expr d(unsigned i) { return lit(label_d(i)); }
expr c(unsigned i) { return lit(label_c(i)); }
expr a(unsigned i) { return lit(label_a(i)); }

expr sr2() { return b(1) + e(1) * e(2) + d(1) * d(2); }

expr sr3() {
  return (b(1) + e(1) * e(2) + d(1) * d(2)) * (b(2) + e(3) * e(4) + d(3) * d(4)) +
         e(1) * c(1) * e(4) + d(1) * a(1) * d(4);
}

// Random expression over a small alphabet, with occasional units.
expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = pick(rng);
  if (depth == 0 || r < 3) {
    if (r == 0)
      return expr::one();
    std::uniform_int_distribution<unsigned> idx(1, 4);
    static const edge_letter letters[] = {edge_letter::a, edge_letter::b,
                                          edge_letter::c, edge_letter::d,
                                          edge_letter::e};
    return lit(edge_label(letters[pick(rng) % 5], idx(rng)));
  }
  std::uniform_int_distribution<int> arity(2, 3);
  std::vector<expr> kids;
  for (int k = arity(rng); k > 0; --k)
    kids.push_back(random_expr(rng, depth - 1));
  return r < 7 ? expr::sum(std::move(kids)) : expr::product(std::move(kids));
}

} // namespace

TEST_CASE("literal counts") {
  CHECK(expr::one().literal_count() == 0);
  CHECK(sr2().literal_count() == 5);
  CHECK(sr3().literal_count() == 16);
  CHECK(literal_count(sr3()) == oracle::leaves(sr3()));
}

TEST_CASE("normalization") {
  auto x = sr2();
  CHECK(x.kind() == expr_kind::sum);
  CHECK(x.children().size() == 3);

  auto flat = expr::product({b(1), expr::product({e(1), e(2)})});
  CHECK(flat.children().size() == 3);

  auto unit = expr::product({expr::one(), b(1), expr::one()});
  CHECK(unit == b(1));
  CHECK(expr::product({}) == expr::one());
  CHECK(expr::product({expr::one(), expr::one()}) == expr::one());
  CHECK(expr::sum({b(1)}) == b(1));

  bool raised = false;
  try {
    expr::sum({});
  } catch (const error& err) {
    raised = err.code() == errc::domain;
  }
  CHECK(raised);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    expr r = random_expr(rng, 4);
    if (r.kind() == expr_kind::sum || r.kind() == expr_kind::product) {
      CHECK(r.children().size() >= 2);
      for (const auto& k : r.children()) {
        CHECK(k.kind() != r.kind());
        if (r.kind() == expr_kind::product)
          CHECK(k.kind() != expr_kind::one);
      }
    }
    CHECK(r.literal_count() == oracle::leaves(r));
  }
}

TEST_CASE("expansion") {
  CHECK(oracle::names(expand(sr2(), 100)) ==
        std::vector<oracle::term>{{"b1"}, {"d1", "d2"}, {"e1", "e2"}});
  auto unit = expand(expr::one(), 1);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].empty());

  auto three = expand(sr3(), 100);
  CHECK(three.size() == 11);
  CHECK(std::set<monomial>(three.begin(), three.end()).size() == 11);
  auto names = oracle::names(three);
  CHECK(names == oracle::distribute(sr3()));
  for (oracle::term t : {oracle::term{"b1", "b2"}, oracle::term{"c1", "e1", "e4"},
                         oracle::term{"a1", "d1", "d4"}})
    CHECK(std::find(names.begin(), names.end(), t) != names.end());

  bool raised = false;
  try {
    expand(sr3(), 10);
  } catch (const error& err) {
    raised = err.code() == errc::capacity;
  }
  CHECK(raised);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    expr x = random_expr(rng, 3), y = random_expr(rng, 3);
    auto ex = expand(x, 1 << 14), ey = expand(y, 1 << 14);
    CHECK(expand(expr::product({x, y}), 1 << 20).size() == ex.size() * ey.size());
    CHECK(expand(expr::sum({x, y}), 1 << 20).size() == ex.size() + ey.size());
    CHECK(oracle::names(ex) == oracle::distribute(x));
  }
}

TEST_CASE("evaluation") {
  prime_field f;
  assignment v{{label_b(1), 2}, {label_e(1), 3}, {label_e(2), 5},
               {label_d(1), 7}, {label_d(2), 11}};
  CHECK(eval(sr2(), v, f) == 94);
  CHECK(eval(expr::one(), {}, f) == 1);

  bool raised = false;
  try {
    eval(sr3(), v, f);
  } catch (const error& err) {
    raised = err.code() == errc::unbound_label;
  }
  CHECK(raised);

  // Evaluation agrees with summing the expansion, over a small prime so the
  // modular wrap is exercised.
  prime_field small(1'000'003);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> value(1, small.prime() - 1);
  for (int t = 0; t < 300; ++t) {
    expr x = random_expr(rng, 4);
    assignment s;
    for (auto l : labels_in(x))
      s[l] = value(rng);
    std::uint64_t sum = 0;
    for (const auto& m : expand(x, 10'000)) {
      std::uint64_t prod = 1;
      for (auto l : m.labels())
        prod = small.mul(prod, s.at(l));
      sum = small.add(sum, prod);
    }
    CHECK(eval(x, s, small) == sum);
  }
}

TEST_CASE("text rendering") {
  CHECK(to_text(expr::one()) == "1");
  CHECK(to_text(sr2()) == "b1+e1*e2+d1*d2");
  CHECK(to_text(sr2(), {true}) == "b1+e1e2+d1d2");
  CHECK(to_text(sr3()) == "(b1+e1*e2+d1*d2)*(b2+e3*e4+d3*d4)+e1*c1*e4+d1*a1*d4");
  std::ostringstream os;
  os << sr2();
  CHECK(os.str() == "b1+e1*e2+d1*d2");

  // Distinct normalized trees print distinctly.
  std::mt19937_64 rng(5);
  std::vector<expr> pool;
  for (int t = 0; t < 400; ++t)
    pool.push_back(random_expr(rng, 3));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK((pool[i] == pool[j]) == (to_text(pool[i]) == to_text(pool[j])));
}

TEST_CASE("json round trip") {
  CHECK(to_json(b(3)) == nlohmann::json{{"lit", "b3"}});
  CHECK(to_json(expr::one()) == nlohmann::json{{"one", true}});
  CHECK(expr_from_json(to_json(sr3())) == sr3());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    expr x = random_expr(rng, 4);
    CHECK(expr_from_json(to_json(x)) == x);
  }
}
