#include <doctest.h>

#include <random>
#include <set>

#include "qdt/gallery.hpp"
#include "qdt/metric.hpp"
#include "support.hpp"

using namespace qdt;
using qdt::test::q;
using qdt::test::table;

namespace {

bool zero_diagonal(const GRel& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (!d(i, i).is_zero()) return false;
  return true;
}

// Closure of a subbasis under pairwise unions and intersections, with the empty set and X.
std::set<std::uint64_t> brute_topology(std::size_t n, const std::vector<Subset>& sub) {
  std::set<std::uint64_t> t{0, Subset::full(n).bits};
  for (auto s : sub) t.insert(s.bits);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> cur(t.begin(), t.end());
    for (auto a : cur)
      for (auto b : cur) grew |= t.insert(a & b).second | t.insert(a | b).second;
  }
  return t;
}

}  // namespace

TEST_CASE("classification examples") {
  Classification c = classify(grid_truncated(3));
  CHECK(c.is_hemimetric);
  CHECK(c.is_quasimetric);
  CHECK_FALSE(c.is_metric);
  CHECK(strongest_name(c) == "quasimetric");

  const GRel g3 = grid_product(3);
  c = classify(g3);
  CHECK(c.is_distance);
  CHECK_FALSE(c.is_reflexive);
  CHECK(g3(1, 1) == q(1, 4));
  CHECK(strongest_name(c) == "distance");

  c = classify(GRel(Carrier::numbered(3)));
  CHECK(c.is_hemimetric);
  CHECK_FALSE(c.is_quasimetric);
  CHECK(strongest_name(classify(discrete_metric(3))) == "metric");
}

TEST_CASE("classification invariants against literal definitions") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = rng() % 2 ? test::random_distance(rng, n, rng() % 2) : test::random_rel(rng, n);
    const Classification c = classify(d);
    REQUIRE(c.is_distance == test::triangle_holds(d));
    REQUIRE(c.is_reflexive == zero_diagonal(d));
    REQUIRE(c.is_hemimetric == (c.is_distance && c.is_reflexive));
    if (c.is_quasimetric) REQUIRE(c.is_hemimetric);
  }
}

TEST_CASE("reflexivization examples") {
  const GRel g3 = grid_product(3), q3 = grid_truncated(3);
  CHECK(reflexivize_upper(g3) == q3);
  CHECK(reflexivize_lower(g3) == q3);
  CHECK(reflexivize_upper(q3) == q3);
  CHECK(reflexivize_lower(strict_chain(3)) == chain_order(3));
}

TEST_CASE("reflexivizations are hemimetrics and detect the triangle and the diagonal") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = rng() % 3 ? test::random_rel(rng, n) : test::random_distance(rng, n);
    const GRel up = reflexivize_upper(d), low = reflexivize_lower(d);
    REQUIRE(classify(up).is_hemimetric);
    REQUIRE(classify(low).is_hemimetric);
    const bool tri = test::triangle_holds(d);
    REQUIRE(leq(up, d) == tri);
    REQUIRE(leq(low, d) == tri);
    REQUIRE(leq(d, up) == zero_diagonal(d));
    REQUIRE(compose(up, d) == d);
    REQUIRE(compose(d, low) == d);
    Report r = check_hemiprop(d);
    INFO(r.to_text());
    REQUIRE_FALSE(r.failed());
  }
}

TEST_CASE("hemiprop on a table with one triangle violation") {
  GRel d = grid_truncated(3);
  d(0, 2) = 5;  // 0 -> 1 costs 0 through the middle point
  REQUIRE_FALSE(classify(d).is_distance);
  Report r = check_hemiprop(d);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(leq(reflexivize_upper(d), d));
}

TEST_CASE("quotient by equivalence") {
  GRel flat = table({"a", "b"}, {{"0", "0"}, {"0", "0"}});
  CHECK(quotient_equivalent(flat).rel.rows() == 1);
  const GRel q3 = grid_truncated(3);
  Quotient qt = quotient_equivalent(q3);
  CHECK(qt.rel == q3);
  CHECK(qt.mapping == std::vector<std::size_t>{0, 1, 2});

  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 3;
    GRel base = test::random_distance(rng, n - 1, true);
    // duplicate element 0 as element n-1
    GRel d(Carrier::numbered(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) d(x, y) = base(x == n - 1 ? 0 : x, y == n - 1 ? 0 : y);
    Quotient r = quotient_equivalent(d);
    REQUIRE(r.rel.rows() <= n - 1);
    REQUIRE(r.mapping[0] == r.mapping[n - 1]);
    if (classify(d).is_hemimetric) REQUIRE(classify(r.rel).is_quasimetric);
  }
}

TEST_CASE("balls and holes") {
  const GRel g3 = grid_product(3);
  CHECK(ball(g3, 2, q(1, 2), BallKind::upper) == Subset::of({2}));
  CHECK(hole(g3, 2, q(1, 4), BallKind::upper).empty());
  CHECK(ball(grid_truncated(3), 0, kInf, BallKind::upper) == Subset::full(3));
}

TEST_CASE("generated topologies match a brute-force closure") {
  CHECK(generated_topology(grid_product(3), {}).size() == 2);
  const auto q3_upper = generated_topology(grid_truncated(3), {Subbasic::upper_ball});
  // upper balls of the chain: the up-sets {1}, {1/2,1}, X and the empty set
  std::vector<Subset> expect = {Subset{}, Subset::of({2}), Subset::of({1, 2}), Subset::full(3)};
  CHECK(q3_upper == expect);

  std::mt19937_64 rng(53);
  const std::vector<Subbasic> all = {Subbasic::upper_ball, Subbasic::lower_ball, Subbasic::upper_hole,
                                     Subbasic::lower_hole};
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = test::random_rel(rng, n);
    std::vector<Subbasic> kinds;
    for (auto k : all)
      if (rng() % 2) kinds.push_back(k);
    const auto opens = generated_topology(d, kinds);
    const auto oracle = brute_topology(n, subbasic_sets(d, kinds));
    std::set<std::uint64_t> got;
    for (auto s : opens) got.insert(s.bits);
    REQUIRE(got == oracle);
  }
}

TEST_CASE("restriction and reflexivization") {
  const GRel g3 = grid_product(3);
  CHECK(restrict(g3, Subset::full(3)) == g3);
  // composing through {0,1} at (1/2,1/2) gives 1/2 > 1/4, so nothing is claimed
  CHECK(compose_through(g3, Subset::of({0, 2}), g3)(1, 1) == q(1, 2));
  CHECK(check_reflexrestrict(g3, Subset::of({0, 2})).status == Status::not_applicable);
  CHECK(check_reflexrestrict(g3, Subset::full(3)).status == Status::not_applicable);
  const GRel q3 = grid_truncated(3);
  CHECK(check_reflexrestrict(q3, Subset::full(3)).status == Status::holds);
  // a and b are equivalent, so routing through {a,c} loses nothing
  const GRel twin = table({"a", "b", "c"}, {{"0", "0", "1"}, {"0", "0", "1"}, {"2", "2", "0"}});
  Report r = check_reflexrestrict(twin, Subset::of({0, 2}));
  CHECK(r.status == Status::holds);

  // d o Y o d exceeds d: a single zero path through an element outside Y
  GRel d = table({"a", "b", "c"}, {{"1", "0", "1"}, {"1", "1", "0"}, {"1", "1", "1"}});
  d = test::path_closure(d);
  Report na = check_reflexrestrict(d, Subset::of({0, 2}));
  CHECK(na.status == Status::not_applicable);

  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel e = test::random_distance(rng, n);
    Subset y{1 + rng() % ((1u << n) - 1)};
    Report rr = check_reflexrestrict(e, y);
    INFO(rr.to_text());
    REQUIRE_FALSE(rr.failed());
  }
}

TEST_CASE("reflexivizations recovered from ball inclusions") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = test::random_distance(rng, n);
    REQUIRE(reflexivization_from_balls(d, BallKind::lower) == reflexivize_lower(d));
    REQUIRE(reflexivization_from_balls(d, BallKind::upper) == reflexivize_upper(d));
  }
}
