#include <doctest.h>

#include <random>

#include "qdt/gallery.hpp"
#include "qdt/metric.hpp"
#include "qdt/wbd.hpp"
#include "support.hpp"

using namespace qdt;
using namespace qdt::test;

namespace {

// sup over directed Z and bounds z of (xdZ - ydz)+, written out directly.
GRel way_below_oracle(const GRel& d, Bound mode) {
  const std::size_t n = d.rows();
  GRel out(d.source());
  for (std::uint64_t m = 1; m < powerset_size(n); ++m) {
    Subset zs{m};
    if (!is_directed_by_subsets(zs, d)) continue;
    for (auto z : bound_set(zs, d, mode).elements())
      for (std::size_t x = 0; x < n; ++x) {
        ExtReal xdz = ExtReal::infinity();
        for (auto w : zs.elements()) xdz = std::min(xdz, d(x, w));
        for (std::size_t y = 0; y < n; ++y) out(x, y) = std::max(out(x, y), truncated_sub(xdz, d(y, z)));
      }
  }
  return out;
}

GRel poset_table(std::mt19937_64& rng, std::size_t n) {
  Carrier c = Carrier::numbered(n);
  GRel r(c, ExtReal::infinity());
  for (std::size_t i = 0; i < n; ++i) r(i, i) = ExtReal();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng() % 3 == 0) r(i, j) = ExtReal();
  GRel closed = path_closure(r);
  // drop cycles to keep it antisymmetric
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && closed(i, j).is_zero() && closed(j, i).is_zero()) return poset_table(rng, n);
  return closed;
}

}  // namespace

TEST_CASE("relational way-below examples") {
  const GRel chain = chain_order(3);
  CHECK(way_below_relational(chain, Bound::sup) == chain);
  const GRel q3 = grid_truncated(3);
  CHECK(leq(q3, way_below_relational(q3, Bound::max)));
  // no directed sets with bounds: empty sup
  GRel strict = strict_chain(3);
  CHECK(way_below_relational(strict, Bound::sup) == GRel(strict.source()));
}

TEST_CASE("relational way-below matches the explicit double sup") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = (it % 2) ? random_distance(rng, n) : random_rel(rng, n);
    for (Bound b : {Bound::sup, Bound::max}) CHECK(way_below_relational(d, b) == way_below_oracle(d, b));
  }
}

TEST_CASE("finite posets: way-below is the order") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 100; ++it) {
    GRel p = poset_table(rng, 1 + rng() % 5);
    CHECK(way_below_relational(p, Bound::sup) == p);
  }
}

TEST_CASE("topological way-below examples") {
  const GRel q3 = grid_truncated(3);
  CHECK(way_below_topological(q3, {}, kHoleHole) == way_below_relational(q3, Bound::sup));
  const GRel g = grid_product(3);
  CHECK(leq(way_below_topological(g, {}, kHoleHole), g));
  CHECK(way_below_topological(strict_chain(3), {}, kBallHole) == GRel(strict_chain(3).source()));
}

TEST_CASE("relational and topological tables agree for distances") {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 200; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 4, it % 2);
    auto rep = check_way_below_agreement(d);
    INFO(format_table(d) << rep.to_text());
    CHECK_FALSE(rep.failed());
  }
}

TEST_CASE("domain verdicts on the gallery") {
  auto q3 = check_domain(grid_truncated(3), DomainKind::max);
  CHECK(q3.predomain);
  CHECK(q3.domain);

  auto g3 = check_domain(grid_product(3), DomainKind::max);
  CHECK_FALSE(g3.predomain);
  CHECK_FALSE(g3.domain);
  CHECK(reflexivize_upper(grid_product(3)) == reflexivize_lower(grid_product(3)));
  REQUIRE(g3.point);
  CHECK(*g3.point == 1);

  auto nr = check_domain(nonreflexive_max(), DomainKind::max);
  CHECK(is_max_continuous(nonreflexive_max()));
  CHECK_FALSE(nr.predomain);
  REQUIRE(nr.cell);
  CHECK(nr.cell->first == 0);
  CHECK(nr.cell->second == 1);
  CHECK(reflexivize_upper(nonreflexive_max())(0, 1) == ExtReal(1));
  CHECK(reflexivize_lower(nonreflexive_max())(0, 1) == ExtReal());

  CHECK(parse_domain_kind(to_string(DomainKind::ball_hole)) == DomainKind::ball_hole);
  CHECK_THROWS(parse_domain_kind("scott"));
}

TEST_CASE("domain implies predomain") {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = (it % 2) ? random_distance(rng, n) : random_rel(rng, n);
    for (DomainKind k : {DomainKind::max, DomainKind::ball_hole}) {
      auto v = check_domain(d, k);
      if (v.domain) CHECK(v.predomain);
      if (!v.predomain) CHECK_FALSE(v.witness.empty());
    }
  }
}

TEST_CASE("dual characterization on the gallery and random hemimetrics") {
  CHECK(check_dual_characterization(grid_truncated(3), DomainKind::max).status == Status::holds);
  CHECK_FALSE(check_dual_characterization(grid_product(3), DomainKind::max).failed());
  std::mt19937_64 rng(35);
  for (int it = 0; it < 120; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 4, true);
    for (DomainKind k : {DomainKind::max, DomainKind::ball_hole}) {
      auto rep = check_dual_characterization(d, k);
      INFO(format_table(d) << rep.to_text());
      CHECK_FALSE(rep.failed());
    }
  }
}

TEST_CASE("way-below property clauses hold on random relations") {
  std::mt19937_64 rng(36);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = (it % 3) ? random_distance(rng, n) : random_rel(rng, n);
    for (auto rep : {check_rdprops(d, Bound::sup), check_rdprops(d, Bound::max), check_wbprops(d, kHoleHole),
                     check_wbprops(d, kBallHole), check_hole_continuity(d)}) {
      INFO(format_table(d) << rep.to_text());
      CHECK_FALSE(rep.failed());
    }
  }
}

TEST_CASE("hole-hole continuity is reflexivity of the zero relation") {
  CHECK(bool(is_limit_continuous(grid_truncated(3), kHoleHole, Subset::full(3))));
  CHECK_FALSE(bool(is_limit_continuous(grid_product(3), kHoleHole, Subset::full(3))));
}
