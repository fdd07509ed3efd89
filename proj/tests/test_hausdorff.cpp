#include <doctest.h>

#include <random>

#include "qdt/gallery.hpp"
#include "qdt/hausdorff.hpp"
#include "qdt/metric.hpp"
#include "qdt/wbd.hpp"
#include "support.hpp"

using namespace qdt;
using namespace qdt::test;

namespace {

ExtReal upper_oracle(const GRel& d, Subset y, Subset z) {
  ExtReal best = ExtReal::infinity();
  for (auto b : z.elements()) {
    ExtReal worst;
    for (auto a : y.elements()) worst = std::max(worst, d(a, b));
    best = std::min(best, worst);
  }
  return best;
}

ExtReal lower_oracle(const GRel& d, Subset y, Subset z) {
  ExtReal worst;
  for (auto a : y.elements()) {
    ExtReal best = ExtReal::infinity();
    for (auto b : z.elements()) best = std::min(best, d(a, b));
    worst = std::max(worst, best);
  }
  return worst;
}

ExtReal at(const PowersetRel& r, Subset y, Subset z) { return r.values(*r.index_of(y), *r.index_of(z)); }

}  // namespace

TEST_CASE("Hausdorff examples on the truncated grid") {
  const GRel q3 = grid_truncated(3);
  auto up = hausdorff_upper(q3);
  auto lo = hausdorff_lower(q3);
  CHECK(at(up, Subset::of({0, 2}), Subset::of({1})) == q(1, 2));
  CHECK(at(lo, Subset::of({0, 2}), Subset::of({1})) == q(1, 2));
  CHECK(at(lo, Subset{}, Subset::of({1})) == ExtReal());
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(at(up, Subset::singleton(x), Subset::singleton(y)) == q3(x, y));

  const GRel m = discrete_metric(2);
  auto mu = hausdorff_upper(m);
  CHECK(at(mu, Subset::full(2), Subset::full(2)) == m(0, 1));
  CHECK(m(0, 1) > ExtReal());
}

TEST_CASE("Hausdorff tables match the inf-sup formulas") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = random_rel(rng, n);
    auto up = hausdorff_upper(d);
    auto lo = hausdorff_lower(d);
    CHECK(up.family.members.size() == powerset_size(n));
    for (Subset y : up.family.members)
      for (Subset z : up.family.members) {
        CHECK(at(up, y, z) == upper_oracle(d, y, z));
        CHECK(at(lo, y, z) == lower_oracle(d, y, z));
        CHECK(at(lo, y, z) <= at(up, y, z));
      }
  }
}

TEST_CASE("families") {
  const GRel g = grid_product(3);
  auto dir = directed_family(g);
  for (Subset s : dir.members) CHECK(is_directed(s, g));
  CHECK(dir.members.size() == directed_subsets(g).size());
  auto idl = ideal_family(g);
  for (Subset s : idl.members) CHECK(is_ideal(s, g));
  auto up = hausdorff_upper(g, dir);
  CHECK(up.values.rows() == dir.members.size());
  CHECK_FALSE(up.index_of(Subset::of({0, 1})).has_value());
}

TEST_CASE("hausfunc holds on the gallery and random pairs") {
  CHECK(check_hausfunc(grid_truncated(3), grid_truncated(3)).status == Status::holds);
  const GRel id = GRel::identity(unit_grid(3));
  CHECK_FALSE(check_hausfunc(grid_product(3), id).failed());
  std::mt19937_64 rng(42);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = random_distance(rng, n), e = random_distance(rng, n);
    auto rep = check_hausfunc(d, e);
    INFO(format_table(d) << format_table(e) << rep.to_text());
    CHECK_FALSE(rep.failed());
  }
}

TEST_CASE("Hausdorff property: unions bound directed families") {
  for (auto name : {"G3", "Q3", "CHAIN3", "X3NR", "METRIC2"}) {
    auto rep = check_hausdorff_prop(gallery(name));
    INFO(name << "\n" << rep.to_text());
    CHECK_FALSE(rep.failed());
  }
  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 3);
    CHECK_FALSE(check_hausdorff_prop(d).failed());
  }
}

TEST_CASE("predomain completion of the truncated grid") {
  const GRel q3 = grid_truncated(3);
  auto c = complete_predomain(q3);
  CHECK_FALSE(c.report.failed());
  REQUIRE(c.embedding.size() == 3);
  const Subset down1 = c.rel.family.members[c.embedding[2]];
  const Subset down_half = c.rel.family.members[c.embedding[1]];
  CHECK(down1 == Subset::full(3));
  CHECK(down_half == Subset::of({0, 1}));
  CHECK(c.rel.values(c.embedding[2], c.embedding[1]) == q(1, 2));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(c.rel.values(c.embedding[x], c.embedding[y]) == q3(x, y));
  auto dom = check_domain(c.rel.values, DomainKind::max);
  CHECK(dom.domain);
}

TEST_CASE("completion of the non-reflexive max and of a point") {
  const GRel nr = nonreflexive_max();
  auto c = complete_predomain(nr);
  CHECK_FALSE(c.report.failed());
  bool strict = false;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      const ExtReal v = c.rel.values(c.embedding[x], c.embedding[y]);
      CHECK(v <= nr(x, y));
      if (v < nr(x, y)) strict = true;
    }
  CHECK(strict);

  GRel one(Carrier({"p"}));
  auto single = complete_predomain(one);
  CHECK(single.rel.family.members.size() == 1);

  CHECK_THROWS_AS(complete_predomain(grid_product(3)), PreconditionError);
}

TEST_CASE("quotiented completion merges equivalent directed sets") {
  const GRel q3 = grid_truncated(3);
  auto plain = complete_predomain(q3);
  auto merged = complete_predomain(q3, true);
  CHECK(merged.rel.values.rows() <= plain.rel.values.rows());
  CHECK(merged.rel.values.rows() == 3);
}

TEST_CASE("pdcomp, universality and dHhemi") {
  CHECK_FALSE(check_pdcomp(grid_truncated(3)).failed());
  CHECK_FALSE(check_pdcomp(nonreflexive_max()).failed());
  CHECK(check_universality(Subset::full(3), grid_truncated(3)).status == Status::holds);
  CHECK(check_universality(Subset::of({0, 2}), grid_truncated(3)).status == Status::not_applicable);

  // the top of Q3 doubled
  GRel q4 = table({"0", "1/2", "1", "1'"}, {{"0", "0", "0", "0"},
                                            {"1/2", "0", "0", "0"},
                                            {"1", "1/2", "0", "0"},
                                            {"1", "1/2", "0", "0"}});
  CHECK(check_universality(Subset::full(4), q4).status == Status::holds);

  CHECK(check_dHhemi(discrete_metric(2)).status == Status::holds);
  CHECK_FALSE(check_dHhemi(grid_truncated(3)).failed());
  CHECK_FALSE(check_dHhemi(GRel(Carrier({"p"}))).failed());
}

TEST_CASE("completion corollaries on random max-continuous distances") {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 40; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 3, it % 2);
    if (!is_max_continuous(d)) continue;
    ++checked;
    auto c = complete_predomain(d);
    INFO(format_table(d) << c.report.to_text());
    CHECK_FALSE(c.report.failed());
    CHECK_FALSE(check_pdcomp(d).failed());
  }
  CHECK(checked > 10);
}
