#include <doctest.h>

#include <random>

#include "qdt/balls.hpp"
#include "qdt/gallery.hpp"
#include "qdt/metric.hpp"
#include "support.hpp"

using namespace qdt;
using namespace qdt::test;

namespace {

FormalBall fb(std::size_t x, ExtReal r) { return {x, r}; }

// (xdy - r + s)+ written with explicit rationals.
ExtReal fb_oracle(const GRel& d, const FormalBall& a, const FormalBall& b) {
  if (d(a.element, b.element).is_infinite()) return ExtReal::infinity();
  return truncated_sub(d(a.element, b.element) + b.radius, a.radius);
}

}  // namespace

TEST_CASE("formal ball distance examples") {
  const GRel q3 = grid_truncated(3);
  CHECK(fb_distance(q3, fb(2, q(1, 4)), fb(1, 0)) == q(1, 4));
  CHECK(fb_distance(q3, fb(1, q(1, 2)), fb(1, q(1, 4))) == ExtReal());
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(fb_distance(q3, fb(x, 0), fb(y, 0)) == q3(x, y));
  CHECK(format_ball(fb(1, q(1, 4)), unit_grid(3)) == "1/2@1/4");
}

TEST_CASE("formal ball order examples") {
  const GRel q3 = grid_truncated(3);
  CHECK(fb_leq(q3, fb(2, q(7, 10)), fb(1, q(2, 10))));
  CHECK_FALSE(fb_lt(q3, fb(2, q(7, 10)), fb(1, q(2, 10))));
  CHECK(fb_lt(q3, fb(2, q(8, 10)), fb(1, q(2, 10))));
  for (std::size_t x = 0; x < 3; ++x) CHECK(fb_leq(q3, fb(x, q(1, 3)), fb(x, q(1, 3))));
  CHECK_FALSE(fb_leq(grid_product(3), fb(1, 0), fb(1, 0)));
}

TEST_CASE("formula agrees with the oracle and with the order") {
  std::mt19937_64 rng(51);
  const ExtReal radii[] = {0, q(1, 4), q(1, 2), 1, 3};
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 3;
    GRel d = random_rel(rng, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (auto r : radii)
          for (auto s : radii) {
            const FormalBall a = fb(x, r), b = fb(y, s);
            CHECK(fb_distance(d, a, b) == fb_oracle(d, a, b));
            CHECK(fb_leq(d, a, b) == (d(x, y).is_finite() && d(x, y) + s <= r));
            if (fb_lt(d, a, b)) CHECK(fb_leq(d, a, b));
          }
  }
}

TEST_CASE("grids") {
  auto g = make_grid(unit_grid(3), {q(1, 2), 0, q(1, 2), 1});
  CHECK(g.radii == std::vector<ExtReal>{0, q(1, 2), 1});
  CHECK(g.size() == 9);
  CHECK(format_ball(g.ball(4), g.base) == "1/2@1/2");
  CHECK(g.carrier().label(4) == "1/2@1/2");
  CHECK_THROWS(make_grid(unit_grid(3), {ExtReal::infinity()}));
  auto r = refine(g);
  CHECK(r.radii == std::vector<ExtReal>{0, q(1, 4), q(1, 2), q(3, 4), 1, 2});
  auto t = table_grid(grid_truncated(3));
  CHECK(t.radii == std::vector<ExtReal>{0, q(1, 4), q(1, 2), q(3, 4), 1});
  CHECK(cell_points({q(1, 2)}) == std::vector<ExtReal>{0, q(1, 4), q(1, 2), q(3, 2)});
  auto rel = ball_relation(grid_truncated(3), g);
  CHECK(rel(g.size() - 1, 0) == fb_distance(grid_truncated(3), g.ball(g.size() - 1), g.ball(0)));
}

TEST_CASE("recover the distance from the order") {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = random_distance(rng, n);
    const auto radii = table_grid(d).radii;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) CHECK(recover_distance(d, x, y, radii) == d(x, y));
  }
}

TEST_CASE("aperture") {
  CHECK(aperture({fb(0, q(1, 4))}) == q(1, 4));
  CHECK(aperture({fb(0, q(1, 2)), fb(1, 0)}) == ExtReal());
  CHECK(aperture({}).is_infinite());
  std::mt19937_64 rng(53);
  for (int it = 0; it < 100; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 3);
    auto rep = check_alphatri(d, table_grid(d), rng(), 50);
    INFO(rep.to_text());
    CHECK_FALSE(rep.failed());
  }
}

TEST_CASE("ball Hausdorff formulas") {
  const GRel q3 = grid_truncated(3);
  std::vector<FormalBall> y{fb(2, 0), fb(0, q(1, 2))}, z{fb(1, 0)};
  CHECK(ball_hausdorff_upper(q3, y, z) == q(1, 2));
  CHECK(ball_hausdorff_lower(q3, y, z) == q(1, 2));
  CHECK(ball_hausdorff_lower(q3, {}, z) == ExtReal());
}

TEST_CASE("ball lift does not commute with reflexivization in general") {
  // column x all 1, column y all 0
  GRel d = table({"x", "y"}, {{"1", "0"}, {"1", "0"}});
  const FormalBall a = fb(0, 0), b = fb(1, 1);
  CHECK(ball_reflex_lower(d, a, b) == ExtReal());
  CHECK(fb_distance(reflexivize_lower(d), a, b) == ExtReal(1));
  auto rep = check_bfunc(d, d);
  INFO(rep.to_text());
  CHECK_FALSE(rep.failed());
}

TEST_CASE("reflexivizations of the lift under the zero-column hypothesis") {
  std::mt19937_64 rng(54);
  const ExtReal radii[] = {0, q(1, 3), 1};
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 3;
    GRel d = random_distance(rng, n, true);  // zero diagonal: every row and column has a zero
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (auto r : radii)
          for (auto s : radii) {
            CHECK(ball_reflex_lower(d, fb(x, r), fb(y, s)) == fb_distance(reflexivize_lower(d), fb(x, r), fb(y, s)));
            CHECK(ball_reflex_upper(d, fb(x, r), fb(y, s)) == fb_distance(reflexivize_upper(d), fb(x, r), fb(y, s)));
          }
  }
}

TEST_CASE("strict order through the epsilon definition") {
  const GRel q3 = grid_truncated(3);
  CHECK(strict_by_definition(q3, fb(2, 1), fb(1, 0)));
  CHECK_FALSE(strict_by_definition(q3, fb(1, 0), fb(1, 0)));
}

TEST_CASE("xdy, bfunc, bunder and binter on the gallery and random pairs") {
  const GRel q3 = grid_truncated(3), g3 = grid_product(3);
  CHECK(check_xdy(q3).status == Status::holds);
  CHECK(check_bfunc(q3, q3).status == Status::holds);
  CHECK_FALSE(check_bunder_binter(q3, q3).failed());
  CHECK_FALSE(check_bunder_binter(g3, g3).failed());
  CHECK_FALSE(check_bfunc(g3, GRel::identity(unit_grid(3))).failed());
  std::mt19937_64 rng(55);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng() % 3;
    GRel d = random_distance(rng, n), e = random_distance(rng, n);
    for (auto rep : {check_xdy(d), check_bfunc(d, e), check_bunder_binter(d, e)}) {
      INFO(format_table(d) << format_table(e) << rep.to_text());
      CHECK_FALSE(rep.failed());
    }
  }
}

TEST_CASE("continuity, completeness and the completion theorems on balls") {
  for (auto name : {"Q3", "G3", "METRIC2", "X3NR"}) {
    const GRel d = gallery(name);
    for (auto rep : {check_contdomballs(d), check_kw(d), check_rv(d), check_esmyth(d), check_top_completion(d),
                     check_top_universality(Subset::full(d.rows()), d)}) {
      INFO(name << "\n" << rep.to_text());
      CHECK_FALSE(rep.failed());
    }
  }
  GRel one(Carrier({"p"}));
  CHECK_FALSE(check_kw(one).failed());
  CHECK_FALSE(check_esmyth(one).failed());

  std::mt19937_64 rng(56);
  for (int it = 0; it < 30; ++it) {
    GRel d = random_distance(rng, 1 + rng() % 3, it % 2);
    for (auto rep : {check_contdomballs(d), check_kw(d), check_rv(d), check_esmyth(d)}) {
      INFO(format_table(d) << rep.to_text());
      CHECK_FALSE(rep.failed());
    }
  }
}

TEST_CASE("strict order predicates on grids") {
  const GRel q3 = grid_truncated(3);
  auto g = table_grid(q3);
  CHECK(strict_max_continuous(q3, g));
  CHECK(strict_max_complete(q3, g));
  CHECK(strict_reflexive_order(q3, g));
  CHECK(principal_family(q3, 2, g).size() > 0);
}
