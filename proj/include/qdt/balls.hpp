#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdt/grel.hpp"
#include "qdt/profile.hpp"
#include "qdt/report.hpp"

namespace qdt {

// Point of X x [0, inf).
struct FormalBall {
  std::size_t element = 0;
  ExtReal radius;

  friend bool operator==(const FormalBall&, const FormalBall&) = default;
};

// "x@r"
std::string format_ball(const FormalBall& b, const Carrier& c);

// Finite slice of the formal balls: every element at every listed radius.
struct BallGrid {
  Carrier base;
  std::vector<ExtReal> radii;  // ascending, distinct, starts at 0

  std::size_t size() const { return base.size() * radii.size(); }
  FormalBall ball(std::size_t i) const;
  std::vector<FormalBall> balls() const;
  Carrier carrier() const;
};

// Sorts, deduplicates and adds 0; an infinite radius throws std::invalid_argument.
BallGrid make_grid(const Carrier& base, std::vector<ExtReal> radii);
// 0, the finite table values and the midpoint of each consecutive pair.
BallGrid table_grid(const GRel& d);
BallGrid table_grid(const GRel& d, const GRel& e);
// Adds the midpoint of each consecutive pair and one point past the largest radius.
BallGrid refine(const BallGrid& g);

std::vector<ExtReal> finite_values(const GRel& d);
// Sample points for predicates that only change truth value at the given thresholds:
// the thresholds, 0, a midpoint in every gap and one point beyond the largest.
std::vector<ExtReal> cell_points(std::vector<ExtReal> thresholds);
// cell_points of the anchors shifted up and down by up to `depth` table values.
std::vector<ExtReal> witness_radii(const std::vector<ExtReal>& anchors, const std::vector<ExtReal>& values,
                                   int depth = 1);

// (xdy - r + s)+
ExtReal fb_distance(const GRel& d, const FormalBall& a, const FormalBall& b);
// xdy <= r - s
bool fb_leq(const GRel& d, const FormalBall& a, const FormalBall& b);
// xdy < r - s
bool fb_lt(const GRel& d, const FormalBall& a, const FormalBall& b);
// d+ on the grid balls, labelled x@r
GRel ball_relation(const GRel& d, const BallGrid& g);

// min{r in radii : (x,r) <= (y,0)}; inf when none qualifies.
ExtReal recover_distance(const GRel& d, std::size_t x, std::size_t y, const std::vector<ExtReal>& radii);
// Lower and upper reflexivizations of d+ at a pair of balls, sup taken over all balls.
ExtReal ball_reflex_lower(const GRel& d, const FormalBall& a, const FormalBall& b);
ExtReal ball_reflex_upper(const GRel& d, const FormalBall& a, const FormalBall& b);
// a <d+ b from the definition: some eps > 0 with every c, b lower(d+) c < eps, above a.
bool strict_by_definition(const GRel& d, const FormalBall& a, const FormalBall& b);

// inf of radii; inf on the empty family
ExtReal aperture(const std::vector<FormalBall>& y);
// Y upper Z = inf_{z} sup_{y} y d+ z
ExtReal ball_hausdorff_upper(const GRel& d, const std::vector<FormalBall>& y, const std::vector<FormalBall>& z);
// Y lower Z = sup_{y} inf_{z} y d+ z
ExtReal ball_hausdorff_lower(const GRel& d, const std::vector<FormalBall>& y, const std::vector<FormalBall>& z);

// {(z,t) on the grid : z in basis, zdx <= t}
std::vector<FormalBall> principal_family(const GRel& d, std::size_t x, const BallGrid& g, Subset basis);
std::vector<FormalBall> principal_family(const GRel& d, std::size_t x, const BallGrid& g);

// Strict order of the formal balls, decided through the tails of d-Cauchy nets:
// a directed family {(t, alpha + rho) : t in T, rho > 0} per tail T and aperture alpha.
bool strict_max_continuous(const GRel& d, const BallGrid& g);
bool strict_max_complete(const GRel& d, const BallGrid& g);
// underline(<d+) is below overline(<d+) on every grid pair
bool strict_reflexive_order(const GRel& d, const BallGrid& g);

Report check_xdy(const GRel& d);
Report check_bfunc(const GRel& d, const GRel& e);
Report check_bunder_binter(const GRel& d, const GRel& e);
Report check_alphatri(const GRel& d, const BallGrid& g, std::uint64_t seed, std::size_t samples = 200);
Report check_contdomballs(const GRel& d, const BallGrid& g);
Report check_contdomballs(const GRel& d);
Report check_kw(const GRel& d);
Report check_rv(const GRel& d);
Report check_esmyth(const GRel& d, const std::vector<NetProfile>& profiles = {});
Report check_top_completion(const GRel& d);
Report check_top_universality(Subset basis, const GRel& d);

}  // namespace qdt
