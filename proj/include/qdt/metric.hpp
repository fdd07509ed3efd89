#pragma once

#include <string>
#include <vector>

#include "qdt/grel.hpp"
#include "qdt/report.hpp"

namespace qdt {

struct Classification {
  bool is_distance = false;
  bool is_reflexive = false;
  bool is_hemimetric = false;
  bool is_quasimetric = false;
  bool is_metric = false;
  bool is_symmetric = false;
};

Classification classify(const GRel& d);
// strongest applicable name: metric, quasimetric, hemimetric, distance or relation
std::string strongest_name(const Classification& c);

bool is_distance(const GRel& d);
bool is_reflexive(const GRel& d);
bool is_hemimetric(const GRel& d);
bool is_symmetric(const GRel& d);

GRel reflexivize_upper(const GRel& d);
GRel reflexivize_lower(const GRel& d);

Report check_hemiprop(const GRel& d);

struct Quotient {
  GRel rel;
  std::vector<std::size_t> mapping;  // element -> class index
};
// Merges elements with identical rows and identical columns.
Quotient quotient_equivalent(const GRel& d);

enum class BallKind { upper, lower };
// upper: {x : cdx < r}, lower: {x : xdc < r}
Subset ball(const GRel& d, std::size_t c, const ExtReal& r, BallKind kind);
// upper hole: {x : xdc > r}, lower hole: {x : cdx > r}
Subset hole(const GRel& d, std::size_t c, const ExtReal& r, BallKind kind);

enum class Subbasic { upper_ball, lower_ball, upper_hole, lower_hole };

// Every distinct ball or hole of the given kinds; radii range over table values and inf.
std::vector<Subset> subbasic_sets(const GRel& d, const std::vector<Subbasic>& kinds);
// All opens generated by the subbasis, sorted by bit pattern.
std::vector<Subset> generated_topology(std::size_t n, const std::vector<Subset>& subbasis);
std::vector<Subset> generated_topology(const GRel& d, const std::vector<Subbasic>& kinds);
// Intersection of every subbasic set containing x (the least open around x).
Subset minimal_neighbourhood(std::size_t n, const std::vector<Subset>& subbasis, std::size_t x);

GRel restrict(const GRel& d, Subset y);
// x (d o Y o e) z = inf_{y in Y} (xdy + yez)
GRel compose_through(const GRel& d, Subset y, const GRel& e);
Report check_reflexrestrict(const GRel& d, Subset y);

// Reflexivization recovered from ball inclusions alone (upper -> d-bar, lower -> d-underbar).
GRel reflexivization_from_balls(const GRel& d, BallKind kind);

}  // namespace qdt
