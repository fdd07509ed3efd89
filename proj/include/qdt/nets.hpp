#pragma once

#include "qdt/grel.hpp"
#include "qdt/metric.hpp"
#include "qdt/profile.hpp"
#include "qdt/report.hpp"

namespace qdt {

// All cycle pairs, self pairs included, have value 0.
bool is_precauchy(const NetProfile& p, const GRel& d);
// Evaluated on an unrolled period: sup over later positions at each tail index.
bool is_cauchy(const NetProfile& p, const GRel& d);

enum class Side { none, ball, hole };

// Convergence kind: upper side (balls c-upper-r, holes xdc > r) and lower side.
struct LimitKind {
  Side upper = Side::none;
  Side lower = Side::none;
  friend bool operator==(LimitKind, LimitKind) = default;
};

inline constexpr LimitKind kBallBall{Side::ball, Side::ball};
inline constexpr LimitKind kBallHole{Side::ball, Side::hole};
inline constexpr LimitKind kHoleBall{Side::hole, Side::ball};
inline constexpr LimitKind kHoleHole{Side::hole, Side::hole};

LimitKind parse_limit_kind(const std::string& text);
std::string to_string(LimitKind k);

// Limits from the limsup/liminf characterizations of each side.
Subset limit_points(const NetProfile& p, const GRel& d, LimitKind kind);
// Limits from the generated topology: the tail must sit inside every subbasic set around x.
Subset limit_points_by_opens(const NetProfile& p, const GRel& d, LimitKind kind);

// {x : (x_l)d = xd}
Subset d_limits(const NetProfile& p, const GRel& d);
// x_l e x -> 0
bool tends_to_zero(const NetProfile& p, const GRel& e, std::size_t x);

Report check_symCauchy(const NetProfile& p, const GRel& d);
Report check_clim(const NetProfile& p, const GRel& d);
Report check_convchar(const NetProfile& p, const GRel& d);
Report check_dlimits(const NetProfile& p, const GRel& d);

}  // namespace qdt
