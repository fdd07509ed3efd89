#include "qdt/metric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qdt {

namespace {

std::string cell_text(const GRel& d, std::size_t i, std::size_t j) {
  return "(" + d.source().label(i) + "," + d.target().label(j) + ")";
}

std::string excess_text(const GRel& lhs, const GRel& rhs, const char* l, const char* r) {
  auto c = first_excess(lhs, rhs);
  if (!c) return {};
  std::ostringstream os;
  os << "cell " << cell_text(lhs, c->first, c->second) << " " << l << "=" << lhs(c->first, c->second) << " > " << r
     << "=" << rhs(c->first, c->second);
  return os.str();
}

std::string diff_text(const GRel& lhs, const GRel& rhs, const char* l, const char* r) {
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        std::ostringstream os;
        os << "cell " << cell_text(lhs, i, j) << " " << l << "=" << lhs(i, j) << " vs " << r << "=" << rhs(i, j);
        return os.str();
      }
  return {};
}

}  // namespace

bool is_distance(const GRel& d) {
  require_square(d, "is_distance");
  return leq(d, compose(d, d));
}

bool is_reflexive(const GRel& d) {
  require_square(d, "is_reflexive");
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (!d(i, i).is_zero()) return false;
  return true;
}

bool is_hemimetric(const GRel& d) { return is_reflexive(d) && is_distance(d); }

bool is_symmetric(const GRel& d) {
  require_square(d, "is_symmetric");
  return d == opposite(d);
}

Classification classify(const GRel& d) {
  require_square(d, "classify");
  Classification c;
  c.is_distance = is_distance(d);
  c.is_reflexive = is_reflexive(d);
  c.is_symmetric = is_symmetric(d);
  c.is_hemimetric = c.is_distance && c.is_reflexive;
  bool antisymmetric = true;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = i + 1; j < d.rows(); ++j)
      if (d(i, j).is_zero() && d(j, i).is_zero()) antisymmetric = false;
  c.is_quasimetric = c.is_hemimetric && antisymmetric;
  c.is_metric = c.is_quasimetric && c.is_symmetric;
  return c;
}

std::string strongest_name(const Classification& c) {
  if (c.is_metric) return "metric";
  if (c.is_quasimetric) return "quasimetric";
  if (c.is_hemimetric) return "hemimetric";
  if (c.is_distance) return "distance";
  return "relation";
}

GRel reflexivize_upper(const GRel& d) {
  require_square(d, "reflexivize_upper");
  return kan_right(d, d);
}

GRel reflexivize_lower(const GRel& d) {
  require_square(d, "reflexivize_lower");
  return kan_left(d, d);
}

Report check_hemiprop(const GRel& d) {
  require_square(d, "check_hemiprop");
  Report rep("hemiprop");
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d);
  rep.expect(is_hemimetric(up), "upper reflexivization is a hemimetric");
  rep.expect(is_hemimetric(lo), "lower reflexivization is a hemimetric");

  const bool hemi = is_hemimetric(d), dist = is_distance(d), refl = is_reflexive(d);
  const bool up_eq = up == d, lo_eq = lo == d;
  rep.expect(up_eq == lo_eq && lo_eq == hemi, "hemi", [&] {
    std::ostringstream os;
    os << "upper=d:" << up_eq << " lower=d:" << lo_eq << " hemimetric:" << hemi;
    return os.str();
  });
  const bool up_le = leq(up, d), lo_le = leq(lo, d);
  rep.expect(up_le == lo_le && lo_le == dist, "dis", [&] {
    std::ostringstream os;
    os << "upper<=d:" << up_le << " lower<=d:" << lo_le << " distance:" << dist;
    if (up_le != dist) os << " " << excess_text(up, d, "upper", "d");
    return os.str();
  });
  const bool up_ge = leq(d, up), lo_ge = leq(d, lo);
  rep.expect(up_ge == lo_ge && lo_ge == refl, "ref", [&] {
    std::ostringstream os;
    os << "upper>=d:" << up_ge << " lower>=d:" << lo_ge << " reflexive:" << refl;
    return os.str();
  });
  const GRel left = compose(up, d), right = compose(d, lo);
  rep.expect(left == d, "d = upper o d", [&] { return diff_text(left, d, "upper o d", "d"); });
  rep.expect(right == d, "d = d o lower", [&] { return diff_text(right, d, "d o lower", "d"); });
  return rep;
}

Quotient quotient_equivalent(const GRel& d) {
  require_square(d, "quotient_equivalent");
  const std::size_t n = d.rows();
  std::vector<std::size_t> reps;
  std::vector<std::size_t> mapping(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      const std::size_t r = reps[k];
      bool same = true;
      for (std::size_t z = 0; z < n && same; ++z) same = d(x, z) == d(r, z) && d(z, x) == d(z, r);
      if (same) {
        mapping[x] = k;
        placed = true;
      }
    }
    if (!placed) {
      mapping[x] = reps.size();
      reps.push_back(x);
    }
  }
  Subset keep;
  for (auto r : reps) keep.insert(r);
  return {submatrix(d, keep, keep), mapping};
}

Subset ball(const GRel& d, std::size_t c, const ExtReal& r, BallKind kind) {
  require_square(d, "ball");
  Subset s;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    const ExtReal& v = kind == BallKind::upper ? d(c, x) : d(x, c);
    if (v < r) s.insert(x);
  }
  return s;
}

Subset hole(const GRel& d, std::size_t c, const ExtReal& r, BallKind kind) {
  require_square(d, "hole");
  Subset s;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    const ExtReal& v = kind == BallKind::upper ? d(x, c) : d(c, x);
    if (v > r) s.insert(x);
  }
  return s;
}

std::vector<Subset> subbasic_sets(const GRel& d, const std::vector<Subbasic>& kinds) {
  require_square(d, "subbasic_sets");
  std::set<ExtReal> radii(d.cells().begin(), d.cells().end());
  radii.insert(ExtReal());
  radii.insert(kInf);
  std::set<std::uint64_t> seen;
  std::vector<Subset> out;
  for (auto k : kinds)
    for (std::size_t c = 0; c < d.rows(); ++c)
      for (const auto& r : radii) {
        Subset s;
        switch (k) {
          case Subbasic::upper_ball: s = ball(d, c, r, BallKind::upper); break;
          case Subbasic::lower_ball: s = ball(d, c, r, BallKind::lower); break;
          case Subbasic::upper_hole: s = hole(d, c, r, BallKind::upper); break;
          case Subbasic::lower_hole: s = hole(d, c, r, BallKind::lower); break;
        }
        if (seen.insert(s.bits).second) out.push_back(s);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Subset minimal_neighbourhood(std::size_t n, const std::vector<Subset>& subbasis, std::size_t x) {
  Subset m = Subset::full(n);
  for (auto s : subbasis)
    if (s.contains(x)) m = m & s;
  return m;
}

std::vector<Subset> generated_topology(std::size_t n, const std::vector<Subset>& subbasis) {
  require_powerset(n);
  std::vector<Subset> nbhd(n);
  for (std::size_t x = 0; x < n; ++x) nbhd[x] = minimal_neighbourhood(n, subbasis, x);
  std::vector<Subset> opens;
  for (std::uint64_t m = 0; m < powerset_size(n); ++m) {
    Subset u{m};
    bool open = true;
    for (auto x : u.elements())
      if (!nbhd[x].subset_of(u)) {
        open = false;
        break;
      }
    if (open) opens.push_back(u);
  }
  return opens;
}

std::vector<Subset> generated_topology(const GRel& d, const std::vector<Subbasic>& kinds) {
  return generated_topology(d.rows(), subbasic_sets(d, kinds));
}

GRel restrict(const GRel& d, Subset y) {
  require_square(d, "restrict");
  return submatrix(d, y, y);
}

GRel compose_through(const GRel& d, Subset y, const GRel& e) {
  if (d.target() != e.source()) throw CarrierMismatch("compose_through: middle carriers differ");
  GRel out(d.source(), e.target(), kInf);
  for (std::size_t x = 0; x < d.rows(); ++x)
    for (auto m : y.elements())
      for (std::size_t z = 0; z < e.cols(); ++z) out(x, z) = min(out(x, z), d(x, m) + e(m, z));
  return out;
}

Report check_reflexrestrict(const GRel& d, Subset y) {
  require_square(d, "check_reflexrestrict");
  if (y.empty()) throw std::invalid_argument("check_reflexrestrict: Y must be nonempty");
  if (!is_distance(d)) return Report::not_applicable("reflexrestrict", "hypothesis fails: not a distance");
  if (!leq(compose_through(d, y, d), d))
    return Report::not_applicable("reflexrestrict", "hypothesis fails: d o Y o d is not below d");
  Report rep("reflexrestrict");
  const GRel sub = restrict(d, y);
  const GRel up_sub = reflexivize_upper(sub), sub_up = restrict(reflexivize_upper(d), y);
  const GRel lo_sub = reflexivize_lower(sub), sub_lo = restrict(reflexivize_lower(d), y);
  rep.expect(up_sub == sub_up, "upper commutes with restriction",
             [&] { return diff_text(up_sub, sub_up, "of restriction", "restricted"); });
  rep.expect(lo_sub == sub_lo, "lower commutes with restriction",
             [&] { return diff_text(lo_sub, sub_lo, "of restriction", "restricted"); });
  return rep;
}

GRel reflexivization_from_balls(const GRel& d, BallKind kind) {
  require_square(d, "reflexivization_from_balls");
  std::set<ExtReal> values;
  for (const auto& v : d.cells())
    if (v.is_finite()) values.insert(v);
  values.insert(ExtReal());
  std::set<ExtReal> eps;
  for (const auto& a : values)
    for (const auto& b : values)
      if (b < a) eps.insert(truncated_sub(a, b));
  // eta sits below every positive gap among the radii that get compared
  std::set<ExtReal> marks(values);
  for (const auto& v : values)
    for (const auto& e : eps) marks.insert(v + e);
  ExtReal eta = 1;
  for (auto it = marks.begin(); std::next(it) != marks.end(); ++it) eta = min(eta, truncated_sub(*std::next(it), *it));
  eta = ExtReal::ratio(eta.num(), eta.den() * 2);

  std::vector<ExtReal> radii;
  for (const auto& v : values) {
    radii.push_back(v);
    radii.push_back(v + eta);
  }
  radii.push_back(kInf);
  std::vector<ExtReal> candidates{eta};
  candidates.insert(candidates.end(), eps.begin(), eps.end());

  return GRel::tabulate(d.source(), d.target(), [&](std::size_t x, std::size_t y) {
    // upper: y-balls inside enlarged x-balls; lower: x-balls inside enlarged y-balls
    const std::size_t small = kind == BallKind::upper ? y : x;
    const std::size_t large = kind == BallKind::upper ? x : y;
    for (const auto& e : candidates) {
      bool ok = true;
      for (const auto& r : radii) {
        if (!ball(d, small, r, kind).subset_of(ball(d, large, r + e, kind))) {
          ok = false;
          break;
        }
      }
      if (ok) return e == eta ? ExtReal() : e;
    }
    return kInf;
  });
}

}  // namespace qdt
