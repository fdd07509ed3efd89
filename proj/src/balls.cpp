#include "qdt/balls.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qdt/metric.hpp"
#include "qdt/nets.hpp"
#include "qdt/order.hpp"
#include "qdt/wbd.hpp"

namespace qdt {

namespace {

using Family = std::vector<FormalBall>;

std::vector<ExtReal> finite_sorted(std::vector<ExtReal> v) {
  std::erase_if(v, [](const ExtReal& r) { return r.is_infinite(); });
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<ExtReal> merged(std::vector<ExtReal> a, const std::vector<ExtReal>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return finite_sorted(std::move(a));
}

bool columns_have_zero(const GRel& d) {
  for (std::size_t j = 0; j < d.cols(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < d.rows() && !found; ++i) found = d(i, j).is_zero();
    if (!found) return false;
  }
  return true;
}

bool rows_have_zero(const GRel& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < d.cols() && !found; ++j) found = d(i, j).is_zero();
    if (!found) return false;
  }
  return true;
}

// 0, the values and the midpoint of each consecutive pair
BallGrid refine_between(const Carrier& base, std::vector<ExtReal> values) {
  values.push_back(ExtReal());
  values = finite_sorted(std::move(values));
  std::vector<ExtReal> r = values;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) r.push_back(midpoint(values[i], values[i + 1]));
  return make_grid(base, std::move(r));
}

std::string show(const GRel& d, const FormalBall& a) { return format_ball(a, d.source()); }

std::string show(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return show(d, a) + " " + show(d, b);
}

std::string show(const GRel& d, const Family& y) {
  std::string out = "{";
  for (std::size_t i = 0; i < y.size(); ++i) out += (i ? "," : "") + show(d, y[i]);
  return out + "}";
}

std::int64_t denominator_lcm(std::int64_t acc, const ExtReal& r) {
  return r.is_finite() ? std::lcm(acc, r.den()) : acc;
}

// Nonempty T with tdt' = 0 throughout: the tails of d-Cauchy nets.
std::vector<Subset> cauchy_tails(const GRel& d) {
  const std::size_t n = d.rows();
  require_powerset(n);
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < powerset_size(n); ++bits) {
    Subset t{bits};
    bool ok = true;
    for (std::size_t i : t.elements())
      for (std::size_t j : t.elements()) ok = ok && d(i, j).is_zero();
    if (ok) out.push_back(t);
  }
  return out;
}

ExtReal max_into(const GRel& d, Subset tail, std::size_t x) {
  ExtReal m;
  for (std::size_t t : tail.elements()) m = max(m, d(t, x));
  return m;
}

// m is a <-maximum of {(t, alpha + rho) : t in T, rho > 0}: every member is strictly
// below m, and whatever is strictly below m is strictly below some member.
bool strict_max_of_tail(const GRel& d, Subset tail, const ExtReal& alpha, const FormalBall& m) {
  const auto ts = tail.elements();
  for (std::size_t t : ts)
    if (!(add(d(t, m.element), m.radius) <= alpha)) return false;
  for (std::size_t u = 0; u < d.rows(); ++u) {
    std::vector<ExtReal> th{add(d(u, m.element), m.radius)};
    for (std::size_t t : ts) th.push_back(add(d(u, t), alpha));
    for (const ExtReal& q : cell_points(th)) {
      FormalBall w{u, q};
      if (!fb_lt(d, w, m)) continue;
      bool below = std::any_of(ts.begin(), ts.end(), [&](std::size_t t) { return fb_lt(d, w, {t, alpha}); });
      if (!below) return false;
    }
  }
  return true;
}

std::optional<FormalBall> strict_continuity_failure(const GRel& d, const BallGrid& g) {
  const auto tails = cauchy_tails(d);
  for (const FormalBall& a : g.balls()) {
    bool found = false;
    for (Subset t : tails) {
      // the least admissible aperture; larger ones only shrink the lower set
      ExtReal alpha = add(a.radius, max_into(d, t, a.element));
      if (alpha.is_infinite()) continue;
      if (strict_max_of_tail(d, t, alpha, a)) {
        found = true;
        break;
      }
    }
    if (!found) return a;
  }
  return std::nullopt;
}

std::optional<std::pair<Subset, ExtReal>> strict_completeness_failure(const GRel& d, const BallGrid& g) {
  for (Subset t : cauchy_tails(d)) {
    for (const ExtReal& alpha : g.radii) {
      bool found = false;
      for (std::size_t x = 0; x < d.rows() && !found; ++x) {
        ExtReal mx = max_into(d, t, x);
        if (!(mx <= alpha)) continue;
        // the largest admissible radius; smaller ones only enlarge the strict lower set
        found = strict_max_of_tail(d, t, alpha, {x, truncated_sub(alpha, mx)});
      }
      if (!found) return std::make_pair(t, alpha);
    }
  }
  return std::nullopt;
}

// zero set of underline(<d+): every c strictly below a is strictly below b
bool strict_lower_leq(const GRel& d, const FormalBall& a, const FormalBall& b) {
  for (std::size_t z = 0; z < d.rows(); ++z) {
    for (const ExtReal& q : cell_points({add(d(z, a.element), a.radius), add(d(z, b.element), b.radius)})) {
      FormalBall c{z, q};
      if (fb_lt(d, c, a) && !fb_lt(d, c, b)) return false;
    }
  }
  return true;
}

// zero set of overline(<d+): everything strictly above b is strictly above a
bool strict_upper_leq(const GRel& d, const FormalBall& a, const FormalBall& b) {
  for (std::size_t z = 0; z < d.rows(); ++z) {
    for (const ExtReal& q :
         cell_points({truncated_sub(b.radius, d(b.element, z)), truncated_sub(a.radius, d(a.element, z))})) {
      FormalBall c{z, q};
      if (fb_lt(d, b, c) && !fb_lt(d, a, c)) return false;
    }
  }
  return true;
}

std::optional<std::pair<FormalBall, FormalBall>> strict_order_failure(const GRel& d, const BallGrid& g) {
  const auto balls = g.balls();
  for (const auto& a : balls)
    for (const auto& b : balls)
      if (strict_lower_leq(d, a, b) && !strict_upper_leq(d, a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

// underline(<d+) against <= of the lower reflexivization, on grid pairs
std::optional<std::pair<FormalBall, FormalBall>> strict_lower_mismatch(const GRel& d, const GRel& lo,
                                                                       const BallGrid& g) {
  const auto balls = g.balls();
  for (const auto& a : balls)
    for (const auto& b : balls)
      if (strict_lower_leq(d, a, b) != fb_leq(lo, a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

struct StrictDomain {
  bool order = false;
  bool continuous = false;
  bool complete = false;
  bool lower_matches = false;
  std::string detail;

  bool domain() const { return order && continuous && complete; }
};

StrictDomain strict_domain(const GRel& d, const BallGrid& g) {
  StrictDomain s;
  std::ostringstream os;
  auto o = strict_order_failure(d, g);
  s.order = !o;
  if (o) os << "order fails at " << show(d, o->first, o->second) << "; ";
  auto c = strict_continuity_failure(d, g);
  s.continuous = !c;
  if (c) os << "no directed family with maximum " << show(d, *c) << "; ";
  auto m = strict_completeness_failure(d, g);
  s.complete = !m;
  if (m) os << "tail " << format_subset(m->first, d.source()) << " at aperture " << m->second << " has no maximum; ";
  auto l = strict_lower_mismatch(d, reflexivize_lower(d), g);
  s.lower_matches = !l;
  if (l) os << "underline differs at " << show(d, l->first, l->second) << "; ";
  s.detail = os.str();
  return s;
}

bool is_grid_directed(const GRel& d, const Family& y) {
  return std::any_of(y.begin(), y.end(), [&](const FormalBall& m) {
    return std::all_of(y.begin(), y.end(), [&](const FormalBall& b) { return fb_leq(d, b, m); });
  });
}

// Zero-aperture directed families on the grid: the principal ones and radius-0 singletons.
struct TopFamilies {
  std::vector<Family> members;
  std::vector<std::string> labels;
  std::vector<std::optional<std::size_t>> principal;  // element -> member index
};

TopFamilies zero_aperture_families(const GRel& d, const BallGrid& g, Subset basis) {
  TopFamilies tf;
  auto add_member = [&](Family f, const std::string& label) -> std::optional<std::size_t> {
    if (f.empty() || !aperture(f).is_zero() || !is_grid_directed(d, f)) return std::nullopt;
    for (std::size_t i = 0; i < tf.members.size(); ++i)
      if (tf.members[i] == f) return i;
    tf.members.push_back(std::move(f));
    tf.labels.push_back(label);
    return tf.members.size() - 1;
  };
  for (std::size_t x = 0; x < d.rows(); ++x)
    tf.principal.push_back(add_member(principal_family(d, x, g, basis), "P(" + d.source().label(x) + ")"));
  for (std::size_t x : basis.elements())
    if (d(x, x).is_zero()) add_member({{x, ExtReal()}}, "{" + d.source().label(x) + "@0}");
  return tf;
}

GRel family_relation(const GRel& d, const TopFamilies& tf, bool upper) {
  Carrier c(tf.labels);
  return GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) {
    return upper ? ball_hausdorff_upper(d, tf.members[i], tf.members[j])
                 : ball_hausdorff_lower(d, tf.members[i], tf.members[j]);
  });
}

std::vector<Family> small_families(const std::vector<FormalBall>& balls) {
  std::vector<Family> out;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    out.push_back({balls[i]});
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (balls[i].element != balls[j].element) out.push_back({balls[i], balls[j]});
  }
  return out;
}

}  // namespace

std::string format_ball(const FormalBall& b, const Carrier& c) {
  return c.label(b.element) + "@" + b.radius.to_string();
}

FormalBall BallGrid::ball(std::size_t i) const {
  return {i / radii.size(), radii[i % radii.size()]};
}

std::vector<FormalBall> BallGrid::balls() const {
  std::vector<FormalBall> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(ball(i));
  return out;
}

Carrier BallGrid::carrier() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i) labels.push_back(format_ball(ball(i), base));
  return Carrier(labels);
}

BallGrid make_grid(const Carrier& base, std::vector<ExtReal> radii) {
  for (const auto& r : radii)
    if (r.is_infinite()) throw std::invalid_argument("grid radius must be finite");
  radii.push_back(ExtReal());
  return {base, finite_sorted(std::move(radii))};
}

std::vector<ExtReal> finite_values(const GRel& d) { return finite_sorted(d.cells()); }

BallGrid table_grid(const GRel& d) { return refine_between(d.source(), finite_values(d)); }

BallGrid table_grid(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "table_grid");
  return refine_between(d.source(), merged(finite_values(d), finite_values(e)));
}

BallGrid refine(const BallGrid& g) {
  std::vector<ExtReal> r = g.radii;
  for (std::size_t i = 0; i + 1 < g.radii.size(); ++i) r.push_back(midpoint(g.radii[i], g.radii[i + 1]));
  r.push_back(g.radii.back() + ExtReal(1));
  return make_grid(g.base, std::move(r));
}

std::vector<ExtReal> cell_points(std::vector<ExtReal> thresholds) {
  thresholds.push_back(ExtReal());
  auto t = finite_sorted(std::move(thresholds));
  std::vector<ExtReal> out;
  out.reserve(2 * t.size() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(t[i]);
    if (i + 1 < t.size()) out.push_back(midpoint(t[i], t[i + 1]));
  }
  out.push_back(t.back() + ExtReal(1));
  return out;
}

std::vector<ExtReal> witness_radii(const std::vector<ExtReal>& anchors, const std::vector<ExtReal>& values,
                                   int depth) {
  std::vector<ExtReal> level = finite_sorted(anchors);
  std::vector<ExtReal> all = level;
  for (int k = 0; k < depth; ++k) {
    std::vector<ExtReal> next;
    for (const auto& a : level)
      for (const auto& v : values) {
        if (v.is_infinite()) continue;
        next.push_back(a + v);
        next.push_back(truncated_sub(a, v));
      }
    level = finite_sorted(std::move(next));
    all.insert(all.end(), level.begin(), level.end());
  }
  return cell_points(std::move(all));
}

ExtReal fb_distance(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return truncated_sub(add(d(a.element, b.element), b.radius), a.radius);
}

bool fb_leq(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return add(d(a.element, b.element), b.radius) <= a.radius;
}

bool fb_lt(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return add(d(a.element, b.element), b.radius) < a.radius;
}

GRel ball_relation(const GRel& d, const BallGrid& g) {
  require_square(d, "ball_relation");
  Carrier c = g.carrier();
  return GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return fb_distance(d, g.ball(i), g.ball(j)); });
}

ExtReal recover_distance(const GRel& d, std::size_t x, std::size_t y, const std::vector<ExtReal>& radii) {
  ExtReal best = kInf;
  for (const auto& r : radii)
    if (fb_leq(d, {x, r}, {y, ExtReal()})) best = min(best, r);
  return best;
}

ExtReal ball_reflex_lower(const GRel& d, const FormalBall& a, const FormalBall& b) {
  ExtReal best;
  const auto qs = cell_points({a.radius, b.radius});
  for (std::size_t w = 0; w < d.rows(); ++w)
    for (const auto& q : qs) best = max(best, truncated_sub(fb_distance(d, {w, q}, b), fb_distance(d, {w, q}, a)));
  return best;
}

ExtReal ball_reflex_upper(const GRel& d, const FormalBall& a, const FormalBall& b) {
  ExtReal best;
  const auto qs = cell_points({a.radius, b.radius});
  for (std::size_t w = 0; w < d.rows(); ++w)
    for (const auto& q : qs) best = max(best, truncated_sub(fb_distance(d, a, {w, q}), fb_distance(d, b, {w, q})));
  return best;
}

bool strict_by_definition(const GRel& d, const FormalBall& a, const FormalBall& b) {
  // Every threshold below is an integer combination of the radii and table values, so an
  // eps under their common granularity behaves like every smaller one.
  std::int64_t l = denominator_lcm(denominator_lcm(1, a.radius), b.radius);
  for (const auto& v : d.cells()) l = denominator_lcm(l, v);
  const ExtReal eps = ExtReal::ratio(1, 8 * l);
  const std::size_t y = b.element;
  for (std::size_t z = 0; z < d.rows(); ++z) {
    std::vector<ExtReal> th{truncated_sub(a.radius, d(a.element, z))};
    for (std::size_t w = 0; w < d.rows(); ++w)
      if (d(w, y).is_finite() && d(w, z).is_finite()) th.push_back(truncated_sub(d(w, y) + b.radius + eps, d(w, z)));
    for (const auto& t : cell_points(th)) {
      FormalBall c{z, t};
      if (ball_reflex_lower(d, b, c) < eps && !fb_leq(d, a, c)) return false;
    }
  }
  return true;
}

ExtReal aperture(const std::vector<FormalBall>& y) {
  ExtReal best = kInf;
  for (const auto& b : y) best = min(best, b.radius);
  return best;
}

ExtReal ball_hausdorff_upper(const GRel& d, const std::vector<FormalBall>& y, const std::vector<FormalBall>& z) {
  ExtReal best = kInf;
  for (const auto& zb : z) {
    ExtReal worst;
    for (const auto& yb : y) worst = max(worst, fb_distance(d, yb, zb));
    best = min(best, worst);
  }
  return best;
}

ExtReal ball_hausdorff_lower(const GRel& d, const std::vector<FormalBall>& y, const std::vector<FormalBall>& z) {
  ExtReal worst;
  for (const auto& yb : y) {
    ExtReal best = kInf;
    for (const auto& zb : z) best = min(best, fb_distance(d, yb, zb));
    worst = max(worst, best);
  }
  return worst;
}

std::vector<FormalBall> principal_family(const GRel& d, std::size_t x, const BallGrid& g, Subset basis) {
  std::vector<FormalBall> out;
  for (std::size_t z : basis.elements())
    for (const auto& t : g.radii)
      if (d(z, x) <= t) out.push_back({z, t});
  return out;
}

std::vector<FormalBall> principal_family(const GRel& d, std::size_t x, const BallGrid& g) {
  return principal_family(d, x, g, Subset::full(d.rows()));
}

bool strict_max_continuous(const GRel& d, const BallGrid& g) { return !strict_continuity_failure(d, g); }
bool strict_max_complete(const GRel& d, const BallGrid& g) { return !strict_completeness_failure(d, g); }
bool strict_reflexive_order(const GRel& d, const BallGrid& g) { return !strict_order_failure(d, g); }

Report check_xdy(const GRel& d) {
  require_square(d, "check_xdy");
  Report rep("xdy");
  const BallGrid g = table_grid(d);
  const std::size_t n = d.rows();
  std::optional<std::string> bad;
  for (std::size_t x = 0; x < n && !bad; ++x)
    for (std::size_t y = 0; y < n && !bad; ++y)
      if (fb_distance(d, {x, ExtReal()}, {y, ExtReal()}) != d(x, y))
        bad = d.source().label(x) + " " + d.source().label(y);
  rep.expect(!bad, "radius 0 embeds d", [&] { return *bad; });

  bad.reset();
  for (std::size_t x = 0; x < n && !bad; ++x)
    for (std::size_t y = 0; y < n && !bad; ++y)
      if (recover_distance(d, x, y, g.radii) != d(x, y))
        bad = d.source().label(x) + " " + d.source().label(y) + " recovered " +
              recover_distance(d, x, y, g.radii).to_string();
  rep.expect(!bad, "d = min radius below (y,0)", [&] { return *bad; });

  // strict radii, decided from the definition, are exactly those above xdy
  bad.reset();
  const auto pts = cell_points(g.radii);
  for (std::size_t x = 0; x < n && !bad; ++x)
    for (std::size_t y = 0; y < n && !bad; ++y)
      for (const auto& r : pts)
        if (strict_by_definition(d, {x, r}, {y, ExtReal()}) != (d(x, y) < r)) {
          bad = d.source().label(x) + "@" + r.to_string() + " " + d.source().label(y) + "@0";
          break;
        }
  rep.expect(!bad, "d = inf radius strictly below (y,0)", [&] { return *bad; });

  const auto balls = g.balls();
  bad.reset();
  for (const auto& a : balls)
    for (const auto& b : balls)
      if (!bad && fb_leq(d, a, b) != fb_distance(d, a, b).is_zero()) bad = show(d, a, b);
  rep.expect(!bad, "<= iff xdy <= r - s", [&] { return *bad; });

  bad.reset();
  for (const auto& a : balls)
    for (const auto& b : balls)
      if (!bad && fb_lt(d, a, b) != strict_by_definition(d, a, b)) bad = show(d, a, b);
  rep.expect(!bad, "< iff xdy < r - s", [&] { return *bad; });
  return rep;
}

Report check_bfunc(const GRel& d, const GRel& e) {
  require_square(d, "check_bfunc");
  require_same_shape(d, e, "check_bfunc");
  Report rep("bfunc");
  const BallGrid g = table_grid(d, e);
  const auto balls = g.balls();
  const auto values = merged(finite_values(d), finite_values(e));
  const GRel de = compose(d, e);
  const std::size_t n = d.rows();

  std::optional<std::string> bad;
  for (const auto& a : balls) {
    for (const auto& b : balls) {
      // the middle radius zey + s is among the witnesses
      ExtReal best = kInf;
      for (const auto& t : witness_radii({a.radius, b.radius}, values))
        for (std::size_t z = 0; z < n; ++z) best = min(best, fb_distance(d, a, {z, t}) + fb_distance(e, {z, t}, b));
      ExtReal closed = fb_distance(de, a, b);
      if (best != closed && !bad) bad = show(d, a, b) + " grid " + best.to_string() + " closed " + closed.to_string();
    }
  }
  rep.expect(!bad, "(d o e)+ = d+ o e+", [&] { return *bad; });

  const GRel lo = reflexivize_lower(d);
  const GRel up = reflexivize_upper(d);
  const bool col0 = columns_have_zero(d);
  const bool row0 = rows_have_zero(d);
  std::optional<std::string> over, differ;
  for (const auto& a : balls) {
    for (const auto& b : balls) {
      ExtReal v = ball_reflex_lower(d, a, b);
      ExtReal f = fb_distance(lo, a, b);
      if (f < v && !over) over = show(d, a, b) + " " + v.to_string() + " > " + f.to_string();
      if (v != f && !differ) differ = show(d, a, b) + " " + v.to_string() + " vs " + f.to_string();
    }
  }
  rep.expect(!over, "lower(d+) <= (lower d)+", [&] { return *over; });
  if (col0)
    rep.expect(!differ, "lower(d+) = (lower d)+", [&] { return *differ; });
  else
    rep.note("lower(d+) = (lower d)+: not asserted, some column has no zero" +
             (differ ? " (differs at " + *differ + ")" : std::string()));

  over.reset();
  differ.reset();
  for (const auto& a : balls) {
    for (const auto& b : balls) {
      ExtReal v = ball_reflex_upper(d, a, b);
      ExtReal f = fb_distance(up, a, b);
      if (f < v && !over) over = show(d, a, b) + " " + v.to_string() + " > " + f.to_string();
      if (v != f && !differ) differ = show(d, a, b) + " " + v.to_string() + " vs " + f.to_string();
    }
  }
  rep.expect(!over, "upper(d+) <= (upper d)+", [&] { return *over; });
  if (row0)
    rep.expect(!differ, "upper(d+) = (upper d)+", [&] { return *differ; });
  else
    rep.note("upper(d+) = (upper d)+: not asserted, some row has no zero" +
             (differ ? " (differs at " + *differ + ")" : std::string()));
  return rep;
}

Report check_bunder_binter(const GRel& d, const GRel& e) {
  require_square(d, "check_bunder_binter");
  require_same_shape(d, e, "check_bunder_binter");
  Report rep("bunder");
  const BallGrid g = table_grid(d, e);
  const auto balls = g.balls();
  const auto values = merged(finite_values(d), finite_values(e));
  const GRel de = compose(d, e);
  const GRel up = reflexivize_upper(d);
  const GRel lo = reflexivize_lower(d);
  const std::size_t n = d.rows();

  auto exists_middle = [&](const FormalBall& a, const FormalBall& b, auto&& pred) {
    for (const auto& t : witness_radii({a.radius, b.radius}, values))
      for (std::size_t z = 0; z < n; ++z)
        if (pred(FormalBall{z, t})) return true;
    return false;
  };

  std::optional<std::string> bad;
  for (const auto& a : balls) {
    for (const auto& b : balls) {
      bool l = fb_lt(de, a, b);
      bool c1 = exists_middle(a, b, [&](const FormalBall& m) { return fb_lt(d, a, m) && fb_lt(e, m, b); });
      bool c2 = exists_middle(a, b, [&](const FormalBall& m) { return fb_lt(d, a, m) && fb_leq(e, m, b); });
      bool c3 = exists_middle(a, b, [&](const FormalBall& m) { return fb_leq(d, a, m) && fb_lt(e, m, b); });
      if (!(l == c1 && c1 == c2 && c2 == c3) && !bad) {
        std::ostringstream os;
        os << show(d, a, b) << " composite " << l << " <o< " << c1 << " <o<= " << c2 << " <=o< " << c3;
        bad = os.str();
      }
    }
  }
  rep.expect(!bad, "strict composition factors", [&] { return *bad; });

  // overline(<d+) contains <=e+; the tightest pairs (x, xey + s), (y, s) are added
  {
    std::vector<std::pair<FormalBall, FormalBall>> pairs;
    for (const auto& a : balls)
      for (const auto& b : balls)
        if (fb_leq(e, a, b)) pairs.emplace_back(a, b);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& s : cell_points(g.radii))
          if (e(x, y).is_finite()) pairs.push_back({{x, e(x, y) + s}, {y, s}});
    std::optional<std::string> miss;
    for (const auto& [a, b] : pairs)
      if (!strict_upper_leq(d, a, b)) {
        miss = show(d, a, b);
        break;
      }
    bool lhs = leq(up, e);
    rep.expect(lhs == !miss, "upper d <= e iff overline(<d+) contains <=e+", [&] {
      return std::string(lhs ? "upper d <= e but pair " + *miss + " escapes" : "upper d > e yet inclusion holds");
    });
  }

  if (columns_have_zero(d)) {
    auto m = strict_lower_mismatch(d, lo, g);
    rep.expect(!m, "0 o d = 0 gives underline(<d+) = <=(lower d)+",
               [&] { return show(d, m->first, m->second); });
  } else {
    rep.note("0 o d = 0 fails: underline identity not asserted");
  }

  // = o <P = dP, with the open set of middle radii replaced by its closure
  const auto fams = small_families(balls);
  bad.reset();
  for (const auto& a : balls) {
    for (const auto& y : fams) {
      std::vector<ExtReal> th{a.radius};
      for (const auto& b : y) th.push_back(add(d(a.element, b.element), b.radius));
      ExtReal best = kInf;
      for (const auto& t : cell_points(th)) {
        FormalBall m{a.element, t};
        if (std::all_of(y.begin(), y.end(), [&](const FormalBall& b) { return fb_leq(d, m, b); }))
          best = min(best, truncated_sub(t, a.radius));
      }
      ExtReal rhs;
      for (const auto& b : y) rhs = max(rhs, fb_distance(d, a, b));
      if (best != rhs && !bad) bad = show(d, a) + " " + show(d, y);
    }
  }
  rep.expect(!bad, "=+ o <d+P = d+P", [&] { return *bad; });

  bad.reset();
  for (const auto& a : balls)
    for (const auto& b : balls) {
      bool direct = fb_lt(d, a, b);
      bool via = false;
      for (const auto& t : cell_points({a.radius, add(d(a.element, b.element), b.radius)}))
        if (t < a.radius && fb_lt(d, {a.element, t}, b)) via = true;
      if (direct != via && !bad) bad = show(d, a, b);
    }
  rep.expect(!bad, "<=+ o <d+ = <d+", [&] { return *bad; });

  // overline(d+) o <d+ <= d+; overline(d+) is nondecreasing in the middle radius, so the
  // infimum over the open constraint sits at its boundary zdy + s
  bad.reset();
  for (const auto& a : balls)
    for (const auto& b : balls) {
      ExtReal best = kInf;
      for (std::size_t z = 0; z < n; ++z) {
        if (d(z, b.element).is_infinite()) continue;
        FormalBall m{z, d(z, b.element) + b.radius};
        best = min(best, ball_reflex_upper(d, a, m));
      }
      if (fb_distance(d, a, b) < best && !bad) bad = show(d, a, b) + " composite " + best.to_string();
    }
  rep.expect(!bad, "overline(d+) o <d+ <= d+", [&] { return *bad; });

  bad.reset();
  for (const auto& a : balls)
    for (const auto& y : fams) {
      std::vector<ExtReal> th;
      for (const auto& b : y)
        for (std::size_t z = 0; z < n; ++z) th.push_back(add(d(z, b.element), b.radius));
      ExtReal best = kInf;
      for (const auto& t : cell_points(th))
        for (std::size_t z = 0; z < n; ++z) {
          FormalBall m{z, t};
          if (std::all_of(y.begin(), y.end(), [&](const FormalBall& b) { return fb_leq(d, m, b); }))
            best = min(best, ball_reflex_lower(d, a, m));
        }
      ExtReal rhs;
      for (const auto& b : y) rhs = max(rhs, fb_distance(d, a, b));
      if (rhs < best && !bad) bad = show(d, a) + " " + show(d, y) + " composite " + best.to_string();
    }
  rep.expect(!bad, "underline(d+) o <=d+P <= d+P", [&] { return *bad; });

  bad.reset();
  for (const auto& a : balls)
    for (const auto& b : balls) {
      if (!fb_lt(d, a, b)) continue;
      bool via = exists_middle(a, b, [&](const FormalBall& m) { return fb_lt(up, a, m) && fb_leq(d, m, b); });
      if (!via && !bad) bad = show(d, a, b);
    }
  rep.expect(!bad, "<(upper d)+ o <=d+ contains <d+", [&] { return *bad; });
  return rep;
}

Report check_alphatri(const GRel& d, const BallGrid& g, std::uint64_t seed, std::size_t samples) {
  require_square(d, "check_alphatri");
  Report rep("alphatri");
  const auto balls = g.balls();
  if (balls.empty()) return Report::not_applicable("alphatri", "empty carrier");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, balls.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  auto draw = [&] {
    Family f;
    for (std::size_t k = len(rng); k > 0; --k) f.push_back(balls[pick(rng)]);
    return f;
  };
  const GRel zero(d.source(), ExtReal());
  std::optional<std::string> bad, order, ap;
  for (std::size_t i = 0; i < samples; ++i) {
    Family y = draw(), z = draw();
    ExtReal lower = ball_hausdorff_lower(d, z, y);
    ExtReal upper = ball_hausdorff_upper(d, z, y);
    if (!(aperture(y) <= aperture(z) + lower) && !bad) bad = show(d, y) + " " + show(d, z);
    if (!(lower <= upper) && !order) order = show(d, z) + " " + show(d, y);
    // aperture as the lower Hausdorff distance of the zero relation from everything
    std::vector<ExtReal> th;
    for (const auto& b : y) th.push_back(b.radius);
    ExtReal from_all;
    for (std::size_t w = 0; w < d.rows(); ++w)
      for (const auto& q : cell_points(th)) from_all = max(from_all, ball_hausdorff_lower(zero, {{w, q}}, y));
    if (from_all != aperture(y) && !ap) ap = show(d, y);
  }
  rep.expect(!ap, "aperture = X+ 0+H Y", [&] { return *ap; });
  rep.expect(!bad, "aperture(Y) <= aperture(Z) + Z d+H Y", [&] { return *bad; });
  rep.expect(!order, "lower Hausdorff <= upper Hausdorff", [&] { return *order; });
  return rep;
}

namespace {

struct GridSides {
  bool complete = false;
  bool continuous = false;
  std::string detail;
};

GridSides ball_sides(const GRel& d, const BallGrid& g) {
  GridSides s;
  std::ostringstream os;
  auto m = strict_completeness_failure(d, g);
  s.complete = !m;
  if (m) os << "tail " << format_subset(m->first, d.source()) << " at aperture " << m->second << " has no maximum; ";
  auto c = strict_continuity_failure(d, g);
  s.continuous = !c && columns_have_zero(d);
  if (c) os << "no directed family with maximum " << show(d, *c) << "; ";
  if (!columns_have_zero(d)) os << "0 o d != 0; ";
  s.detail = os.str();
  return s;
}

// Records one grid-scale equivalence; a mismatch that vanishes after one refinement is
// reported as GRID-INCONCLUSIVE rather than as a counterexample.
void grid_equivalence(Report& rep, const std::string& clause, bool lhs, bool coarse, bool fine,
                      const std::string& detail) {
  if (lhs == coarse) {
    rep.note(clause + ": " + (lhs ? "both hold" : "both fail"));
    rep.expect(true, clause);
  } else if (lhs == fine) {
    rep.note(clause + ": GRID-INCONCLUSIVE, settled after refinement");
  } else {
    rep.expect(false, clause, [&] { return std::string(lhs ? "left holds, right fails: " : "left fails, right holds: ") + detail; });
  }
}

}  // namespace

Report check_contdomballs(const GRel& d, const BallGrid& g) {
  require_square(d, "check_contdomballs");
  if (!is_distance(d)) return Report::not_applicable("contdomballs", "not a distance");
  Report rep("contdomballs");
  const bool comp = is_ball_hole_complete(d).holds;
  const bool cont = is_ball_hole_continuous(d).holds;
  GridSides coarse = ball_sides(d, g);
  GridSides fine = coarse;
  if (coarse.complete != comp || coarse.continuous != cont) fine = ball_sides(d, refine(g));
  grid_equivalence(rep, "complete iff balls <-max-complete", comp, coarse.complete, fine.complete, fine.detail);
  grid_equivalence(rep, "continuous iff balls <-max-continuous and 0 o d = 0", cont, coarse.continuous,
                   fine.continuous, fine.detail);
  bool inconclusive = std::any_of(rep.lines.begin(), rep.lines.end(),
                                  [](const std::string& l) { return l.find("GRID-INCONCLUSIVE") != std::string::npos; });
  rep.note(std::string("grid: ") + (rep.failed() ? "FAIL" : inconclusive ? "GRID-INCONCLUSIVE" : "PASS"));
  return rep;
}

Report check_contdomballs(const GRel& d) { return check_contdomballs(d, table_grid(d)); }

Report check_kw(const GRel& d) {
  require_square(d, "check_kw");
  if (!is_distance(d)) return Report::not_applicable("kw", "not a distance");
  Report rep("kw");
  const bool lhs = check_domain(d, DomainKind::ball_hole).domain;
  const BallGrid g = table_grid(d);
  StrictDomain coarse = strict_domain(d, g);
  auto rhs_of = [](const StrictDomain& s) { return s.domain() && s.lower_matches; };
  StrictDomain fine = coarse;
  if (rhs_of(coarse) != lhs) fine = strict_domain(d, refine(g));
  rep.note(std::string("domain with e = lower d: ") + (lhs ? "yes" : "no"));
  rep.note(std::string("balls: order ") + (coarse.order ? "yes" : "no") + ", continuous " +
           (coarse.continuous ? "yes" : "no") + ", complete " + (coarse.complete ? "yes" : "no") +
           ", underline matches " + (coarse.lower_matches ? "yes" : "no"));
  grid_equivalence(rep, "domain iff balls <-max-domain with underline = <=e+", lhs, rhs_of(coarse), rhs_of(fine),
                   fine.detail);
  return rep;
}

Report check_rv(const GRel& d) {
  require_square(d, "check_rv");
  if (!is_hemimetric(d)) return Report::not_applicable("rv", "not a hemimetric");
  Report rep("rv");
  const bool lhs = is_ball_hole_complete(d).holds;
  const BallGrid g = table_grid(d);
  StrictDomain coarse = strict_domain(d, g);
  StrictDomain fine = coarse;
  if (coarse.domain() != lhs) fine = strict_domain(d, refine(g));
  grid_equivalence(rep, "Smyth complete iff balls <-max-domain", lhs, coarse.domain(), fine.domain(), fine.detail);
  return rep;
}

Report check_esmyth(const GRel& d, const std::vector<NetProfile>& profiles) {
  require_square(d, "check_esmyth");
  if (!is_hemimetric(d)) return Report::not_applicable("esmyth", "not a hemimetric");
  Report rep("esmyth");
  const std::size_t n = d.rows();
  const BallGrid g = table_grid(d);
  const TopFamilies tf = zero_aperture_families(d, g, Subset::full(n));
  const GRel hup = family_relation(d, tf, true);
  const GRel hlow = family_relation(d, tf, false);
  const GRel op = opposite(d);

  // (1) X serves as its own Smyth completion when complete
  bool c1 = is_ball_hole_complete(d).holds && is_basis(Subset::full(n), d, BasisKind::ball_hole);
  bool c2 = is_ball_hole_complete(hlow).holds;
  bool c3 = is_hemimetric(hup);
  bool c4 = true;
  for (const auto& p : canonical_profiles(n))
    if (is_cauchy(p, d) && !is_cauchy(p, op)) c4 = false;
  std::vector<NetProfile> seqs = profiles;
  for (const auto& p : canonical_profiles(n))
    for (std::size_t x = 0; x < n; ++x) seqs.push_back({{x}, p.cycle});
  bool c5 = true;
  std::string seq_witness;
  for (const auto& p : seqs)
    if (is_cauchy(p, d) && !is_cauchy(p, op)) {
      c5 = false;
      seq_witness = format_profile(p, d.source());
      break;
    }
  const bool cs[] = {c1, c2, c3, c4, c5};
  std::string states;
  for (int i = 0; i < 5; ++i) {
    rep.note("(" + std::to_string(i + 1) + ") " + (cs[i] ? "holds" : "fails"));
    states += cs[i] ? 'T' : 'F';
  }
  if (!c5) rep.note("sequence witness " + seq_witness);
  bool same = std::all_of(std::begin(cs), std::end(cs), [&](bool b) { return b == c1; });
  rep.expect(same, "clauses agree", [&] { return states; });
  return rep;
}

Report check_top_completion(const GRel& d) {
  require_square(d, "check_top_completion");
  if (!is_distance(d)) return Report::not_applicable("toppredomaincompletion", "not a distance");
  if (!is_ball_hole_continuous(d).holds)
    return Report::not_applicable("toppredomaincompletion", "not ball-hole continuous");
  Report rep("toppredomaincompletion");
  const std::size_t n = d.rows();
  const BallGrid g = table_grid(d);
  const TopFamilies tf = zero_aperture_families(d, g, Subset::full(n));

  std::optional<std::size_t> missing;
  for (std::size_t x = 0; x < n && !missing; ++x)
    if (!tf.principal[x]) missing = x;
  rep.expect(!missing, "principal families are directed with zero aperture",
             [&] { return d.source().label(*missing); });
  if (missing) return rep;

  const GRel hup = family_relation(d, tf, true);
  const GRel hlow = family_relation(d, tf, false);
  const bool predomain = check_domain(d, DomainKind::ball_hole).predomain;
  std::optional<std::string> above, differ;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ExtReal v = hup(*tf.principal[x], *tf.principal[y]);
      std::string at = d.source().label(x) + " " + d.source().label(y) + " " + v.to_string();
      if (d(x, y) < v && !above) above = at;
      if (d(x, y) != v && !differ) differ = at;
    }
  rep.expect(!above, "P(x) d+H P(y) <= xdy", [&] { return *above; });
  if (predomain) rep.expect(!differ, "P(x) d+H P(y) = xdy on predomains", [&] { return *differ; });

  auto cell = first_excess(reflexivize_lower(hup), hlow);
  auto cell2 = first_excess(hlow, reflexivize_lower(hup));
  rep.expect(!cell && !cell2, "underline(d+H) = d+_H on zero-aperture families", [&] {
    auto c = cell ? *cell : *cell2;
    return tf.labels[c.first] + " " + tf.labels[c.second];
  });

  std::optional<std::string> tri;
  for (std::size_t i = 0; i < tf.members.size(); ++i)
    for (std::size_t j = 0; j < tf.members.size(); ++j) {
      const auto& y = tf.members[i];
      const auto& z = tf.members[j];
      if (!(aperture(y) <= aperture(z) + hlow(j, i) && hlow(j, i) <= hup(j, i)) && !tri)
        tri = tf.labels[i] + " " + tf.labels[j];
    }
  rep.expect(!tri, "aperture triangle", [&] { return *tri; });

  DomainVerdict dv = check_domain(hup, DomainKind::max);
  rep.expect(dv.domain, "zero-aperture families form a max-domain", [&] { return dv.witness; });

  // X joined to the families, each x identified with P(x)
  std::vector<std::string> labels = d.source().labels();
  for (const auto& l : tf.labels) labels.push_back(l);
  Carrier ext(labels);
  auto index = [&](std::size_t i) { return i < n ? *tf.principal[i] : i - n; };
  GRel ext_rel = GRel::tabulate(ext, ext, [&](std::size_t i, std::size_t j) { return hup(index(i), index(j)); });
  bool restricts = submatrix(ext_rel, Subset::full(n), Subset::full(n)).cells() == d.cells();
  bool ext_ok = restricts && check_domain(ext_rel, DomainKind::ball_hole).domain &&
                is_basis(Subset::full(n), ext_rel, BasisKind::ball_hole);
  rep.expect(predomain == ext_ok, "predomain iff basis of a ball-hole domain extension", [&] {
    return std::string(predomain ? "predomain without extension" : "extension without predomain");
  });
  return rep;
}

Report check_top_universality(Subset basis, const GRel& d) {
  require_square(d, "check_top_universality");
  const char* name = "toppredomainuniversality";
  if (!is_distance(d)) return Report::not_applicable(name, "not a distance");
  DomainVerdict dv = check_domain(d, DomainKind::ball_hole);
  if (!dv.predomain) return Report::not_applicable(name, "not a ball-hole predomain");
  if (!is_basis(basis, d, BasisKind::ball_hole)) return Report::not_applicable(name, "not a ball-hole basis");
  Report rep(name);
  const std::size_t n = d.rows();
  const BallGrid g = table_grid(d);
  std::vector<Family> images;
  for (std::size_t x = 0; x < n; ++x) images.push_back(principal_family(d, x, g, basis));
  std::optional<std::string> bad;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ExtReal v = ball_hausdorff_upper(d, images[x], images[y]);
      if (v != d(x, y) && !bad) bad = d.source().label(x) + " " + d.source().label(y) + " " + v.to_string();
    }
  rep.expect(!bad, "x -> P(x) restricted to the basis is an isometry", [&] { return *bad; });

  // each Cauchy tail inside the basis yields {(z,t) : z in basis, z d tail <= t}
  if (dv.domain) {
    std::optional<std::string> unmatched;
    for (Subset t : cauchy_tails(d)) {
      if (!t.subset_of(basis)) continue;
      Family ideal;
      for (std::size_t z : basis.elements()) {
        ExtReal v = kInf;
        for (std::size_t m : t.elements()) v = min(v, d(z, m));
        for (const auto& r : g.radii)
          if (v <= r) ideal.push_back({z, r});
      }
      bool hit = std::any_of(images.begin(), images.end(), [&](const Family& f) { return f == ideal; });
      if (!hit && !unmatched) unmatched = format_subset(t, d.source());
    }
    rep.expect(!unmatched, "onto on domains: every tail ideal is an image", [&] { return *unmatched; });
  } else {
    rep.note("onto not asserted: not a domain");
  }
  return rep;
}

}  // namespace qdt
