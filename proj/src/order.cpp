#include "qdt/order.hpp"

#include <algorithm>
#include <sstream>

#include "qdt/metric.hpp"

namespace qdt {

namespace {

std::string set_text(Subset s, const GRel& d) { return format_subset(s, d.source()); }

std::string fn_text(const UnaryFn& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ")";
  return os.str();
}

bool all_zero_between(Subset from, Subset to, const GRel& d) {
  for (auto a : from.elements())
    for (auto b : to.elements())
      if (!d(a, b).is_zero()) return false;
  return true;
}

// (Fd)Y = inf_{y in Y} sup_{f in F} fdy
ExtReal upper_of(Subset f, Subset y, const GRel& d) {
  ExtReal best = kInf;
  for (auto t : y.elements()) {
    ExtReal worst;
    for (auto a : f.elements()) worst = max(worst, d(a, t));
    best = min(best, worst);
  }
  return best;
}

// F(dY) = sup_{f in F} inf_{y in Y} fdy
ExtReal lower_of(Subset f, Subset y, const GRel& d) {
  ExtReal worst;
  for (auto a : f.elements()) {
    ExtReal best = kInf;
    for (auto t : y.elements()) best = min(best, d(a, t));
    worst = max(worst, best);
  }
  return worst;
}

std::string excess_at(const GRel& lhs, const GRel& rhs) {
  auto c = first_excess(lhs, rhs);
  if (!c) return {};
  std::ostringstream os;
  os << "(" << lhs.source().label(c->first) << "," << lhs.target().label(c->second) << ") " << lhs(c->first, c->second)
     << " > " << rhs(c->first, c->second);
  return os.str();
}

// Yd and dY without carrier copies
std::vector<ExtReal> row_sup(Subset y, const GRel& d) {
  std::vector<ExtReal> out(d.cols());
  for (auto a : y.elements())
    for (std::size_t w = 0; w < d.cols(); ++w) out[w] = max(out[w], d(a, w));
  return out;
}

std::vector<ExtReal> col_inf(Subset y, const GRel& d) {
  std::vector<ExtReal> out(d.rows(), kInf);
  for (auto b : y.elements())
    for (std::size_t c = 0; c < d.rows(); ++c) out[c] = min(out[c], d(c, b));
  return out;
}

bool relation_contains(const GRel& big, const GRel& small) { return leq(big, small); }

// Global hypotheses shared by every set-level check on one relation.
struct Context {
  const GRel& d;
  GRel up, lo, zero, strict, strict_up;
  bool distance = false;
  bool dsup_hyp = false;
  bool dmax_le_hyp = false;
  bool dmax_ge_hyp = false;

  explicit Context(const GRel& rel) : d(rel) {
    require_square(d, "order check");
    up = reflexivize_upper(d);
    lo = reflexivize_lower(d);
    zero = zero_relation(d);
    strict = strict_below(d);
    strict_up = strict_below(up);
    distance = is_distance(d);
    dsup_hyp = leq(compose(zero_relation(subset_rows(d)), lo), subset_rows(d));
    dmax_le_hyp = distance && leq(compose(up, strict), d);
    dmax_ge_hyp = distance && relation_contains(compose(strict_up, zero), strict);
  }
};

Report fdy(Subset y, const Context& c) {
  if (!c.distance) return Report::not_applicable("FdY", "hypothesis fails: not a distance");
  if (!is_final(y, c.d)) return Report::not_applicable("FdY", "hypothesis fails: Y is not final");
  Report rep("FdY");
  const std::size_t n = c.d.rows();
  std::optional<Subset> bad;
  for (std::uint64_t m = 0; m < powerset_size(n) && !bad; ++m)
    if (upper_of(Subset{m}, y, c.d) != lower_of(Subset{m}, y, c.d)) bad = Subset{m};
  const bool dir = is_directed(y, c.d);
  rep.expect(!bad.has_value() == dir, "(Fd)Y = F(dY) for all F iff Y directed at " + set_text(y, c.d), [&] {
    std::ostringstream os;
    os << "directed:" << dir;
    if (bad) os << " first unequal F " << set_text(*bad, c.d);
    return os.str();
  });
  return rep;
}

Report ydyd(Subset y, const Context& c) {
  if (!c.distance) return Report::not_applicable("YdYd", "hypothesis fails: not a distance");
  if (!is_final(y, c.d)) return Report::not_applicable("YdYd", "hypothesis fails: Y is not final");
  Report rep("YdYd");
  const UnaryFn a = apply_set(y, c.up, SetMode::inf), b = apply_set(y, c.d, SetMode::inf);
  rep.expect(a == b, "upper Y = dY at " + set_text(y, c.d), [&] { return fn_text(a) + " vs " + fn_text(b); });
  const UnaryFn p = apply_set(y, c.lo, SetMode::sup), q = apply_set(y, c.d, SetMode::sup);
  rep.expect(p == q, "Y lower = Yd at " + set_text(y, c.d), [&] { return fn_text(p) + " vs " + fn_text(q); });
  return rep;
}

Report supmax(Subset y, const Context& c) {
  if (!c.distance) return Report::not_applicable("supmax", "hypothesis fails: not a distance");
  Report rep("supmax");
  const GRel& d = c.d;
  const std::string at = " at " + set_text(y, d);
  const Subset sups = d_sup_set(y, d), maxes = d_max_set(y, d);
  const UnaryFn yd = apply_set(y, d, SetMode::sup), dy = apply_set(y, d, SetMode::inf);
  Subset direct;
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (yd == row(d, x) && d(x, x).is_zero()) direct.insert(x);
  rep.expect(sups == direct, "sup iff equal rows and reflexive" + at,
             [&] { return set_text(sups, d) + " vs " + set_text(direct, d); });
  const Subset lo_sups = d_sup_set(y, c.lo);
  rep.expect(maxes.subset_of(lo_sups), "max is a lower-reflexivization sup" + at,
             [&] { return set_text(maxes, d) + " not inside " + set_text(lo_sups, d); });
  if (is_final(y, d)) {
    Subset cols;
    for (std::size_t x = 0; x < d.rows(); ++x)
      if (dy == column(d, x)) cols.insert(x);
    rep.expect(maxes == cols, "max iff equal columns on final Y" + at,
               [&] { return set_text(maxes, d) + " vs " + set_text(cols, d); });
    if (!maxes.empty())
      rep.expect(lo_sups.subset_of(maxes), "lower sup with some max is a max" + at,
                 [&] { return set_text(lo_sups, d) + " not inside " + set_text(maxes, d); });
  }
  return rep;
}

Report supmaxrelations(Subset y, const Context& c) {
  Report rep("supmaxrelations");
  const GRel& d = c.d;
  const std::string at = " at " + set_text(y, d);
  const Subset dsup = d_sup_set(y, d), rsup = d_sup_set(y, c.zero);
  rep.expect(dsup.subset_of(rsup), "d-sup is a zero-relation sup" + at,
             [&] { return set_text(dsup, d) + " not inside " + set_text(rsup, d); });
  if (c.dsup_hyp)
    rep.expect(rsup.subset_of(dsup), "zero-relation sup is a d-sup" + at,
               [&] { return set_text(rsup, d) + " not inside " + set_text(dsup, d); });
  const Subset dmax = d_max_set(y, d), smax = d_max_set(y, c.strict);
  if (c.dmax_le_hyp)
    rep.expect(smax.subset_of(dmax), "strict max is a d-max" + at,
               [&] { return set_text(smax, d) + " not inside " + set_text(dmax, d); });
  if (c.dmax_ge_hyp && is_final(y, c.strict))
    rep.expect(dmax.subset_of(smax), "d-max is a strict max" + at,
               [&] { return set_text(dmax, d) + " not inside " + set_text(smax, d); });
  return rep;
}

Report directed_cauchy(Subset y, const Context& c) {
  Report rep("directedCauchy");
  const GRel& d = c.d;
  const std::size_t n = d.rows();
  const std::string at = " at " + set_text(y, d);
  bool interleaved = false;
  for (std::uint64_t m = 1; m < powerset_size(n); ++m) {
    const Subset tail{m};
    if (!all_zero_between(y, tail, d)) continue;
    const NetProfile p = NetProfile::cycling(tail);
    for (auto x : limit_points(p, d, {Side::none, Side::hole}).elements())
      rep.expect(apply_set(y, d, SetMode::sup)[x].is_zero(), "hole limit of a net above Y is above Y" + at,
                 [&] { return "tail " + set_text(tail, d) + " limit " + d.source().label(x); });
    if (!c.distance) continue;
    bool below = true;
    for (auto s : tail.elements()) below = below && lower_of(Subset::singleton(s), y, d).is_zero();
    if (!below) continue;
    interleaved = true;
    rep.expect(is_precauchy(p, d), "net squeezed by Y is pre-Cauchy" + at, [&] { return "tail " + set_text(tail, d); });
  }
  if (!c.distance) return rep;
  const bool dir = is_directed(y, d);
  rep.expect(interleaved == dir, "some net squeezed by Y iff Y directed" + at, [&] {
    std::ostringstream os;
    os << "net:" << interleaved << " directed:" << dir;
    return os.str();
  });
  return rep;
}

Report dballclosure(Subset y, const Context& c) {
  if (!c.distance) return Report::not_applicable("dballclosure", "hypothesis fails: not a distance");
  if (!is_final(y, c.d)) return Report::not_applicable("dballclosure", "hypothesis fails: Y is not final");
  Report rep("dballclosure");
  const GRel& d = c.d;
  const std::size_t n = d.rows();
  const std::string at = " at " + set_text(y, d);
  const Subset closure = ideal_closure(y, d);
  const auto sub = subbasic_sets(c.up, {Subbasic::upper_ball});
  Subset topo;
  for (std::size_t x = 0; x < n; ++x)
    if (!(minimal_neighbourhood(n, sub, x) & y).empty()) topo.insert(x);
  rep.expect(closure == topo, "ball closure is {x : xdY = 0}" + at,
             [&] { return set_text(topo, d) + " vs " + set_text(closure, d); });
  if (is_directed(y, d)) {
    rep.expect(is_ideal(closure, d), "closure of directed Y is an ideal" + at);
    for (auto i : ideals(d))
      if (y.subset_of(i))
        rep.expect(closure.subset_of(i), "closure is the least ideal containing Y" + at,
                   [&] { return "ideal " + set_text(i, d); });
  }
  return rep;
}

void fold(Report& into, const Report& sub, std::size_t& applicable) {
  if (sub.status == Status::not_applicable) return;
  ++applicable;
  if (sub.failed()) into.expect(false, sub.name, [&] { return sub.witness; });
}

}  // namespace

void SubsetFamily::normalize() {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

std::vector<std::string> SubsetFamily::member_labels() const {
  std::vector<std::string> out;
  for (auto s : members) out.push_back(format_subset(s, carrier));
  return out;
}

Decision Decision::no_set(Subset s, std::string why) {
  Decision r;
  r.holds = false;
  r.witness_set = s;
  r.detail = std::move(why);
  return r;
}

Decision Decision::no_point(std::size_t x, std::string why) {
  Decision r;
  r.holds = false;
  r.witness_point = x;
  r.detail = std::move(why);
  return r;
}

bool is_directed(Subset y, const GRel& d) {
  require_square(d, "is_directed");
  for (auto t : y.elements()) {
    bool top = true;
    for (auto a : y.elements()) top = top && d(a, t).is_zero();
    if (top) return true;
  }
  return false;
}

bool is_directed_by_subsets(Subset y, const GRel& d) {
  require_square(d, "is_directed_by_subsets");
  // every submask of y, the empty one included
  for (std::uint64_t f = y.bits;; f = (f - 1) & y.bits) {
    if (!upper_of(Subset{f}, y, d).is_zero()) return false;
    if (f == 0) break;
  }
  return true;
}

bool is_final(Subset y, const GRel& d) {
  require_square(d, "is_final");
  return lower_of(y, y, d).is_zero();
}

bool is_ideal(Subset i, const GRel& d) {
  require_square(d, "is_ideal");
  const std::size_t n = d.rows();
  require_powerset(n);
  for (std::uint64_t m = 0; m < powerset_size(n); ++m) {
    const Subset f{m};
    if (f.subset_of(i) != upper_of(f, i, d).is_zero()) return false;
  }
  return true;
}

Subset ideal_closure(Subset y, const GRel& d) {
  require_square(d, "ideal_closure");
  for (auto a : y.elements())
    if (!lower_of(Subset::singleton(a), y, d).is_zero())
      throw PreconditionError("ideal_closure: Y is not final at " + d.source().label(a));
  Subset out;
  const UnaryFn dy = apply_set(y, d, SetMode::inf);
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (dy[x].is_zero()) out.insert(x);
  return out;
}

std::vector<Subset> directed_subsets(const GRel& d, Subset within) {
  require_square(d, "directed_subsets");
  require_powerset(within.count());
  // below[t] = {a : adt = 0}; Y is directed iff some t in Y has Y inside below[t]
  std::vector<std::uint64_t> below(d.rows());
  for (std::size_t t = 0; t < d.rows(); ++t)
    for (std::size_t a = 0; a < d.rows(); ++a)
      if (d(a, t).is_zero()) below[t] |= std::uint64_t{1} << a;
  std::vector<Subset> out;
  for (std::uint64_t m = within.bits; m != 0; m = (m - 1) & within.bits)
    for (std::uint64_t r = m; r != 0; r &= r - 1)
      if ((m & ~below[static_cast<std::size_t>(__builtin_ctzll(r))]) == 0) {
        out.push_back(Subset{m});
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> directed_subsets(const GRel& d) { return directed_subsets(d, Subset::full(d.rows())); }

std::vector<Subset> ideals(const GRel& d) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < powerset_size(d.rows()); ++m)
    if (is_ideal(Subset{m}, d)) out.push_back(Subset{m});
  return out;
}

Subset d_sup_set(Subset y, const GRel& d) {
  require_square(d, "d_sup_set");
  const std::vector<ExtReal> yd = row_sup(y, d);
  Subset out;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    if (!yd[x].is_zero()) continue;
    bool ok = true;
    for (std::size_t w = 0; w < d.cols() && ok; ++w) ok = d(x, w) <= yd[w];
    if (ok) out.insert(x);
  }
  return out;
}

Subset d_max_set(Subset y, const GRel& d) {
  require_square(d, "d_max_set");
  const std::vector<ExtReal> yd = row_sup(y, d), dy = col_inf(y, d);
  Subset out;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    if (!yd[x].is_zero()) continue;
    bool ok = true;
    for (std::size_t c = 0; c < d.rows() && ok; ++c) ok = dy[c] <= d(c, x);
    if (ok) out.insert(x);
  }
  return out;
}

Subset bound_set(Subset y, const GRel& d, Bound b) { return b == Bound::sup ? d_sup_set(y, d) : d_max_set(y, d); }

const char* to_string(Bound b) { return b == Bound::sup ? "sup" : "max"; }

GRel strict_below(const GRel& d) {
  require_square(d, "strict_below");
  const GRel lo = reflexivize_lower(d);
  return GRel::tabulate(d.source(), d.target(), [&](std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < d.cols(); ++z)
      if (lo(y, z).is_zero() && !d(x, z).is_zero()) return kInf;
    return ExtReal();
  });
}

Carrier powerset_carrier(const Carrier& c) {
  require_powerset(c.size());
  std::vector<std::string> labels;
  for (std::uint64_t m = 0; m < powerset_size(c.size()); ++m) labels.push_back(format_subset(Subset{m}, c));
  return Carrier(std::move(labels));
}

GRel subset_rows(const GRel& d) {
  require_square(d, "subset_rows");
  const Carrier p = powerset_carrier(d.source());
  return GRel::tabulate(p, d.target(), [&](std::size_t f, std::size_t x) {
    ExtReal v;
    for (auto a : Subset{f}.elements()) v = max(v, d(a, x));
    return v;
  });
}

GRel subset_cols(const GRel& d) {
  require_square(d, "subset_cols");
  const Carrier p = powerset_carrier(d.target());
  return GRel::tabulate(d.source(), p, [&](std::size_t x, std::size_t z) {
    ExtReal v;
    for (auto a : Subset{z}.elements()) v = max(v, d(x, a));
    return v;
  });
}

Decision is_complete(const GRel& directing, const GRel& d, Bound b) {
  require_same_shape(directing, d, "is_complete");
  for (auto y : directed_subsets(directing))
    if (bound_set(y, d, b).empty())
      return Decision::no_set(y, std::string("directed set without a d-") + to_string(b) + ": " + set_text(y, d));
  return Decision::yes();
}

Decision is_sup_complete(const GRel& d) { return is_complete(d, d, Bound::sup); }
Decision is_max_complete(const GRel& d) { return is_complete(d, d, Bound::max); }

Decision is_limit_complete(const GRel& d, LimitKind kind) {
  require_square(d, "is_limit_complete");
  require_powerset(d.rows());
  for (std::uint64_t m = 1; m < powerset_size(d.rows()); ++m) {
    const NetProfile p = NetProfile::cycling(Subset{m});
    if (is_cauchy(p, d) && limit_points(p, d, kind).empty())
      return Decision::no_set(Subset{m}, "Cauchy net on " + set_text(Subset{m}, d) + " has no " + to_string(kind) +
                                             " limit");
  }
  return Decision::yes();
}

Decision is_ball_hole_complete(const GRel& d) { return is_limit_complete(d, kBallHole); }
Decision is_hole_hole_complete(const GRel& d) { return is_limit_complete(d, kHoleHole); }

Decision is_continuous(const GRel& directing, const GRel& d, Bound b, Subset basis) {
  require_same_shape(directing, d, "is_continuous");
  Subset covered;
  for (auto y : directed_subsets(directing, basis)) covered = covered | bound_set(y, d, b);
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (!covered.contains(x))
      return Decision::no_point(x, d.source().label(x) + " is not a d-" + to_string(b) + " of any directed subset of " +
                                       set_text(basis, d));
  return Decision::yes();
}

Decision is_max_continuous(const GRel& d) { return is_continuous(d, d, Bound::max, Subset::full(d.rows())); }

Decision max_continuity_criterion(const GRel& d) {
  const GRel fd = subset_rows(d);
  const GRel lhs = compose(fd, zero_relation(d));
  auto c = first_excess(lhs, fd);
  if (!c) return Decision::yes();
  return Decision::no_point(c->second, "interpolation fails at " + excess_at(lhs, fd));
}

Decision is_limit_continuous(const GRel& d, LimitKind kind, Subset basis) {
  require_square(d, "is_limit_continuous");
  Subset covered;
  for (std::uint64_t m = basis.bits; m != 0; m = (m - 1) & basis.bits) {
    const NetProfile p = NetProfile::cycling(Subset{m});
    if (is_cauchy(p, d)) covered = covered | limit_points(p, d, kind);
  }
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (!covered.contains(x))
      return Decision::no_point(x, d.source().label(x) + " is not a " + to_string(kind) +
                                       " limit of a Cauchy net in " + set_text(basis, d));
  return Decision::yes();
}

Decision is_ball_hole_continuous(const GRel& d) { return is_limit_continuous(d, kBallHole, Subset::full(d.rows())); }

Decision ball_hole_continuity_criterion(const GRel& d) {
  const GRel fd = subset_rows(d);
  const GRel lhs = compose_uniformity(fd, d);
  auto c = first_excess(lhs, fd);
  if (!c) return Decision::yes();
  return Decision::no_point(c->second, "interpolation fails at " + excess_at(lhs, fd));
}

const char* to_string(BasisKind k) { return k == BasisKind::max ? "max" : "ball-hole"; }

bool is_basis(Subset b, const GRel& d, BasisKind kind) {
  if (kind == BasisKind::max) return is_continuous(d, d, Bound::max, b).holds;
  return is_limit_continuous(d, kBallHole, b).holds;
}

Report check_basis(Subset b, const GRel& d, BasisKind kind) {
  require_square(d, "check_basis");
  const std::string name = std::string("basis-") + to_string(kind);
  if (!is_distance(d)) return Report::not_applicable(name, "hypothesis fails: not a distance");
  const bool continuous =
      kind == BasisKind::max ? is_max_continuous(d).holds : is_ball_hole_continuous(d).holds;
  if (!continuous) return Report::not_applicable(name, "hypothesis fails: X is not continuous");
  Report rep(name);
  const std::size_t n = d.rows();
  const bool def = is_basis(b, d, kind);
  const GRel& last = kind == BasisKind::max ? zero_relation(d) : d;
  const bool interp = uniform_leq(compose_through(d, b, last), d);
  std::vector<Subset> sub = subbasic_sets(d, {Subbasic::upper_ball});
  const auto lower = kind == BasisKind::max ? subbasic_sets(zero_relation(d), {Subbasic::lower_ball})
                                            : subbasic_sets(d, {Subbasic::lower_ball});
  sub.insert(sub.end(), lower.begin(), lower.end());
  bool dense = true;
  for (std::size_t x = 0; x < n && dense; ++x) dense = !(minimal_neighbourhood(n, sub, x) & b).empty();
  auto text = [&] {
    std::ostringstream os;
    os << "definition:" << def << " interpolation:" << interp << " dense:" << dense;
    return os.str();
  };
  rep.expect(def == interp, "basis iff interpolation through B", text);
  rep.expect(def == dense, "basis iff dense", text);
  return rep;
}

bool is_abstract_basis(const GRel& rel) {
  require_square(rel, "is_abstract_basis");
  const GRel fr = subset_rows(rel);
  return leq(compose(fr, rel), fr);
}

Report check_FdY(Subset y, const GRel& d) { return fdy(y, Context(d)); }
Report check_YdYd(Subset y, const GRel& d) { return ydyd(y, Context(d)); }
Report check_supmax(Subset y, const GRel& d) { return supmax(y, Context(d)); }
Report check_supmaxrelations(Subset y, const GRel& d) { return supmaxrelations(y, Context(d)); }
Report check_directedCauchy(Subset y, const GRel& d) { return directed_cauchy(y, Context(d)); }
Report check_dballclosure(Subset y, const GRel& d) { return dballclosure(y, Context(d)); }

Report check_order_sweep(const GRel& d) {
  const Context c(d);
  require_powerset(d.rows());
  Report rep("order");
  std::size_t applicable = 0;
  for (std::uint64_t m = 0; m < powerset_size(d.rows()); ++m) {
    const Subset y{m};
    rep.expect(is_directed(y, d) == is_directed_by_subsets(y, d), "directed by top iff by subsets at " + set_text(y, d));
    fold(rep, fdy(y, c), applicable);
    fold(rep, ydyd(y, c), applicable);
    fold(rep, supmax(y, c), applicable);
    fold(rep, supmaxrelations(y, c), applicable);
    fold(rep, directed_cauchy(y, c), applicable);
    fold(rep, dballclosure(y, c), applicable);
  }
  std::ostringstream os;
  os << applicable << " applicable set-level checks";
  if (c.dsup_hyp) os << "; sup transfer hypothesis holds";
  if (c.dmax_le_hyp) os << "; strict-max transfer hypothesis holds";
  if (c.dmax_ge_hyp) os << "; max-to-strict transfer hypothesis holds";
  rep.note(os.str());
  return rep;
}

namespace {

struct Ledger {
  Report& rep;
  void value(const std::string& name, bool v) { rep.note(name + ": " + (v ? "holds" : "fails")); }
  // hypothesis => conclusion
  void implies(const std::string& name, bool hyp, bool concl) {
    if (!hyp) {
      rep.note(name + ": hypothesis fails");
      return;
    }
    if (concl) {
      rep.note(name + ": hypothesis and conclusion hold");
      return;
    }
    rep.expect(false, "CONTRADICTION " + name, [] { return std::string("hypothesis holds, conclusion fails"); });
  }
  void same(const std::string& name, bool a, bool b) {
    if (a == b) {
      rep.note(name + ": agree (" + (a ? "both hold" : "both fail") + ")");
      return;
    }
    rep.expect(false, "CONTRADICTION " + name, [&] {
      return std::string("left ") + (a ? "holds" : "fails") + ", right " + (b ? "holds" : "fails");
    });
  }
};

// Every lower-Cauchy tail has a d-Cauchy tail with the same lower row limit and d column limit.
bool cauchy_transfer(const GRel& d, const GRel& lo) {
  const std::size_t n = d.rows();
  std::vector<std::pair<UnaryFn, UnaryFn>> targets;
  for (std::uint64_t m = 1; m < powerset_size(n); ++m) {
    const NetProfile p = NetProfile::cycling(Subset{m});
    if (is_cauchy(p, d))
      targets.emplace_back(apply_net_rows(p, lo, NetMode::limsup), apply_net_cols(p, d, NetMode::liminf));
  }
  for (std::uint64_t m = 1; m < powerset_size(n); ++m) {
    const NetProfile p = NetProfile::cycling(Subset{m});
    if (!is_cauchy(p, lo)) continue;
    const auto want = std::make_pair(apply_net_rows(p, lo, NetMode::limsup), apply_net_cols(p, d, NetMode::liminf));
    if (std::find(targets.begin(), targets.end(), want) == targets.end()) return false;
  }
  return true;
}

// Every lower-directed Y has a d-directed Z with the same Y lower and dY.
bool directed_transfer(const GRel& d, const GRel& lo) {
  std::vector<std::pair<UnaryFn, UnaryFn>> targets;
  for (auto z : directed_subsets(d))
    targets.emplace_back(apply_set(z, lo, SetMode::sup), apply_set(z, d, SetMode::inf));
  for (auto y : directed_subsets(lo)) {
    const auto want = std::make_pair(apply_set(y, lo, SetMode::sup), apply_set(y, d, SetMode::inf));
    if (std::find(targets.begin(), targets.end(), want) == targets.end()) return false;
  }
  return true;
}

}  // namespace

Report interpolation_report(const GRel& d, const std::optional<GRel>& e_in) {
  require_square(d, "interpolation_report");
  if (!is_distance(d)) return Report::not_applicable("interpolation", "hypothesis fails: not a distance");
  Report rep("interpolation");
  Ledger L{rep};
  const std::size_t n = d.rows();
  const Subset all = Subset::full(n);
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d), zero = zero_relation(d);
  const GRel lo_sym = symmetrize(lo);
  const GRel fd = subset_rows(d), dp = subset_cols(d);
  const GRel e = e_in ? *e_in : join(lo, opposite(up));
  const bool e_ok = is_distance(e);

  const bool max_complete = is_max_complete(d).holds;
  const bool sup_complete = is_sup_complete(d).holds;
  const bool bh_complete = is_ball_hole_complete(d).holds;
  const bool hh_complete = is_hole_hole_complete(d).holds;
  const bool max_cont = is_max_continuous(d).holds;
  const bool bh_cont = is_ball_hole_continuous(d).holds;
  const bool sup_cont = is_continuous(d, d, Bound::sup, all).holds;
  const bool hh_cont = is_limit_continuous(d, kHoleHole, all).holds;
  const bool reflexive_zero = is_reflexive(d);
  const bool pre = leq(up, lo);

  L.value("ball-hole complete", bh_complete);
  L.value("max complete", max_complete);
  L.value("ball-hole continuous", bh_cont);
  L.value("max continuous", max_cont);

  L.same("ball-hole complete vs max complete", bh_complete, max_complete);
  L.same("hole-hole complete vs sup complete", hh_complete, sup_complete);
  L.implies("hole-hole complete gives sup complete", hh_complete, sup_complete);
  L.implies("ball-hole complete gives max complete", bh_complete, max_complete);

  const bool crit2 = ball_hole_continuity_criterion(d).holds;
  const bool crit25 = uniform_leq(compose(fd, d), fd) && leq(compose_uniformity(d, d), d);
  const bool crit3 = cauchy_transfer(d, lo);
  L.same("ball-hole continuity vs uniformity criterion", bh_cont, crit2);
  L.same("ball-hole continuity vs split criterion", bh_cont, crit25);
  L.same("ball-hole continuity vs lower-Cauchy transfer", bh_cont, crit3);

  const bool m2 = max_continuity_criterion(d).holds;
  const bool m3_first = leq(compose(d, zero), d);
  const bool m3_rel = leq(compose(zero_relation(fd), zero), zero_relation(fd));
  bool m3_dir = true;
  for (std::size_t x = 0; x < n && m3_dir; ++x) {
    Subset below;
    for (std::size_t z = 0; z < n; ++z)
      if (zero(z, x).is_zero()) below.insert(z);
    m3_dir = is_directed(below, d);
  }
  const bool m4 = uniform_leq(compose(d, zero), d) && bh_cont;
  const bool m5 = directed_transfer(d, lo);
  L.same("max continuity vs interpolation criterion", max_cont, m2);
  L.same("lower sets directed vs zero-relation interpolation", m3_dir, m3_rel);
  L.same("max continuity vs max-of-lower-sets criterion", max_cont, m3_first && m3_rel);
  L.same("max continuity vs ball-hole continuity with uniform bound", max_cont, m4);
  L.same("max continuity vs lower-directed transfer", max_cont, m5);
  L.implies("max continuity gives ball-hole continuity", max_cont, bh_cont);
  L.same("max continuity vs ball-hole continuity", max_cont, bh_cont);
  L.same("sup continuity vs reflexive zero relation", sup_cont, reflexive_zero);
  L.same("hole-hole continuity vs reflexive zero relation", hh_cont, reflexive_zero);

  const bool sc1_interp = uniform_leq(compose(lo, zero_relation(dp)), dp);
  const bool strict_max_complete = is_complete(strict_below(d), d, Bound::max).holds;
  const bool zero_max_complete = is_complete(zero, d, Bound::max).holds;
  const bool lo_sym_complete = is_limit_complete(lo_sym, {Side::none, Side::hole}).holds;
  L.implies("Sc1", sc1_interp && strict_max_complete, bh_complete);
  const bool sc2_interp = leq(compose(zero_relation(fd), up), fd);
  L.implies("Sc2", sc2_interp && pre && zero_max_complete && lo_sym_complete, bh_complete);

  const bool e_bounds = uniform_leq(lo, e) && uniform_leq(opposite(up), e);
  const bool e_complete = is_limit_complete(e, {Side::none, Side::hole}).holds;
  const bool sc3_interp = uniform_leq(compose_uniformity(e, up), d);
  const bool sc4_interp = uniform_leq(compose_uniformity(e, d), d);
  if (e_ok) {
    L.implies("Sc3", sc3_interp && e_bounds && max_complete && e_complete, bh_complete);
    // separability is automatic on a finite carrier
    L.implies("Sc4", sc4_interp && e_bounds && zero_max_complete && e_complete, bh_complete);
  } else {
    rep.note("Sc3, Sc4: e is not a distance");
  }

  const bool strict_max_cont = is_continuous(strict_below(d), d, Bound::max, all).holds;
  const bool zero_max_cont = is_continuous(zero, d, Bound::max, all).holds;
  L.implies("ctscor1", bh_cont && sc1_interp, strict_max_cont);
  L.implies("ctscor2", bh_cont && uniform_leq(compose(d, zero), d), max_cont);
  if (e_ok) {
    L.implies("ctscor3", bh_cont && sc3_interp && e_bounds && e_complete, max_cont);
    L.implies("ctscor4", bh_cont && sc4_interp && e_bounds && e_complete, zero_max_cont);
  }

  const bool dom_hyp = sc1_interp || uniform_leq(compose_uniformity(lo_sym, lo), d) ||
                       (uniform_leq(compose(d, zero), d) && leq(compose(zero_relation(fd), lo), fd));
  const bool bh_domain = pre && bh_cont && bh_complete;
  const bool max_domain = pre && max_cont && max_complete && lo_sym_complete;
  if (dom_hyp)
    L.same("domcor", bh_domain, max_domain);
  else
    rep.note("domcor: hypothesis fails");
  return rep;
}

std::size_t contradiction_count(const Report& r) {
  return static_cast<std::size_t>(std::count_if(r.lines.begin(), r.lines.end(), [](const std::string& l) {
    return l.rfind("CONTRADICTION", 0) == 0;
  }));
}

}  // namespace qdt
