#include "qdt/wbd.hpp"

#include <sstream>
#include <stdexcept>

#include "qdt/metric.hpp"

namespace qdt {

namespace {

std::string cell_diff(const GRel& a, const GRel& b, const char* l, const char* r) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "(" << a.source().label(i) << "," << a.target().label(j) << ") " << l << "=" << a(i, j) << " " << r << "="
           << b(i, j);
        return os.str();
      }
  return {};
}

void raise_to(GRel& out, const UnaryFn& into, const GRel& d, std::size_t z) {
  for (std::size_t x = 0; x < out.rows(); ++x)
    for (std::size_t y = 0; y < out.cols(); ++y) out(x, y) = max(out(x, y), truncated_sub(into[x], d(y, z)));
}

}  // namespace

GRel way_below_relational(const GRel& d, Bound mode) {
  require_square(d, "way_below_relational");
  GRel out(d.source(), d.target(), ExtReal());
  for (auto z_set : directed_subsets(d)) {
    const UnaryFn into = apply_set(z_set, d, SetMode::inf);
    for (auto z : bound_set(z_set, d, mode).elements()) raise_to(out, into, d, z);
  }
  return out;
}

GRel way_below_topological(const GRel& d, const std::vector<NetProfile>& profiles, LimitKind kind) {
  require_square(d, "way_below_topological");
  std::vector<NetProfile> all = profiles;
  for (auto& p : canonical_profiles(d.rows())) all.push_back(std::move(p));
  GRel out(d.source(), d.target(), ExtReal());
  for (const auto& p : all) {
    if (!is_cauchy(p, d)) continue;
    const UnaryFn into = apply_net_cols(p, d, NetMode::liminf);
    for (auto z : limit_points(p, d, kind).elements()) raise_to(out, into, d, z);
  }
  return out;
}

const char* to_string(DomainKind k) { return k == DomainKind::max ? "max" : "ball-hole"; }

DomainKind parse_domain_kind(const std::string& text) {
  if (text == "max") return DomainKind::max;
  if (text == "ball-hole" || text == "bh") return DomainKind::ball_hole;
  throw std::invalid_argument("domain kind must be max or ball-hole: " + text);
}

DomainVerdict check_domain(const GRel& d, DomainKind kind) {
  require_square(d, "check_domain");
  DomainVerdict v;
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d);
  if (auto c = first_excess(up, lo)) {
    std::ostringstream os;
    os << "upper(" << d.source().label(c->first) << "," << d.target().label(c->second) << ")=" << up(c->first, c->second)
       << " > lower=" << lo(c->first, c->second);
    v.cell = c;
    v.witness = os.str();
    return v;
  }
  const Decision cont = kind == DomainKind::max ? is_max_continuous(d) : is_ball_hole_continuous(d);
  if (!cont) {
    v.point = cont.witness_point;
    v.witness = "not continuous: " + cont.detail;
    return v;
  }
  v.predomain = true;
  const Decision comp = kind == DomainKind::max ? is_max_complete(d) : is_ball_hole_complete(d);
  if (!comp) {
    v.set = comp.witness_set;
    v.witness = "not complete: " + comp.detail;
    return v;
  }
  v.domain = true;
  return v;
}

Decision is_mixed_limit_continuous(const GRel& d, const GRel& e, LimitKind kind) {
  require_same_shape(d, e, "is_mixed_limit_continuous");
  Subset covered;
  for (std::uint64_t m = 1; m < powerset_size(d.rows()); ++m) {
    const NetProfile p = NetProfile::cycling(Subset{m});
    if (is_cauchy(p, d)) covered = covered | limit_points(p, e, kind);
  }
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (!covered.contains(x))
      return Decision::no_point(x, d.source().label(x) + " is not an " + to_string(kind) + " limit of a Cauchy net");
  return Decision::yes();
}

Report check_dual_characterization(const GRel& d, DomainKind kind) {
  require_square(d, "check_dual_characterization");
  const std::string name = kind == DomainKind::max ? "rdomaineqs" : "tdomaineqs";
  if (!is_distance(d)) return Report::not_applicable(name, "hypothesis fails: not a distance");
  Report rep(name);
  const GRel up = reflexivize_upper(d), e = reflexivize_lower(d);
  const bool ordered = leq(up, e);
  bool complete2, continuous2, complete1, continuous1;
  GRel way;
  if (kind == DomainKind::max) {
    complete2 = is_max_complete(d).holds;
    continuous2 = is_max_continuous(d).holds;
    complete1 = is_sup_complete(e).holds;
    continuous1 = is_continuous(d, e, Bound::sup, Subset::full(d.rows())).holds;
    way = way_below_relational(e, Bound::sup);
  } else {
    complete2 = is_ball_hole_complete(d).holds;
    continuous2 = is_ball_hole_continuous(d).holds;
    complete1 = is_hole_hole_complete(e).holds;
    continuous1 = is_mixed_limit_continuous(d, e, kHoleHole).holds;
    way = way_below_topological(e, {}, kHoleHole);
  }
  const bool recovered = way == d;
  const bool side1 = complete1 && continuous1 && recovered;
  const bool side2 = complete2 && continuous2 && ordered;
  auto flag = [](bool b) { return b ? "holds" : "fails"; };
  rep.note(std::string("lower side: complete ") + flag(complete1) + ", continuous " + flag(continuous1) +
           ", d recovered " + flag(recovered));
  rep.note(std::string("d side: complete ") + flag(complete2) + ", continuous " + flag(continuous2) +
           ", upper <= lower " + flag(ordered));
  rep.expect(side1 == side2, "both characterizations agree", [&] {
    std::string s = std::string("lower side ") + flag(side1) + ", d side " + flag(side2);
    if (!recovered) s += "; " + cell_diff(way, d, "way-below", "d");
    return s;
  });
  return rep;
}

Report check_wbprops(const GRel& d, LimitKind kind) {
  require_square(d, "check_wbprops");
  Report rep("wbprops");
  const GRel t = way_below_topological(d, {}, kind);
  bool any = false;
  if (is_reflexive(d)) {
    any = true;
    rep.expect(leq(d, t), "d <= way-below", [&] { return cell_diff(d, t, "d", "way"); });
  }
  if (is_distance(d)) {
    any = true;
    const GRel bound = join(reflexivize_lower(t), reflexivize_upper(t));
    rep.expect(leq(bound, d), "reflexivizations of way-below <= d", [&] { return cell_diff(bound, d, "refl", "d"); });
  }
  if (is_hemimetric(d) || kind.lower == Side::hole) {
    any = true;
    rep.expect(is_distance(t), "way-below is a distance");
  }
  if (!any) return Report::not_applicable("wbprops", "hypothesis fails: no clause applies");
  return rep;
}

Report check_rdprops(const GRel& d, Bound mode) {
  require_square(d, "check_rdprops");
  Report rep("rdprops");
  const GRel r = way_below_relational(d, mode);
  const std::size_t n = d.rows();
  bool self_bound = true;
  for (std::size_t x = 0; x < n && self_bound; ++x) self_bound = bound_set(Subset::singleton(x), d, mode).contains(x);
  bool below = true;
  for (std::uint64_t m = 0; m < powerset_size(n) && below; ++m) {
    const UnaryFn into = apply_set(Subset{m}, d, SetMode::inf);
    for (auto z : bound_set(Subset{m}, d, mode).elements()) below = below && leq(column(d, z), into);
  }
  bool any = false;
  if (is_reflexive(d) && self_bound) {
    any = true;
    rep.expect(leq(d, r), "d <= way-below", [&] { return cell_diff(d, r, "d", "way"); });
  }
  if (is_distance(d)) {
    any = true;
    const GRel bound = join(reflexivize_lower(r), reflexivize_upper(r));
    rep.expect(leq(bound, d), "reflexivizations of way-below <= d", [&] { return cell_diff(bound, d, "refl", "d"); });
  }
  if ((is_hemimetric(d) && self_bound) || below) {
    any = true;
    rep.expect(is_distance(r), "way-below is a distance");
  }
  if (!any) return Report::not_applicable("rdprops", "hypothesis fails: no clause applies");
  return rep;
}

Report check_way_below_agreement(const GRel& d) {
  require_square(d, "check_way_below_agreement");
  if (!is_distance(d)) return Report::not_applicable("wbagree", "hypothesis fails: not a distance");
  Report rep("wbagree");
  const GRel rs = way_below_relational(d, Bound::sup), th = way_below_topological(d, {}, kHoleHole);
  rep.expect(rs == th, "sup table equals hole-hole table", [&] { return cell_diff(rs, th, "sup", "hole-hole"); });
  const GRel rm = way_below_relational(d, Bound::max), tb = way_below_topological(d, {}, kBallHole);
  rep.expect(rm == tb, "max table equals ball-hole table", [&] { return cell_diff(rm, tb, "max", "ball-hole"); });
  return rep;
}

Report check_hole_continuity(const GRel& d) {
  require_square(d, "check_hole_continuity");
  if (!is_distance(d)) return Report::not_applicable("holecont", "hypothesis fails: not a distance");
  Report rep("holecont");
  const bool refl = is_reflexive(d);
  const bool hh = is_limit_continuous(d, kHoleHole, Subset::full(d.rows())).holds;
  const bool sup = is_continuous(d, d, Bound::sup, Subset::full(d.rows())).holds;
  rep.expect(hh == refl, "hole-hole continuous iff zero relation reflexive");
  rep.expect(sup == refl, "sup-continuous iff zero relation reflexive");
  return rep;
}

}  // namespace qdt
