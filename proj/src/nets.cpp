#include "qdt/nets.hpp"

#include <sstream>

namespace qdt {

namespace {

std::string subset_text(Subset s, const GRel& d) { return format_subset(s, d.source()); }

std::vector<Subbasic> subbasics_for(LimitKind k) {
  std::vector<Subbasic> out;
  if (k.upper == Side::ball) out.push_back(Subbasic::upper_ball);
  if (k.upper == Side::hole) out.push_back(Subbasic::upper_hole);
  if (k.lower == Side::ball) out.push_back(Subbasic::lower_ball);
  if (k.lower == Side::hole) out.push_back(Subbasic::lower_hole);
  return out;
}

std::string fn_diff(const UnaryFn& f, const UnaryFn& g, const char* l, const char* r) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != g[i]) {
      std::ostringstream os;
      os << "at " << f.carrier().label(i) << " " << l << "=" << f[i] << " vs " << r << "=" << g[i];
      return os.str();
    }
  return {};
}

}  // namespace

bool is_precauchy(const NetProfile& p, const GRel& d) {
  require_square(d, "is_precauchy");
  p.validate(d.rows());
  for (auto a : p.cycle)
    for (auto b : p.cycle)
      if (!d(a, b).is_zero()) return false;
  return true;
}

bool is_cauchy(const NetProfile& p, const GRel& d) {
  require_square(d, "is_cauchy");
  p.validate(d.rows());
  const std::size_t start = p.prefix.size(), period = p.cycle.size();
  for (std::size_t g = start; g < start + period; ++g) {
    ExtReal tail;
    for (std::size_t k = g + 1; k <= g + period; ++k) tail = max(tail, d(p.at(g), p.at(k)));
    if (!tail.is_zero()) return false;
  }
  return true;
}

LimitKind parse_limit_kind(const std::string& text) {
  auto side = [&](char c) {
    if (c == 'b') return Side::ball;
    if (c == 'h') return Side::hole;
    if (c == '-') return Side::none;
    throw std::invalid_argument("limit kind must be two of b, h, -: " + text);
  };
  if (text.size() != 2) throw std::invalid_argument("limit kind must be two of b, h, -: " + text);
  return {side(text[0]), side(text[1])};
}

std::string to_string(LimitKind k) {
  auto c = [](Side s) { return s == Side::ball ? 'b' : s == Side::hole ? 'h' : '-'; };
  return {c(k.upper), c(k.lower)};
}

Subset limit_points(const NetProfile& p, const GRel& d, LimitKind kind) {
  require_square(d, "limit_points");
  p.validate(d.rows());
  const std::size_t n = d.rows();
  // limsup_l c d x_l, liminf_l x_l d c, limsup_l x_l d c, liminf_l c d x_l
  const UnaryFn into_sup = apply_net_cols(p, d, NetMode::limsup);
  const UnaryFn from_inf = apply_net_rows(p, d, NetMode::liminf);
  const UnaryFn from_sup = apply_net_rows(p, d, NetMode::limsup);
  const UnaryFn into_inf = apply_net_cols(p, d, NetMode::liminf);
  Subset out;
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      if (kind.upper == Side::ball) ok = ok && into_sup[c] <= d(c, x);
      if (kind.upper == Side::hole) ok = ok && from_inf[c] >= d(x, c);
      if (kind.lower == Side::ball) ok = ok && from_sup[c] <= d(x, c);
      if (kind.lower == Side::hole) ok = ok && into_inf[c] >= d(c, x);
    }
    if (ok) out.insert(x);
  }
  return out;
}

Subset limit_points_by_opens(const NetProfile& p, const GRel& d, LimitKind kind) {
  require_square(d, "limit_points_by_opens");
  p.validate(d.rows());
  const auto sub = subbasic_sets(d, subbasics_for(kind));
  const Subset tail = p.tail_set();
  Subset out;
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (tail.subset_of(minimal_neighbourhood(d.rows(), sub, x))) out.insert(x);
  return out;
}

Subset d_limits(const NetProfile& p, const GRel& d) {
  require_square(d, "d_limits");
  const UnaryFn f = apply_net_rows(p, d, NetMode::limsup);
  Subset out;
  for (std::size_t x = 0; x < d.rows(); ++x)
    if (f == row(d, x)) out.insert(x);
  return out;
}

bool tends_to_zero(const NetProfile& p, const GRel& e, std::size_t x) {
  p.validate(e.rows());
  for (auto c : p.cycle)
    if (!e(c, x).is_zero()) return false;
  return true;
}

Report check_symCauchy(const NetProfile& p, const GRel& d) {
  if (!is_symmetric(d) || !is_distance(d))
    return Report::not_applicable("symCauchy", "hypothesis fails: not a symmetric distance");
  Report rep("symCauchy");
  const bool pre = is_precauchy(p, d), full = is_cauchy(p, d);
  rep.expect(pre == full, "pre-Cauchy iff Cauchy", [&] {
    std::ostringstream os;
    os << "pre-Cauchy:" << pre << " Cauchy:" << full;
    return os.str();
  });
  return rep;
}

Report check_clim(const NetProfile& p, const GRel& d) {
  require_square(d, "check_clim");
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d);
  const bool up_pre = is_precauchy(p, up), lo_pre = is_precauchy(p, lo), d_pre = is_precauchy(p, d);
  if (!up_pre && !lo_pre && !(d_pre && is_distance(d)))
    return Report::not_applicable("clim", "hypothesis fails: not pre-Cauchy for d, its upper or lower reflexivization");
  Report rep("clim");
  rep.expect(!d_pre || is_cauchy(p, d), "Cauchy subnet exists");
  if (up_pre) {
    const UnaryFn s = apply_net_rows(p, d, NetMode::limsup), i = apply_net_rows(p, d, NetMode::liminf);
    rep.expect(s == i, "rows converge", [&] { return fn_diff(s, i, "limsup", "liminf"); });
  }
  if (lo_pre) {
    const UnaryFn s = apply_net_cols(p, d, NetMode::limsup), i = apply_net_cols(p, d, NetMode::liminf);
    rep.expect(s == i, "columns converge", [&] { return fn_diff(s, i, "limsup", "liminf"); });
    const UnaryFn lhs = apply_net_rows(p, lo, NetMode::limsup);
    const UnaryFn into = apply_net_cols(p, d, NetMode::liminf);
    UnaryFn rhs(d.target());
    for (std::size_t y = 0; y < d.cols(); ++y)
      for (std::size_t z = 0; z < d.rows(); ++z) rhs[y] = max(rhs[y], truncated_sub(d(z, y), into[z]));
    rep.expect(lhs == rhs, "lower row limit equals sup of column excess",
               [&] { return fn_diff(lhs, rhs, "net-lower", "sup"); });
  }
  if (d_pre && is_distance(d)) {
    const UnaryFn a = apply_net_cols(p, d, NetMode::liminf), b = apply_net_cols(p, up, NetMode::liminf);
    rep.expect(a == b, "column limit of d equals that of upper", [&] { return fn_diff(a, b, "d", "upper"); });
    const UnaryFn c = apply_net_rows(p, d, NetMode::limsup), e = apply_net_rows(p, lo, NetMode::limsup);
    rep.expect(c == e, "row limit of d equals that of lower", [&] { return fn_diff(c, e, "d", "lower"); });
  }
  return rep;
}

Report check_convchar(const NetProfile& p, const GRel& d) {
  require_square(d, "check_convchar");
  Report rep("convchar");
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d);
  const Subset lower_hole = limit_points(p, d, {Side::none, Side::hole});
  const Subset lower_ball = limit_points(p, d, {Side::none, Side::ball});
  for (std::size_t x = 0; x < d.rows(); ++x) {
    const std::string at = " at " + d.source().label(x);
    if (tends_to_zero(p, lo, x)) rep.expect(lower_hole.contains(x), "lower-reflexive tail gives hole limit" + at);
    if (tends_to_zero(p, up, x)) rep.expect(lower_ball.contains(x), "upper-reflexive tail gives ball limit" + at);
    if (lower_ball.contains(x) && d(x, x).is_zero())
      rep.expect(tends_to_zero(p, d, x), "ball limit at reflexive point gives d-tail to zero" + at);
  }
  return rep;
}

Report check_dlimits(const NetProfile& p, const GRel& d) {
  require_square(d, "check_dlimits");
  Report rep("dlimits");
  const GRel up = reflexivize_upper(d), lo = reflexivize_lower(d);
  const Subset tail = p.tail_set();
  const std::size_t n = d.rows();
  bool any = false;

  auto subnets_agree = [&](LimitKind kind, Subset expected) {
    for (std::uint64_t m = 1; m < powerset_size(n); ++m) {
      Subset s{m};
      if (!s.subset_of(tail)) continue;
      const Subset got = limit_points(NetProfile::cycling(s), d, kind);
      if (got != expected) return "subnet on " + subset_text(s, d) + " has " + subset_text(got, d);
    }
    return std::string();
  };

  if (is_precauchy(p, up)) {
    any = true;
    const Subset topo = limit_points(p, d, kHoleBall), rowwise = d_limits(p, d);
    rep.expect(topo == rowwise, "hole-ball limits are the d-limits",
               [&] { return subset_text(topo, d) + " vs " + subset_text(rowwise, d); });
    const std::string sub = subnets_agree(kHoleBall, topo);
    rep.expect(sub.empty(), "hole-ball limits pass to subnets", [&] { return sub; });
  }
  if (is_precauchy(p, lo)) {
    any = true;
    const Subset topo = limit_points(p, d, kBallHole);
    const UnaryFn into = apply_net_cols(p, d, NetMode::liminf);
    Subset colwise;
    for (std::size_t x = 0; x < n; ++x)
      if (into == column(d, x)) colwise.insert(x);
    rep.expect(topo == colwise, "ball-hole limits are the column limits",
               [&] { return subset_text(topo, d) + " vs " + subset_text(colwise, d); });
    const std::string sub = subnets_agree(kBallHole, topo);
    rep.expect(sub.empty(), "ball-hole limits pass to subnets", [&] { return sub; });
    const UnaryFn lo_row = apply_net_rows(p, lo, NetMode::limsup);
    for (auto x : topo.elements())
      rep.expect(lo_row == row(lo, x), "ball-hole limit has the lower row of the net at " + d.source().label(x));
    if (!topo.empty())
      for (std::size_t x = 0; x < n; ++x)
        if (lo_row == row(lo, x))
          rep.expect(topo.contains(x), "lower row match is a ball-hole limit at " + d.source().label(x));
  }
  if (is_precauchy(p, d) && is_distance(d)) {
    any = true;
    const Subset hole_lim = limit_points(p, d, {Side::none, Side::hole});
    Subset zero_tail;
    for (std::size_t x = 0; x < n; ++x)
      if (tends_to_zero(p, d, x)) zero_tail.insert(x);
    rep.expect(hole_lim == zero_tail, "lower hole limits are the d-tails to zero",
               [&] { return subset_text(hole_lim, d) + " vs " + subset_text(zero_tail, d); });
    const Subset hh = limit_points(p, d, kHoleHole), hb = limit_points(p, d, kHoleBall);
    Subset refl_hb;
    for (auto x : hb.elements())
      if (d(x, x).is_zero()) refl_hb.insert(x);
    rep.expect(hh == refl_hb, "hole-hole limits are reflexive hole-ball limits",
               [&] { return subset_text(hh, d) + " vs " + subset_text(refl_hb, d); });
  }
  if (!any) return Report::not_applicable("dlimits", "hypothesis fails: no pre-Cauchy condition holds");
  return rep;
}

}  // namespace qdt
