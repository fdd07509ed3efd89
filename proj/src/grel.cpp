#include "qdt/grel.hpp"

#include <algorithm>
#include <sstream>

namespace qdt {

GRel::GRel(Carrier source, Carrier target, ExtReal fill)
    : source_(std::move(source)), target_(std::move(target)), cells_(source_.size() * target_.size(), fill) {}

GRel GRel::identity(const Carrier& c) {
  return tabulate(c, c, [](std::size_t i, std::size_t j) { return i == j ? ExtReal() : kInf; });
}

void require_square(const GRel& d, const char* what) {
  if (!d.is_square()) throw CarrierMismatch(std::string(what) + ": relation is not square");
}

void require_same_shape(const GRel& d, const GRel& e, const char* what) {
  if (d.source() != e.source() || d.target() != e.target())
    throw CarrierMismatch(std::string(what) + ": carriers differ");
}

GRel compose(const GRel& d, const GRel& e) {
  if (d.target() != e.source()) throw CarrierMismatch("compose: middle carriers differ");
  GRel out(d.source(), e.target(), kInf);
  const std::size_t n = d.rows(), m = d.cols(), k = e.cols();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < m; ++z) {
      const ExtReal& a = d(x, z);
      if (a.is_infinite()) continue;
      for (std::size_t y = 0; y < k; ++y) {
        ExtReal s = a + e(z, y);
        if (s < out(x, y)) out(x, y) = s;
      }
    }
  return out;
}

GRel opposite(const GRel& d) {
  return GRel::tabulate(d.target(), d.source(), [&](std::size_t i, std::size_t j) { return d(j, i); });
}

GRel join(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "join");
  return GRel::tabulate(d.source(), d.target(), [&](std::size_t i, std::size_t j) { return max(d(i, j), e(i, j)); });
}

GRel meet(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "meet");
  return GRel::tabulate(d.source(), d.target(), [&](std::size_t i, std::size_t j) { return min(d(i, j), e(i, j)); });
}

GRel symmetrize(const GRel& d) {
  require_square(d, "symmetrize");
  return join(d, opposite(d));
}

GRel kan_right(const GRel& d, const GRel& e) {
  if (d.target() != e.target()) throw CarrierMismatch("kan_right: shared target carriers differ");
  return GRel::tabulate(d.source(), e.source(), [&](std::size_t x, std::size_t y) {
    ExtReal best;
    for (std::size_t z = 0; z < d.cols(); ++z) best = max(best, truncated_sub(d(x, z), e(y, z)));
    return best;
  });
}

GRel kan_left(const GRel& e, const GRel& d) {
  if (e.source() != d.source()) throw CarrierMismatch("kan_left: shared source carriers differ");
  return GRel::tabulate(e.target(), d.target(), [&](std::size_t x, std::size_t y) {
    ExtReal best;
    for (std::size_t z = 0; z < d.rows(); ++z) best = max(best, truncated_sub(d(z, y), e(z, x)));
    return best;
  });
}

GRel zero_relation(const GRel& d) {
  return GRel::tabulate(d.source(), d.target(), [&](std::size_t i, std::size_t j) { return scale_inf(d(i, j)); });
}

GRel scale(const GRel& d, const ExtReal& k) {
  return GRel::tabulate(d.source(), d.target(), [&](std::size_t i, std::size_t j) { return k * d(i, j); });
}

GRel compose_uniformity(const GRel& e, const GRel& d) { return compose(e, zero_relation(d)); }

Carrier sub_carrier(const Carrier& c, Subset s) {
  std::vector<std::string> labels;
  for (auto i : s.elements()) labels.push_back(c.label(i));
  return Carrier(std::move(labels));
}

GRel submatrix(const GRel& d, Subset rows, Subset cols) {
  auto ri = rows.elements(), ci = cols.elements();
  return GRel::tabulate(sub_carrier(d.source(), rows), sub_carrier(d.target(), cols),
                        [&](std::size_t i, std::size_t j) { return d(ri[i], ci[j]); });
}

bool leq(const GRel& d, const GRel& e) { return !first_excess(d, e).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> first_excess(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "leq");
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (e(i, j) < d(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

bool uniform_leq(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "uniform_leq");
  for (std::size_t k = 0; k < d.cells().size(); ++k)
    if (e.cells()[k].is_zero() && !d.cells()[k].is_zero()) return false;
  return true;
}

UnaryFn row(const GRel& d, std::size_t x) {
  UnaryFn f(d.target());
  for (std::size_t y = 0; y < d.cols(); ++y) f[y] = d(x, y);
  return f;
}

UnaryFn column(const GRel& d, std::size_t y) {
  UnaryFn f(d.source());
  for (std::size_t x = 0; x < d.rows(); ++x) f[x] = d(x, y);
  return f;
}

UnaryFn apply_set(Subset v, const GRel& d, SetMode mode) {
  if (mode == SetMode::sup) {
    UnaryFn f(d.target());
    for (auto x : v.elements())
      for (std::size_t y = 0; y < d.cols(); ++y) f[y] = max(f[y], d(x, y));
    return f;
  }
  UnaryFn f(d.source(), kInf);
  for (auto y : v.elements())
    for (std::size_t x = 0; x < d.rows(); ++x) f[x] = min(f[x], d(x, y));
  return f;
}

namespace {

ExtReal fold(const std::vector<ExtReal>& vals, NetMode mode) {
  ExtReal acc = vals.front();
  for (const auto& v : vals) acc = mode == NetMode::limsup ? max(acc, v) : min(acc, v);
  return acc;
}

}  // namespace

UnaryFn apply_net_rows(const NetProfile& p, const GRel& d, NetMode mode) {
  p.validate(d.rows());
  UnaryFn f(d.target());
  std::vector<ExtReal> vals(p.cycle.size());
  for (std::size_t y = 0; y < d.cols(); ++y) {
    for (std::size_t k = 0; k < p.cycle.size(); ++k) vals[k] = d(p.cycle[k], y);
    f[y] = fold(vals, mode);
  }
  return f;
}

UnaryFn apply_net_cols(const NetProfile& p, const GRel& d, NetMode mode) {
  p.validate(d.cols());
  UnaryFn f(d.source());
  std::vector<ExtReal> vals(p.cycle.size());
  for (std::size_t x = 0; x < d.rows(); ++x) {
    for (std::size_t k = 0; k < p.cycle.size(); ++k) vals[k] = d(x, p.cycle[k]);
    f[x] = fold(vals, mode);
  }
  return f;
}

UnaryFn apply_net(const NetProfile& p, const GRel& d, NetMode mode) {
  return mode == NetMode::limsup ? apply_net_rows(p, d, mode) : apply_net_cols(p, d, mode);
}

ExtReal sup_over(const UnaryFn& f, Subset s) {
  ExtReal r;
  for (auto i : s.elements()) r = max(r, f[i]);
  return r;
}

ExtReal inf_over(const UnaryFn& f, Subset s) {
  ExtReal r = kInf;
  for (auto i : s.elements()) r = min(r, f[i]);
  return r;
}

bool leq(const UnaryFn& f, const UnaryFn& g) {
  if (f.carrier() != g.carrier()) throw CarrierMismatch("leq: carriers differ");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i] < f[i]) return false;
  return true;
}

bool uniform_leq(const UnaryFn& f, const UnaryFn& g) {
  if (f.carrier() != g.carrier()) throw CarrierMismatch("uniform_leq: carriers differ");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i].is_zero() && !f[i].is_zero()) return false;
  return true;
}

ExtReal modulus(const UnaryFn& f, const UnaryFn& g, const ExtReal& r) {
  if (f.carrier() != g.carrier()) throw CarrierMismatch("modulus: carriers differ");
  ExtReal out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i] <= r) out = max(out, f[i]);
  return out;
}

std::string format_table(const GRel& d) {
  std::vector<std::vector<std::string>> cells(d.rows() + 1, std::vector<std::string>(d.cols() + 1));
  for (std::size_t j = 0; j < d.cols(); ++j) cells[0][j + 1] = d.target().label(j);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    cells[i + 1][0] = d.source().label(i);
    for (std::size_t j = 0; j < d.cols(); ++j) cells[i + 1][j + 1] = d(i, j).to_string();
  }
  std::vector<std::size_t> width(d.cols() + 1, 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) os << "  ";
      os << std::string(width[j] - r[j].size(), ' ') << r[j];
    }
    os << '\n';
  }
  return os.str();
}

Report check_category_laws(const GRel& d, const GRel& e, const GRel& f) {
  require_square(d, "check_category_laws");
  require_same_shape(d, e, "check_category_laws");
  require_same_shape(d, f, "check_category_laws");
  Report rep("category");
  auto cell_text = [](const GRel& a, const GRel& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j))
          return a.source().label(i) + " " + a.target().label(j) + ": " + a(i, j).to_string() + " vs " +
                 b(i, j).to_string();
    return std::string();
  };
  GRel l = compose(compose(d, e), f), r = compose(d, compose(e, f));
  rep.expect(l == r, "associativity", [&] { return cell_text(l, r); });
  rep.expect(opposite(opposite(d)) == d, "involution");
  l = opposite(compose(d, e));
  r = compose(opposite(e), opposite(d));
  rep.expect(l == r, "op reverses composition", [&] { return cell_text(l, r); });

  bool a = leq(kan_right(f, e), d);
  bool b = leq(f, compose(d, e));
  bool c = leq(kan_left(d, f), e);
  rep.expect(a == b && b == c, "f/e <= d iff f <= d o e iff d\\f <= e", [&] {
    return std::to_string(a) + std::to_string(b) + std::to_string(c);
  });
  rep.expect(leq(f, compose(kan_right(f, e), e)), "f <= (f/e) o e");
  rep.expect(leq(f, compose(d, kan_left(d, f))), "f <= d o (d\\f)");
  rep.expect(leq(compose(meet(d, e), f), compose(d, f)), "composition is monotone");
  rep.expect(leq(zero_relation(compose(d, e)), compose(zero_relation(d), zero_relation(e))),
             "zero sets compose into the zero set of d o e");

  UnaryFn fr = row(d, 0), gr = row(e, 0);
  bool mod = true;
  for (std::size_t x = 0; x < fr.size(); ++x) mod = mod && fr[x] <= modulus(fr, gr, gr[x]);
  rep.expect(mod, "f(x) <= (f/g)(g(x))");

  // e composed with the uniformity of d is the limit of e o nd
  ExtReal min_pos = kInf, max_e;
  for (const auto& v : d.cells())
    if (!v.is_zero()) min_pos = min(min_pos, v);
  for (const auto& v : e.cells())
    if (v.is_finite()) max_e = max(max_e, v);
  ExtReal n(1);
  while (min_pos.is_finite() && n * min_pos <= max_e) n = n + n;
  // past n, cells still growing with n diverge
  GRel lim = compose(e, scale(d, n + ExtReal(1)));
  GRel further = compose(e, scale(d, n + n + ExtReal(2)));
  for (std::size_t i = 0; i < lim.rows(); ++i)
    for (std::size_t j = 0; j < lim.cols(); ++j)
      if (lim(i, j) != further(i, j)) lim(i, j) = kInf;
  GRel uni = compose_uniformity(e, d);
  rep.expect(lim == uni, "e o uniformity(d) = sup_n e o nd", [&] { return cell_text(uni, lim); });
  return rep;
}

}  // namespace qdt
