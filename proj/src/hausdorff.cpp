#include "qdt/hausdorff.hpp"

#include <algorithm>
#include <sstream>

#include "qdt/metric.hpp"
#include "qdt/wbd.hpp"

namespace qdt {

namespace {

Carrier family_carrier(const SubsetFamily& f) {
  std::vector<std::string> labels;
  for (auto s : f.members) labels.push_back(format_subset(s, f.carrier));
  return Carrier(std::move(labels));
}

template <class F>
PowersetRel build(const GRel& d, const std::optional<SubsetFamily>& family, F&& cell) {
  require_square(d, "hausdorff");
  PowersetRel out;
  out.base = d.source();
  out.family = family ? *family : full_family(d.source());
  const Carrier c = family_carrier(out.family);
  const auto& m = out.family.members;
  out.values = GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return cell(m[i], m[j]); });
  return out;
}

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

std::string excess(const GRel& a, const GRel& b, const char* l, const char* r) {
  auto c = first_excess(a, b);
  if (!c) return {};
  std::ostringstream os;
  os << "(" << a.source().label(c->first) << "," << a.target().label(c->second) << ") " << l << "=" << a(c->first, c->second)
     << " > " << r << "=" << b(c->first, c->second);
  return os.str();
}

Subset down_set(const GRel& d, std::size_t x) {
  Subset s;
  for (std::size_t z = 0; z < d.rows(); ++z)
    if (d(z, x).is_zero()) s.insert(z);
  return s;
}

// Positions of `s` inside the subcarrier indexed by `b`.
Subset reindex(Subset s, Subset b) {
  Subset out;
  std::size_t k = 0;
  for (auto i : b.elements()) {
    if (s.contains(i)) out.insert(k);
    ++k;
  }
  return out;
}

}  // namespace

std::optional<std::size_t> PowersetRel::index_of(Subset s) const {
  auto it = std::find(family.members.begin(), family.members.end(), s);
  if (it == family.members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - family.members.begin());
}

SubsetFamily full_family(const Carrier& c) {
  require_powerset(c.size());
  SubsetFamily f{c, {}};
  for (std::uint64_t m = 0; m < powerset_size(c.size()); ++m) f.members.push_back(Subset{m});
  return f;
}

SubsetFamily directed_family(const GRel& d) { return {d.source(), directed_subsets(d)}; }

SubsetFamily ideal_family(const GRel& d) { return {d.source(), ideals(d)}; }

PowersetRel hausdorff_upper(const GRel& d, const std::optional<SubsetFamily>& family) {
  return build(d, family, [&](Subset y, Subset z) {
    ExtReal best = kInf;
    for (auto b : z.elements()) {
      ExtReal worst;
      for (auto a : y.elements()) worst = max(worst, d(a, b));
      best = min(best, worst);
    }
    return best;
  });
}

PowersetRel hausdorff_lower(const GRel& d, const std::optional<SubsetFamily>& family) {
  return build(d, family, [&](Subset y, Subset z) {
    ExtReal worst;
    for (auto a : y.elements()) {
      ExtReal best = kInf;
      for (auto b : z.elements()) best = min(best, d(a, b));
      worst = max(worst, best);
    }
    return worst;
  });
}

Report check_hausfunc(const GRel& d, const GRel& e) {
  require_same_shape(d, e, "check_hausfunc");
  Report rep("hausfunc");
  const GRel du = hausdorff_upper(d).values, dl = hausdorff_lower(d).values;
  const GRel eu = hausdorff_upper(e).values, el = hausdorff_lower(e).values;
  const GRel de = compose(d, e);
  const GRel deu = hausdorff_upper(de).values, del = hausdorff_lower(de).values;
  rep.expect(leq(dl, du), "lower <= upper", [&] { return excess(dl, du, "lower", "upper"); });

  const GRel ll = compose(dl, el);
  rep.expect(leq(del, ll), "lower of composite <= composite of lowers",
             [&] { return excess(del, ll, "lower(de)", "lower(d)lower(e)"); });
  const GRel del2 = scale(del, 2);
  rep.expect(leq(ll, del2), "composite of lowers <= twice lower of composite",
             [&] { return excess(ll, del2, "lower(d)lower(e)", "2 lower(de)"); });

  const GRel lu = compose(dl, eu);
  rep.expect(leq(deu, lu), "upper of composite <= lower then upper",
             [&] { return excess(deu, lu, "upper(de)", "lower(d)upper(e)"); });
  const GRel deu2 = scale(deu, 2);
  rep.expect(leq(lu, deu2), "lower then upper <= twice upper of composite",
             [&] { return excess(lu, deu2, "lower(d)upper(e)", "2 upper(de)"); });

  const GRel uu = compose(du, eu), ul = compose(du, el);
  rep.expect(uu == ul, "upper then upper = upper then lower", [&] { return cell_diff(uu, ul, "uu", "ul"); });
  return rep;
}

Report check_hausdorff_prop(const GRel& d) {
  require_square(d, "check_hausdorff_prop");
  Report rep("hausdorffprop");
  const PowersetRel up = hausdorff_upper(d), lo = hausdorff_lower(d);
  const std::size_t n = d.rows();
  for (std::uint64_t m = 0; m < powerset_size(n); ++m) {
    const Subset y{m};
    rep.expect(lo.values(m, m).is_zero() == is_final(y, d), "lower reflexive exactly on final sets at " +
                                                                format_subset(y, d.source()));
  }
  // families of subsets, as subsets of the powerset carrier
  const auto fams_up = directed_subsets(up.values), fams_lo = directed_subsets(lo.values);
  auto union_of = [&](Subset fam) {
    Subset u;
    for (auto i : fam.elements()) u = u | Subset{i};
    return *up.index_of(u);
  };
  std::size_t checked = 0;
  for (auto fam : fams_up) {
    ++checked;
    const std::size_t u = union_of(fam);
    if (!d_max_set(fam, up.values).contains(u)) {
      rep.expect(false, "union is the upper max", [&] { return "family of " + std::to_string(fam.count()) + " sets"; });
      break;
    }
  }
  for (auto fam : fams_lo) {
    ++checked;
    const std::size_t u = union_of(fam);
    if (!d_sup_set(fam, lo.values).contains(u)) {
      rep.expect(false, "union is the lower sup", [&] { return "family of " + std::to_string(fam.count()) + " sets"; });
      break;
    }
  }
  rep.note(std::to_string(checked) + " directed families");
  return rep;
}

Completion complete_predomain(const GRel& d, bool quotient) {
  require_square(d, "complete_predomain");
  if (const Decision c = is_max_continuous(d); !c)
    throw PreconditionError("complete_predomain: not max-continuous: " + c.detail);
  Completion out;
  out.rel = hausdorff_upper(d, directed_family(d));
  Report& rep = out.report;
  rep.name = "predomaincompletion";
  const std::size_t n = d.rows();
  Subset basis;
  for (std::size_t x = 0; x < n; ++x) {
    const auto k = out.rel.index_of(down_set(d, x));
    if (!k) throw PreconditionError("complete_predomain: down-set of " + d.source().label(x) + " is not directed");
    out.embedding.push_back(*k);
    basis.insert(*k);
  }
  const GRel& h = out.rel.values;
  const GRel lower_h = hausdorff_lower(d, out.rel.family).values;
  const GRel lo_of_h = reflexivize_lower(h);
  rep.expect(lo_of_h == lower_h, "lower reflexivization of upper equals lower",
             [&] { return cell_diff(lo_of_h, lower_h, "refl", "lower"); });
  const DomainVerdict v = check_domain(h, DomainKind::max);
  rep.expect(v.domain, "directed subsets form a max-domain", [&] { return v.witness; });
  rep.expect(is_basis(basis, h, BasisKind::max), "down-sets form a max-basis");
  const bool predomain = leq(reflexivize_upper(d), reflexivize_lower(d));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const ExtReal& img = h(out.embedding[x], out.embedding[y]);
      const std::string at = " at (" + d.source().label(x) + "," + d.source().label(y) + ")";
      rep.expect(img <= d(x, y), "embedding is non-expansive" + at, [&] { return img.to_string() + " > " + d(x, y).to_string(); });
      if (predomain)
        rep.expect(img == d(x, y), "embedding is isometric on a predomain" + at,
                   [&] { return img.to_string() + " vs " + d(x, y).to_string(); });
    }
  if (quotient) {
    const Quotient q = quotient_equivalent(h);
    PowersetRel merged;
    merged.base = out.rel.base;
    merged.family.carrier = out.rel.family.carrier;
    for (std::size_t k = 0; k < out.rel.family.members.size(); ++k)
      if (std::find(q.mapping.begin(), q.mapping.begin() + k, q.mapping[k]) == q.mapping.begin() + k)
        merged.family.members.push_back(out.rel.family.members[k]);
    merged.values = q.rel;
    for (auto& e : out.embedding) e = q.mapping[e];
    out.rel = std::move(merged);
  }
  return out;
}

Report check_pdcomp(const GRel& d) {
  require_square(d, "check_pdcomp");
  if (!is_max_continuous(d)) return Report::not_applicable("pdcomp", "hypothesis fails: not max-continuous");
  Report rep("pdcomp");
  const std::size_t n = d.rows();
  const Completion c = complete_predomain(d);
  const GRel& h = c.rel.values;
  const std::size_t m = h.rows();
  // X then the directed subsets; each x is glued to its down-set
  std::vector<std::string> labels = d.source().labels();
  for (const auto& l : h.source().labels()) labels.push_back("[" + l + "]");
  const Carrier ext(labels);
  auto image = [&](std::size_t i) { return i < n ? c.embedding[i] : i - n; };
  const GRel dx = GRel::tabulate(ext, ext, [&](std::size_t i, std::size_t j) { return h(image(i), image(j)); });
  const GRel restricted = submatrix(dx, Subset::full(n), Subset::full(n));
  const bool extends = restricted == d;
  const Quotient q = quotient_equivalent(dx);
  Subset basis;
  for (std::size_t x = 0; x < n; ++x) basis.insert(q.mapping[x]);
  const bool is_b = is_basis(basis, q.rel, BasisKind::max);
  const bool dom = check_domain(q.rel, DomainKind::max).domain;
  const bool pre = check_domain(d, DomainKind::max).predomain;
  const bool ext_ok = extends && is_b && dom;
  rep.note(std::to_string(m) + " directed subsets in the extension");
  rep.expect(pre == ext_ok, "predomain iff basis of a max-domain extension", [&] {
    std::ostringstream os;
    os << "predomain:" << pre << " restricts to d:" << extends << " basis:" << is_b << " domain:" << dom;
    if (!extends) os << " " << cell_diff(restricted, d, "ext", "d");
    return os.str();
  });
  return rep;
}

Report check_universality(Subset basis, const GRel& d) {
  require_square(d, "check_universality");
  const DomainVerdict v = check_domain(d, DomainKind::max);
  if (!v.predomain) return Report::not_applicable("universality", "hypothesis fails: not a max-predomain (" + v.witness + ")");
  if (!is_basis(basis, d, BasisKind::max))
    return Report::not_applicable("universality", "hypothesis fails: " + format_subset(basis, d.source()) + " is not a max-basis");
  Report rep("universality");
  const GRel db = restrict(d, basis);
  const PowersetRel ideal = hausdorff_upper(db, ideal_family(db));
  const std::size_t n = d.rows();
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Subset s = reindex(down_set(d, x) & basis, basis);
    const auto k = ideal.index_of(s);
    rep.expect(k.has_value(), "image of " + d.source().label(x) + " is an ideal of the basis",
               [&] { return format_subset(s, db.source()); });
    if (!k) return rep;
    image[x] = *k;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const ExtReal& got = ideal.values(image[x], image[y]);
      rep.expect(got == d(x, y), "isometry at (" + d.source().label(x) + "," + d.source().label(y) + ")",
                 [&] { return got.to_string() + " vs " + d(x, y).to_string(); });
    }
  const DomainVerdict iv = check_domain(ideal.values, DomainKind::max);
  rep.expect(iv.domain, "ideals of the basis form a max-domain", [&] { return iv.witness; });
  Subset hit;
  for (auto k : image) hit.insert(k);
  const bool onto = hit == Subset::full(ideal.values.rows());
  rep.expect(onto == v.domain, "onto iff max-domain", [&] {
    std::ostringstream os;
    os << "onto:" << onto << " domain:" << v.domain;
    return os.str();
  });
  return rep;
}

Report check_dHhemi(const GRel& d, const std::vector<NetProfile>& profiles) {
  require_square(d, "check_dHhemi");
  Report rep("dHhemi");
  const GRel op = opposite(d);
  std::vector<NetProfile> all = profiles;
  for (auto& p : canonical_profiles(d.rows())) all.push_back(std::move(p));
  bool clause = true;
  for (const auto& p : all) {
    p.validate(d.rows());
    if (is_precauchy(p, d) && !is_cauchy(p, op)) {
      clause = false;
      rep.note("pre-Cauchy profile not Cauchy for the opposite: " + format_profile(p, d.source()));
      break;
    }
  }
  if (!clause) {
    rep.note("clause fails on the profile family; consequence not asserted");
    return rep;
  }
  const PowersetRel h = hausdorff_upper(d, directed_family(d));
  rep.expect(is_reflexive(h.values), "upper Hausdorff has zero diagonal on directed subsets");
  if (is_distance(d)) rep.expect(is_hemimetric(h.values), "upper Hausdorff is a hemimetric on directed subsets");
  return rep;
}

}  // namespace qdt
