#include "qdt/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "qdt/balls.hpp"
#include "qdt/hausdorff.hpp"
#include "qdt/json_io.hpp"
#include "qdt/metric.hpp"
#include "qdt/nets.hpp"
#include "qdt/order.hpp"
#include "qdt/wbd.hpp"

namespace qdt {
namespace {

const GRel& second(const Instance& i) { return i.e ? *i.e : i.d; }
const GRel& third(const Instance& i) { return i.f ? *i.f : i.d; }

BallGrid grid_of(const Instance& i) {
  if (i.radii) return make_grid(i.d.source(), *i.radii);
  return i.e ? table_grid(i.d, *i.e) : table_grid(i.d);
}

Subset the_subset(const Instance& i) {
  if (!i.subset) throw std::logic_error("subset check dispatched without a subset");
  return *i.subset;
}

const NetProfile& the_profile(const Instance& i) {
  if (i.profiles.size() != 1) throw std::logic_error("profile check dispatched without a profile");
  return i.profiles.front();
}

// Both limit kinds and both bound modes in one report.
Report wbprops_all(const GRel& d) {
  Report rep("wbprops");
  for (LimitKind k : {kHoleHole, kBallHole}) {
    Report sub = check_wbprops(d, k);
    sub.name = to_string(k);
    rep.absorb(sub);
  }
  return rep;
}

Report rdprops_all(const GRel& d) {
  Report rep("rdprops");
  for (Bound b : {Bound::sup, Bound::max}) {
    Report sub = check_rdprops(d, b);
    sub.name = to_string(b);
    rep.absorb(sub);
  }
  return rep;
}

Report basis_both(Subset b, const GRel& d) {
  Report rep("basis");
  for (BasisKind k : {BasisKind::max, BasisKind::ball_hole}) {
    Report sub = check_basis(b, d, k);
    sub.name = to_string(k);
    rep.absorb(sub);
  }
  return rep;
}

Report interpolation(const Instance& i) {
  Report r = interpolation_report(i.d, i.e);
  r.name = "interpolation";
  return r;
}

Report finite_reductions(const GRel& d) {
  Report rep("reductions");
  const bool bh = bool(is_ball_hole_complete(d)), hh = bool(is_hole_hole_complete(d));
  const bool mx = bool(is_max_complete(d)), sp = bool(is_sup_complete(d));
  rep.expect(!bh || mx, "ball-hole complete implies max-complete");
  rep.expect(!hh || sp, "hole-hole complete implies sup-complete");
  if (!is_distance(d)) {
    rep.note("converses and continuity criteria: not applicable (not a distance)");
    return rep;
  }
  rep.expect(bh == mx, "ball-hole complete iff max-complete");
  rep.expect(hh == sp, "hole-hole complete iff sup-complete");
  rep.expect(bool(is_max_continuous(d)) == bool(max_continuity_criterion(d)), "max-continuity criterion");
  rep.expect(bool(is_ball_hole_continuous(d)) == bool(ball_hole_continuity_criterion(d)),
             "ball-hole continuity criterion");
  return rep;
}

Report triangle_property(const GRel& d, bool zero_diagonal) {
  Report rep(zero_diagonal ? "hemimetric" : "distance");
  const GRel dd = compose(d, d);
  auto c = first_excess(d, dd);
  rep.expect(!c, "d <= d o d", [&] {
    for (std::size_t z = 0; z < d.rows(); ++z)
      if (d(c->first, z) + d(z, c->second) < d(c->first, c->second))
        return d.source().label(c->first) + " " + d.source().label(c->second) + " via " + d.source().label(z) + ": " +
               d(c->first, c->second).to_string() + " > " + d(c->first, z).to_string() + " + " +
               d(z, c->second).to_string();
    return std::string();
  });
  if (zero_diagonal)
    for (std::size_t x = 0; x < d.rows(); ++x)
      if (!rep.expect(d(x, x).is_zero(), "zero diagonal", [&] { return d.source().label(x) + " " + d(x, x).to_string(); }))
        break;
  return rep;
}

Report domain_property(const GRel& d, bool complete) {
  Report rep(complete ? "domain" : "predomain");
  const DomainVerdict v = check_domain(d, DomainKind::max);
  rep.expect(complete ? v.domain : v.predomain, complete ? "max-domain" : "max-predomain", [&] { return v.witness; });
  return rep;
}

std::vector<CheckInfo> build_registry() {
  std::vector<CheckInfo> r;
  auto add = [&](std::string id, std::string statement, unsigned needs, std::function<Report(const Instance&)> f) {
    r.push_back({std::move(id), std::move(statement), needs, std::move(f)});
  };
  add("category", "composition is associative, op is an involution, Kan extensions are adjoint to composition",
      kNeedsSecond | kNeedsThird, [](const Instance& i) { return check_category_laws(i.d, second(i), third(i)); });
  add("hemiprop", "both reflexivizations are hemimetrics and a distance factors through them", 0,
      [](const Instance& i) { return check_hemiprop(i.d); });
  add("reflexrestrict", "restriction commutes with upper reflexivization when d o Y o d <= d", kNeedsSubset,
      [](const Instance& i) { return check_reflexrestrict(i.d, the_subset(i)); });
  add("symCauchy", "for symmetric d, pre-Cauchy and Cauchy nets coincide", kNeedsProfile,
      [](const Instance& i) { return check_symCauchy(the_profile(i), i.d); });
  add("clim", "limit characterizations of Cauchy nets agree", kNeedsProfile,
      [](const Instance& i) { return check_clim(the_profile(i), i.d); });
  add("convchar", "limits from limsup/liminf agree with limits in the generated topologies", kNeedsProfile,
      [](const Instance& i) { return check_convchar(the_profile(i), i.d); });
  add("dlimits", "hole-ball and ball-hole limits are the row and column d-limits, and pass to subnets", kNeedsProfile,
      [](const Instance& i) { return check_dlimits(the_profile(i), i.d); });
  add("FdY", "for final Y over a distance, F(dY) = (Fd)Y for all finite F iff Y is directed", kNeedsSubset,
      [](const Instance& i) { return check_FdY(the_subset(i), i.d); });
  add("YdYd", "for final Y over a distance, reflexivizations agree with d against Y", kNeedsSubset,
      [](const Instance& i) { return check_YdYd(the_subset(i), i.d); });
  add("supmax", "every d-max is a lower-reflexivized sup; maxima of final sets are detected by dY", kNeedsSubset,
      [](const Instance& i) { return check_supmax(the_subset(i), i.d); });
  add("supmaxrelations", "d-sups and d-maxes against the sups and maxes of the reflexivizations", kNeedsSubset,
      [](const Instance& i) { return check_supmaxrelations(the_subset(i), i.d); });
  add("directedCauchy", "Y is directed iff some net interleaves Y as a Cauchy net", kNeedsSubset,
      [](const Instance& i) { return check_directedCauchy(the_subset(i), i.d); });
  add("dballclosure", "the ideal generated by a directed set is the zero ball closure", kNeedsSubset,
      [](const Instance& i) { return check_dballclosure(the_subset(i), i.d); });
  add("reductions", "finite completeness and continuity reductions match direct enumeration", 0,
      [](const Instance& i) { return finite_reductions(i.d); });
  add("interpolation", "whenever a transfer hypothesis holds its conclusion holds", 0, interpolation);
  add("basis", "basis definitions agree with their characterizations", kNeedsSubset,
      [](const Instance& i) { return basis_both(the_subset(i), i.d); });
  add("wbprops", "topological way-below bounds", 0, [](const Instance& i) { return wbprops_all(i.d); });
  add("rdprops", "relational way-below bounds", 0, [](const Instance& i) { return rdprops_all(i.d); });
  add("rdomaineqs", "max-domains are dual to sup-complete lower reflexivizations", 0,
      [](const Instance& i) { return check_dual_characterization(i.d, DomainKind::max); });
  add("tdomaineqs", "ball-hole domains are dual to hole-hole complete lower reflexivizations", 0,
      [](const Instance& i) { return check_dual_characterization(i.d, DomainKind::ball_hole); });
  add("wbagree", "relational and topological way-below tables agree for distances", 0,
      [](const Instance& i) { return check_way_below_agreement(i.d); });
  add("holecontinuity", "hole-hole continuity and sup-continuity match reflexivity of the zero relation", 0,
      [](const Instance& i) { return check_hole_continuity(i.d); });
  add("hausfunc", "Hausdorff distances are functorial up to the stated bounds", kNeedsSecond,
      [](const Instance& i) { return check_hausfunc(i.d, second(i)); });
  add("hausdorffprop", "unions are maxima of upper-directed and sups of lower-directed families", 0,
      [](const Instance& i) { return check_hausdorff_prop(i.d); });
  add("pdcomp", "predomains are exactly the max-bases of max-domains", 0,
      [](const Instance& i) { return check_pdcomp(i.d); });
  add("universality", "the ideal completion of a basis is isometric to the domain", kNeedsSubset,
      [](const Instance& i) { return check_universality(the_subset(i), i.d); });
  add("dHhemi", "upper Hausdorff has zero diagonal on directed subsets, a hemimetric for distances", kUsesProfiles,
      [](const Instance& i) { return check_dHhemi(i.d, i.profiles); });
  add("xdy", "d is recovered from the order of formal balls, and the strict order has the stated form", 0,
      [](const Instance& i) { return check_xdy(i.d); });
  add("bfunc", "the ball construction preserves composition and commutes with reflexivizations when columns or rows have zeros", kNeedsSecond,
      [](const Instance& i) { return check_bfunc(i.d, second(i)); });
  add("bunder", "strict and non-strict ball orders factor through one another", kNeedsSecond,
      [](const Instance& i) { return check_bunder_binter(i.d, second(i)); });
  add("binter", "strict ball orders interpolate against the lifted distances", kNeedsSecond,
      [](const Instance& i) { return check_bunder_binter(i.d, second(i)); });
  add("alphatri", "aperture(Y) <= aperture(Z) + Z d+H Y on grid families", kUsesGrid,
      [](const Instance& i) { return check_alphatri(i.d, grid_of(i), i.seed); });
  add("contdomballs", "ball-hole completeness and continuity match the strict order on formal balls", kUsesGrid,
      [](const Instance& i) { return check_contdomballs(i.d, grid_of(i)); });
  add("kw", "d is a ball-hole domain iff its formal balls form a strict max-domain whose underline is the lifted lower reflexivization",
      0, [](const Instance& i) { return check_kw(i.d); });
  add("rv", "a hemimetric is Smyth complete iff its formal balls form a strict max-domain", 0,
      [](const Instance& i) { return check_rv(i.d); });
  add("esmyth", "Smyth completeness clauses agree", kUsesProfiles,
      [](const Instance& i) { return check_esmyth(i.d, i.profiles); });
  add("toppredomaincompletion", "zero-aperture directed ball families complete a ball-hole predomain", 0,
      [](const Instance& i) { return check_top_completion(i.d); });
  add("toppredomainuniversality", "a ball-hole basis generates the domain through its ball families",
      kNeedsSubset, [](const Instance& i) { return check_top_universality(the_subset(i), i.d); });
  add("distance", "the instance satisfies the triangle inequality", kProperty,
      [](const Instance& i) { return triangle_property(i.d, false); });
  add("hemimetric", "the instance is a distance with zero diagonal", kProperty,
      [](const Instance& i) { return triangle_property(i.d, true); });
  add("predomain", "the instance is a max-predomain", kProperty,
      [](const Instance& i) { return domain_property(i.d, false); });
  add("domain", "the instance is a max-domain", kProperty,
      [](const Instance& i) { return domain_property(i.d, true); });
  return r;
}

// Folds per-subset or per-profile runs: any failure fails, all-inapplicable is inapplicable.
struct Sweep {
  explicit Sweep(const std::string& id) : rep(id) {}
  Report rep;
  std::size_t runs = 0, applicable = 0;
  std::optional<Report> first_failure;
  std::string failure_at;

  void add(Report sub, const std::string& at) {
    ++runs;
    if (sub.status == Status::not_applicable) return;
    ++applicable;
    if (sub.failed() && !first_failure) {
      first_failure = std::move(sub);
      failure_at = at;
    }
  }

  Report finish(const std::string& unit) {
    rep.note(unit + ": " + std::to_string(applicable) + " applicable of " + std::to_string(runs));
    if (first_failure) {
      first_failure->name = failure_at;
      rep.absorb(*first_failure);
    } else if (applicable == 0) {
      rep.status = Status::not_applicable;
      rep.witness = "hypothesis fails for every " + unit.substr(0, unit.size() - 1);
    }
    return rep;
  }
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ExtReal random_value(std::mt19937_64& rng) {
  static const ExtReal palette[] = {0, 0, ExtReal::ratio(1, 2), 1, ExtReal::ratio(3, 2), 2, kInf};
  return palette[rng() % std::size(palette)];
}

// d /\ d o d until stable: the least distance below d.
GRel triangle_closure(GRel d) {
  for (;;) {
    GRel next = meet(d, compose(d, d));
    if (next == d) return d;
    d = std::move(next);
  }
}

GRel random_table(std::size_t n, std::mt19937_64& rng, bool zero_diagonal) {
  Carrier c = Carrier::numbered(n);
  GRel d(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = (zero_diagonal && i == j) ? ExtReal() : random_value(rng);
  return d;
}

GRel random_order(std::size_t n, std::mt19937_64& rng, bool strict) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  // reach[a][b]: a precedes b
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2) reach[perm[i]][perm[j]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return GRel::tabulate(Carrier::numbered(n), Carrier::numbered(n), [&](std::size_t i, std::size_t j) {
    bool below = reach[i][j] || (!strict && i == j);
    return below ? ExtReal() : kInf;
  });
}

// Rows forced constant and extra zero cells: the shape of non-reflexive maxima.
GRel zero_pair_candidate(std::size_t n, std::mt19937_64& rng) {
  GRel d = random_table(n, rng, rng() % 2 == 0);
  if (rng() % 2) {
    std::size_t a = rng() % n;
    ExtReal c = 1;
    for (std::size_t j = 0; j < n; ++j) d(a, j) = c;
  }
  std::size_t zeros = rng() % (n + 1);
  for (std::size_t k = 0; k < zeros; ++k) d(rng() % n, rng() % n) = ExtReal();
  return triangle_closure(d);
}

bool antisymmetric_zero(const GRel& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j).is_zero() && d(j, i).is_zero()) return false;
  return true;
}

void postcondition(bool ok, GenKind kind) {
  if (!ok) throw std::logic_error(std::string("generator postcondition failed: ") + to_string(kind));
}

Report run_once(const CheckInfo& check, const Instance& inst) {
  Report r = check.run(inst);
  r.name = check.id;
  return r;
}

std::string instance_text(const Instance& inst) {
  std::ostringstream os;
  os << format_table(inst.d);
  if (inst.e) os << "e:\n" << format_table(*inst.e);
  if (inst.f) os << "f:\n" << format_table(*inst.f);
  if (inst.subset) os << "Y = " << format_subset(*inst.subset, inst.d.source()) << '\n';
  return os.str();
}

Subset drop_bit(Subset s, std::size_t x) {
  Subset out;
  for (std::size_t i : s.elements())
    if (i != x) out.insert(i < x ? i : i - 1);
  return out;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> r = build_registry();
  return r;
}

const CheckInfo& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownCheck("unknown check id: " + id);
}

Report run_report(const CheckInfo& check, const Instance& inst) {
  require_square(inst.d, check.id.c_str());
  if ((check.needs & kNeedsSubset) && !inst.subset) {
    const std::size_t n = inst.d.rows();
    require_powerset(n);
    Sweep sw(check.id);
    for (std::uint64_t m = 0; m < powerset_size(n); ++m) {
      Instance one = inst;
      one.subset = Subset{m};
      Report sub = Report::not_applicable(check.id, "empty subset");
      try {
        sub = run_once(check, one);
      } catch (const std::invalid_argument&) {
        if (m != 0) throw;  // only an empty Y may be rejected
      }
      sw.add(std::move(sub), "Y=" + format_subset(Subset{m}, inst.d.source()));
    }
    return sw.finish("subsets");
  }
  if (check.needs & kNeedsProfile) {
    std::vector<NetProfile> ps = inst.profiles;
    if (ps.empty()) ps = canonical_profiles(inst.d.rows());
    if (ps.size() == 1) {
      Instance one = inst;
      one.profiles = ps;
      return run_once(check, one);
    }
    Sweep sw(check.id);
    for (const auto& p : ps) {
      Instance one = inst;
      one.profiles = {p};
      sw.add(run_once(check, one), "net " + format_profile(p, inst.d.source()));
    }
    return sw.finish("profiles");
  }
  return run_once(check, inst);
}

Verdict run_check(const std::string& id, const Instance& inst) {
  const CheckInfo& check = find_check(id);
  Verdict v;
  v.check = check.id;
  v.statement = check.statement;
  v.report = run_report(check, inst);
  v.status = v.report.status;
  v.witness = v.report.witness;
  v.digest = instance_digest(inst.d);
  v.tested = 1;
  v.applicable = v.status == Status::not_applicable ? 0 : 1;
  if (v.status == Status::counterexample) v.instance = inst;
  return v;
}

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::hemimetric: return "hemimetric";
    case GenKind::distance: return "distance";
    case GenKind::partial_order: return "partial-order";
    case GenKind::strict_order: return "strict-order";
    case GenKind::predomain: return "predomain";
    case GenKind::max_continuous: return "max-continuous";
  }
  return "?";
}

std::vector<GenKind> all_gen_kinds() {
  return {GenKind::hemimetric,   GenKind::distance,  GenKind::partial_order,
          GenKind::strict_order, GenKind::predomain, GenKind::max_continuous};
}

GenKind parse_gen_kind(const std::string& text) {
  for (GenKind k : all_gen_kinds())
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown instance kind: " + text);
}

GRel generate(GenKind kind, std::size_t size, std::uint64_t seed) {
  if (size == 0) throw std::invalid_argument("generate: size must be positive");
  require_powerset(size);
  std::mt19937_64 rng(mix(seed ^ mix(size * 131 + static_cast<std::uint64_t>(kind))));
  constexpr int kBudget = 20000;
  switch (kind) {
    case GenKind::hemimetric: {
      GRel d = triangle_closure(random_table(size, rng, true));
      postcondition(is_hemimetric(d), kind);
      return d;
    }
    case GenKind::distance: {
      GRel d = triangle_closure(random_table(size, rng, rng() % 4 == 0));
      postcondition(is_distance(d), kind);
      return d;
    }
    case GenKind::partial_order: {
      GRel d = random_order(size, rng, false);
      postcondition(is_hemimetric(d) && antisymmetric_zero(d), kind);
      return d;
    }
    case GenKind::strict_order: {
      GRel d = random_order(size, rng, true);
      bool irreflexive = true;
      for (std::size_t i = 0; i < size; ++i) irreflexive = irreflexive && d(i, i).is_infinite();
      postcondition(is_distance(d) && irreflexive, kind);
      return d;
    }
    case GenKind::predomain:
      for (int t = 0; t < kBudget; ++t) {
        GRel d = t % 2 ? zero_pair_candidate(size, rng) : triangle_closure(random_table(size, rng, true));
        if (check_domain(d, DomainKind::max).predomain) return d;
      }
      break;
    case GenKind::max_continuous:
      for (int t = 0; t < kBudget; ++t) {
        GRel d = zero_pair_candidate(size, rng);
        if (is_max_continuous(d)) return d;
      }
      break;
  }
  throw GenerationError(std::string("rejection budget exhausted for ") + to_string(kind) + " of size " +
                        std::to_string(size));
}

Instance sweep_instance(const CheckInfo& check, const SearchSpec& spec, std::size_t i) {
  const GenKind kind = spec.kinds[i % spec.kinds.size()];
  const std::size_t size = spec.sizes[(i / spec.kinds.size()) % spec.sizes.size()];
  const std::uint64_t s = mix(spec.seed * 1000003 + i);
  Instance inst;
  inst.seed = s;
  inst.d = generate(kind, size, s);
  if (check.needs & kNeedsSecond) inst.e = generate(kind, size, mix(s + 1));
  if (check.needs & kNeedsThird) inst.f = generate(kind, size, mix(s + 2));
  return inst;
}

Instance delete_element(const Instance& inst, std::size_t x) {
  const std::size_t n = inst.d.rows();
  Subset keep = Subset::full(n);
  keep.erase(x);
  Instance out = inst;
  out.d = submatrix(inst.d, keep, keep);
  if (inst.e) out.e = submatrix(*inst.e, keep, keep);
  if (inst.f) out.f = submatrix(*inst.f, keep, keep);
  if (inst.subset) out.subset = drop_bit(*inst.subset, x);
  out.profiles.clear();
  auto shift = [&](const std::vector<std::size_t>& seq) {
    std::vector<std::size_t> r;
    for (std::size_t e : seq)
      if (e != x) r.push_back(e < x ? e : e - 1);
    return r;
  };
  for (const auto& p : inst.profiles) {
    NetProfile q{shift(p.prefix), shift(p.cycle)};
    if (!q.cycle.empty()) out.profiles.push_back(std::move(q));
  }
  return out;
}

Verdict search_counterexample(const CheckInfo& check, const SearchSpec& spec) {
  Verdict v;
  v.check = check.id;
  v.statement = check.statement;
  if (spec.budget == 0) {
    v.untested = true;
    v.witness = "UNTESTED: budget 0";
    v.report = Report(check.id);
    v.report.note("UNTESTED: no instances run");
    return v;
  }
  if (spec.kinds.empty() || spec.sizes.empty()) throw std::invalid_argument("search needs kinds and sizes");

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::size_t kBatch = 64;
  std::optional<std::size_t> first_fail;
  std::optional<Instance> fail_inst;
  for (std::size_t base = 0; base < spec.budget && !first_fail; base += kBatch) {
    const std::size_t end = std::min(spec.budget, base + kBatch);
    std::vector<Status> status(end - base, Status::holds);
    std::vector<std::string> errors(end - base);
    std::atomic<std::size_t> next{base};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < end;) {
        try {
          status[i - base] = run_report(check, sweep_instance(check, spec, i)).status;
        } catch (const std::exception& ex) {
          errors[i - base] = ex.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = base; i < end; ++i) {
      if (!errors[i - base].empty()) throw std::runtime_error("instance " + std::to_string(i) + ": " + errors[i - base]);
      ++v.tested;
      if (status[i - base] != Status::not_applicable) ++v.applicable;
      if (status[i - base] == Status::counterexample) {
        first_fail = i;
        break;
      }
    }
  }
  if (!first_fail) {
    v.report = Report(check.id);
    v.report.note("instances: " + std::to_string(v.tested) + ", applicable: " + std::to_string(v.applicable));
    if (v.applicable == 0) {
      v.status = Status::not_applicable;
      v.witness = "hypothesis failed on every generated instance";
    }
    return v;
  }

  Instance inst = sweep_instance(check, spec, *first_fail);
  for (bool shrunk = true; shrunk && inst.d.rows() > 1;) {
    shrunk = false;
    for (std::size_t x = 0; x < inst.d.rows() && inst.d.rows() > 1; ++x) {
      Instance smaller = delete_element(inst, x);
      if (run_report(check, smaller).failed()) {
        inst = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  v.report = run_report(check, inst);
  v.reverified = v.report.failed();
  v.minimized = true;
  v.digest = instance_digest(inst.d);
  v.status = Status::counterexample;
  v.witness = v.report.witness;
  v.instance = inst;
  return v;
}

Verdict search_counterexample(const std::string& id, const SearchSpec& spec) {
  return search_counterexample(find_check(id), spec);
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream os;
  os << v.check << ": " << (v.untested ? "UNTESTED" : to_string(v.status));
  if (!v.witness.empty()) os << " (" << v.witness << ")";
  os << "\n  statement: " << v.statement << '\n';
  if (v.tested > 1) os << "  instances: " << v.tested << ", applicable: " << v.applicable << '\n';
  if (v.instance) {
    os << (v.minimized ? "  minimized instance" : "  instance") << (v.reverified ? " (re-verified)" : "") << ":\n";
    std::istringstream in(instance_text(*v.instance));
    for (std::string line; std::getline(in, line);) os << "    " << line << '\n';
  }
  for (const auto& l : v.report.lines) os << "  " << l << '\n';
  return os.str();
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["check"] = v.check;
  j["instance-digest"] = nullptr;
  if (!v.digest.empty()) j["instance-digest"] = v.digest;
  j["status"] = v.untested ? "untested" : to_string(v.status);
  j["witness"] = v.witness;
  j["statement"] = v.statement;
  j["tested"] = v.tested;
  j["applicable"] = v.applicable;
  if (v.instance) {
    j["instance"] = relation_to_json(v.instance->d);
    if (v.instance->e) j["e"] = relation_to_json(*v.instance->e);
    if (v.instance->f) j["f"] = relation_to_json(*v.instance->f);
    j["reverified"] = v.reverified;
  }
  j["lines"] = v.report.lines;
  return j;
}

}  // namespace qdt
