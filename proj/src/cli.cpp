#include "qdt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qdt/balls.hpp"
#include "qdt/gallery.hpp"
#include "qdt/hausdorff.hpp"
#include "qdt/json_io.hpp"
#include "qdt/metric.hpp"
#include "qdt/oracle.hpp"
#include "qdt/order.hpp"
#include "qdt/wbd.hpp"

namespace qdt {
namespace {

struct Options {
  std::string input = "-";
  std::string with;
  std::string third;
  std::string format;  // empty: json for relations, text for reports
  std::uint64_t seed = 0;
  std::size_t size_cap = 0;
  std::string family = "powerset";
  std::size_t samples = 32;
  std::string grid;
  std::optional<std::string> subset;
  std::vector<std::string> nets;

  bool upper = false, lower = false;
  bool right = false, left = false;
  std::string mode = "sup";
  bool topological = false;
  std::string kind = "hole-hole";
  std::vector<std::string> kinds;
  std::string from, to;
  std::string name;
  bool list = false;
  bool quotient = false;

  std::vector<std::string> checks;
  std::vector<std::string> gen_kinds;
  std::vector<std::size_t> sizes;
  std::size_t budget = 50;
  unsigned threads = 0;
};

class Io {
 public:
  Io(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  std::string slurp(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  GRel relation(const std::string& path) { return parse_relation(slurp(path)); }
  GRel primary() { return relation(o_.input); }
  std::optional<GRel> optional_relation(const std::string& path, const GRel& d) {
    if (path.empty()) return std::nullopt;
    GRel e = relation(path);
    if (e.source() != d.source()) throw InputError("carrier mismatch between the input relations");
    return e;
  }

  bool json(bool relation_output) const {
    if (o_.format.empty()) return relation_output;
    return o_.format == "json";
  }
  void emit(const GRel& d) {
    if (json(true))
      out_ << relation_to_json(d).dump(2) << '\n';
    else
      out_ << format_table(d);
  }
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  std::ostream& text() { return out_; }
  std::ostream& diag() { return err_; }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool stdin_used_ = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(' '));
    cur.erase(cur.find_last_not_of(' ') + 1);
    out.push_back(cur);
  }
  return out;
}

Subset subset_arg(const std::string& text, const Carrier& c) {
  try {
    return parse_subset(split(text, ','), c);
  } catch (const UnknownLabel& e) {
    throw InputError(std::string("unknown label: ") + e.what());
  }
}

// "a,b:c,d" is prefix a b then cycle c d; without ':' the whole list is the cycle.
NetProfile net_arg(const std::string& text, const Carrier& c) {
  Json j;
  auto colon = text.find(':');
  j["prefix"] = colon == std::string::npos ? std::vector<std::string>{} : split(text.substr(0, colon), ',');
  j["cycle"] = split(colon == std::string::npos ? text : text.substr(colon + 1), ',');
  return profile_from_json(j, c);
}

std::vector<ExtReal> grid_arg(const std::string& text) {
  Json j;
  j["radii"] = split(text, ',');
  return radii_from_json(j);
}

FormalBall ball_arg(const std::string& text, const Carrier& c) {
  auto at = text.find('@');
  if (at == std::string::npos) throw InputError("formal ball must look like x@r: " + text);
  FormalBall b;
  try {
    b.element = c.index_of(text.substr(0, at));
    b.radius = ExtReal::parse(text.substr(at + 1));
  } catch (const UnknownLabel& e) {
    throw InputError(std::string("unknown label: ") + e.what());
  } catch (const ParseError& e) {
    throw InputError(std::string("bad radius: ") + e.what());
  }
  if (b.radius.is_infinite()) throw InputError("formal ball radius must be finite");
  return b;
}

std::vector<Subset> family_members(const Options& o, Io& io, const GRel& d) {
  const std::size_t n = d.rows();
  if (o.family == "powerset") {
    require_powerset(n);
    std::vector<Subset> all;
    for (std::uint64_t m = 0; m < powerset_size(n); ++m) all.push_back(Subset{m});
    return all;
  }
  if (o.family == "sampled") {
    if (n >= kMaxSubsetCarrier) throw InputError("carrier too large to sample subsets");
    std::mt19937_64 rng(o.seed);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::set<std::uint64_t> picked;
    if (total <= o.samples) {
      for (std::uint64_t m = 0; m < total; ++m) picked.insert(m);
    } else {
      while (picked.size() < o.samples) picked.insert(rng() & (total - 1));
      io.diag() << "note: sampled family, " << picked.size() << " of " << total << " subsets (non-exhaustive)\n";
    }
    std::vector<Subset> out;
    for (auto m : picked) out.push_back(Subset{m});
    return out;
  }
  throw InputError("--family must be powerset or sampled");
}

Json subset_json(Subset s, const Carrier& c) {
  Json a = Json::array();
  for (auto i : s.elements()) a.push_back(c.label(i));
  return a;
}

int cmd_classify(const Options& o, Io& io) {
  (void)o;
  const GRel d = io.primary();
  const Classification c = classify(d);
  if (io.json(false)) {
    Json j;
    j["class"] = strongest_name(c);
    j["distance"] = c.is_distance;
    j["reflexive"] = c.is_reflexive;
    j["hemimetric"] = c.is_hemimetric;
    j["quasimetric"] = c.is_quasimetric;
    j["metric"] = c.is_metric;
    j["symmetric"] = c.is_symmetric;
    io.emit(j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    io.text() << strongest_name(c) << '\n'
              << "  distance: " << yn(c.is_distance) << "\n  reflexive: " << yn(c.is_reflexive)
              << "\n  hemimetric: " << yn(c.is_hemimetric) << "\n  quasimetric: " << yn(c.is_quasimetric)
              << "\n  metric: " << yn(c.is_metric) << "\n  symmetric: " << yn(c.is_symmetric) << '\n';
  }
  return kExitOk;
}

int cmd_reflexivize(const Options& o, Io& io) {
  if (o.upper == o.lower) throw InputError("reflexivize needs exactly one of --upper or --lower");
  const GRel d = io.primary();
  io.emit(o.upper ? reflexivize_upper(d) : reflexivize_lower(d));
  return kExitOk;
}

int cmd_compose(const Options& o, Io& io) {
  const GRel d = io.primary();
  const GRel e = io.optional_relation(o.with, d).value_or(d);
  io.emit(compose(d, e));
  return kExitOk;
}

int cmd_kan(const Options& o, Io& io) {
  if (o.right == o.left) throw InputError("kan needs exactly one of --right or --left");
  const GRel d = io.primary();
  const GRel e = io.optional_relation(o.with, d).value_or(d);
  io.emit(o.right ? kan_right(d, e) : kan_left(d, e));
  return kExitOk;
}

int cmd_balls(const Options& o, Io& io) {
  const GRel d = io.primary();
  const BallGrid g = o.grid.empty() ? table_grid(d) : make_grid(d.source(), grid_arg(o.grid));
  io.emit(ball_relation(d, g));
  return kExitOk;
}

Subbasic subbasic_arg(const std::string& s) {
  if (s == "upper-ball") return Subbasic::upper_ball;
  if (s == "lower-ball") return Subbasic::lower_ball;
  if (s == "upper-hole") return Subbasic::upper_hole;
  if (s == "lower-hole") return Subbasic::lower_hole;
  throw InputError("unknown subbasis kind: " + s);
}

int cmd_topology(const Options& o, Io& io) {
  const GRel d = io.primary();
  std::vector<Subbasic> kinds;
  for (const auto& k : o.kinds) kinds.push_back(subbasic_arg(k));
  if (kinds.empty()) kinds = {Subbasic::upper_ball, Subbasic::lower_ball};
  const auto opens = generated_topology(d, kinds);
  if (io.json(false)) {
    Json j = Json::array();
    for (auto s : opens) j.push_back(subset_json(s, d.source()));
    io.emit(j);
  } else {
    for (auto s : opens) io.text() << format_subset(s, d.source()) << '\n';
  }
  return kExitOk;
}

// Lists members of the family satisfying pred, or answers for --subset.
template <class Pred>
int subset_listing(const Options& o, Io& io, const GRel& d, const char* what, Pred&& pred) {
  if (o.subset) {
    const Subset y = subset_arg(*o.subset, d.source());
    const bool ok = pred(y);
    if (io.json(false)) {
      Json j;
      j["subset"] = subset_json(y, d.source());
      j[what] = ok;
      io.emit(j);
    } else {
      io.text() << format_subset(y, d.source()) << ": " << (ok ? "" : "not ") << what << '\n';
    }
    return kExitOk;
  }
  Json j = Json::array();
  for (Subset y : family_members(o, io, d)) {
    if (!pred(y)) continue;
    if (io.json(false))
      j.push_back(subset_json(y, d.source()));
    else
      io.text() << format_subset(y, d.source()) << '\n';
  }
  if (io.json(false)) io.emit(j);
  return kExitOk;
}

int cmd_directed(const Options& o, Io& io) {
  const GRel d = io.primary();
  return subset_listing(o, io, d, "directed", [&](Subset y) { return is_directed(y, d); });
}

int cmd_ideal(const Options& o, Io& io) {
  const GRel d = io.primary();
  if (o.subset) {
    const Subset y = subset_arg(*o.subset, d.source());
    const Subset closure = ideal_closure(y, d);
    if (io.json(false)) {
      Json j;
      j["subset"] = subset_json(y, d.source());
      j["ideal"] = subset_json(closure, d.source());
      io.emit(j);
    } else {
      io.text() << format_subset(closure, d.source()) << '\n';
    }
    return kExitOk;
  }
  return subset_listing(o, io, d, "ideal", [&](Subset y) { return is_ideal(y, d); });
}

int cmd_bound(const Options& o, Io& io, Bound b) {
  const GRel d = io.primary();
  std::vector<Subset> ys;
  if (o.subset)
    ys.push_back(subset_arg(*o.subset, d.source()));
  else
    ys = family_members(o, io, d);
  Json j = Json::array();
  for (Subset y : ys) {
    const Subset s = bound_set(y, d, b);
    if (io.json(false)) {
      Json row;
      row["subset"] = subset_json(y, d.source());
      row[to_string(b)] = subset_json(s, d.source());
      j.push_back(row);
    } else {
      io.text() << format_subset(y, d.source()) << " -> " << format_subset(s, d.source()) << '\n';
    }
  }
  if (io.json(false)) io.emit(o.subset ? j[0] : j);
  return kExitOk;
}

int cmd_complete(const Options& o, Io& io) {
  const GRel d = io.primary();
  const Completion c = complete_predomain(d, o.quotient);
  if (io.json(true)) {
    Json j = relation_to_json(c.rel.values);
    Json emb;
    for (std::size_t x = 0; x < d.rows(); ++x) emb[d.source().label(x)] = c.rel.values.source().label(c.embedding[x]);
    j["embedding"] = emb;
    io.emit(j);
  } else {
    io.text() << format_table(c.rel.values);
    for (std::size_t x = 0; x < d.rows(); ++x)
      io.text() << d.source().label(x) << " -> " << c.rel.values.source().label(c.embedding[x]) << '\n';
  }
  return kExitOk;
}

int cmd_wbd(const Options& o, Io& io) {
  const GRel d = io.primary();
  if (o.topological) {
    std::vector<NetProfile> ps;
    for (const auto& n : o.nets) ps.push_back(net_arg(n, d.source()));
    LimitKind k;
    try {
      k = parse_limit_kind(o.kind);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    io.emit(way_below_topological(d, ps, k));
  } else {
    if (o.mode != "sup" && o.mode != "max") throw InputError("--mode must be sup or max");
    io.emit(way_below_relational(d, o.mode == "sup" ? Bound::sup : Bound::max));
  }
  return kExitOk;
}

int cmd_hausdorff(const Options& o, Io& io) {
  if (o.upper == o.lower) throw InputError("hausdorff needs exactly one of --upper or --lower");
  const GRel d = io.primary();
  SubsetFamily fam{d.source(), family_members(o, io, d)};
  fam.normalize();
  const PowersetRel r = o.upper ? hausdorff_upper(d, fam) : hausdorff_lower(d, fam);
  io.emit(r.values);
  return kExitOk;
}

int cmd_fb(const Options& o, Io& io) {
  const GRel d = io.primary();
  const FormalBall a = ball_arg(o.from, d.source()), b = ball_arg(o.to, d.source());
  const ExtReal dist = fb_distance(d, a, b);
  const bool le = fb_leq(d, a, b), lt = fb_lt(d, a, b);
  if (io.json(false)) {
    Json j;
    j["from"] = format_ball(a, d.source());
    j["to"] = format_ball(b, d.source());
    j["distance"] = dist.to_string();
    j["leq"] = le;
    j["lt"] = lt;
    io.emit(j);
  } else {
    io.text() << "distance: " << dist << "\nleq: " << (le ? "yes" : "no") << "\nlt: " << (lt ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int emit_verdict(Io& io, const Verdict& v) {
  if (io.json(false))
    io.emit(verdict_to_json(v));
  else
    io.text() << format_verdict(v);
  return v.status == Status::counterexample ? kExitCounterexample : kExitOk;
}

int cmd_check(const Options& o, Io& io) {
  if (o.list) {
    for (const auto& c : registry())
      io.text() << c.id << ((c.needs & kProperty) ? " (instance property)" : "") << ": " << c.statement << '\n';
    return kExitOk;
  }
  if (o.name.empty()) throw InputError("check needs a check id (see check --list)");
  const CheckInfo& info = find_check(o.name);
  Instance inst;
  inst.d = io.primary();
  inst.e = io.optional_relation(o.with, inst.d);
  inst.f = io.optional_relation(o.third, inst.d);
  if (o.subset) inst.subset = subset_arg(*o.subset, inst.d.source());
  for (const auto& n : o.nets) inst.profiles.push_back(net_arg(n, inst.d.source()));
  if (!o.grid.empty()) inst.radii = grid_arg(o.grid);
  inst.seed = o.seed;
  return emit_verdict(io, run_check(info.id, inst));
}

int cmd_sweep(const Options& o, Io& io) {
  SearchSpec spec;
  spec.seed = o.seed;
  spec.budget = o.budget;
  spec.threads = o.threads;
  spec.kinds.clear();
  try {
    for (const auto& k : o.gen_kinds) spec.kinds.push_back(parse_gen_kind(k));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (spec.kinds.empty()) spec.kinds = all_gen_kinds();
  spec.sizes = o.sizes;
  if (spec.sizes.empty())
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, powerset_cap()); ++n) spec.sizes.push_back(n);
  std::vector<std::string> ids = o.checks;
  if (ids.empty())
    for (const auto& c : registry())
      if (!(c.needs & kProperty)) ids.push_back(c.id);
  for (const auto& id : ids) find_check(id);

  int code = kExitOk;
  Json all = Json::array();
  for (const auto& id : ids) {
    const Verdict v = search_counterexample(id, spec);
    if (v.status == Status::counterexample) code = kExitCounterexample;
    if (io.json(false)) {
      all.push_back(verdict_to_json(v));
    } else if (v.status == Status::counterexample) {
      io.text() << format_verdict(v);
    } else {
      io.text() << id << ": " << (v.untested ? "UNTESTED" : to_string(v.status)) << " (" << v.tested
                << " instances, " << v.applicable << " applicable)\n";
    }
  }
  if (io.json(false)) io.emit(all);
  return code;
}

int cmd_gallery(const Options& o, Io& io) {
  if (o.list || o.name.empty()) {
    for (const auto& n : gallery_names()) io.text() << n << '\n';
    return kExitOk;
  }
  io.emit(gallery(o.name));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact quantitative domain theory on finite carriers", "qdt");
  app.require_subcommand(1);
  app.add_option("-i,--input", o.input, "relation JSON file, - for stdin");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--size-cap", o.size_cap, "largest carrier for powerset enumeration");
  app.add_option("--family", o.family, "subset family: powerset or sampled");
  app.add_option("--samples", o.samples, "subsets drawn by --family sampled");
  app.add_option("--grid", o.grid, "radii for formal balls, comma separated");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.fallthrough();

  auto* classify_cmd = app.add_subcommand("classify", "classify a relation");
  auto* refl = app.add_subcommand("reflexivize", "upper or lower reflexivization");
  refl->add_flag("--upper", o.upper);
  refl->add_flag("--lower", o.lower);
  auto* comp = app.add_subcommand("compose", "min-plus composition d o e");
  comp->add_option("--with", o.with, "second relation (default: the input)");
  auto* kan = app.add_subcommand("kan", "Kan extension d/e (--right) or lift d\\e (--left)");
  kan->add_flag("--right", o.right);
  kan->add_flag("--left", o.left);
  kan->add_option("--with", o.with, "second relation (default: the input)");
  auto* balls = app.add_subcommand("balls", "formal-ball distance on a radius grid");
  auto* topo = app.add_subcommand("topology", "opens generated by balls and holes");
  topo->add_option("--kinds", o.kinds, "upper-ball, lower-ball, upper-hole, lower-hole")->delimiter(',');
  auto* directed = app.add_subcommand("directed", "directed subsets");
  directed->add_option("--subset", o.subset, "comma separated labels");
  auto* ideal = app.add_subcommand("ideal", "ideals, or the ideal generated by --subset");
  ideal->add_option("--subset", o.subset, "comma separated labels");
  auto* sup = app.add_subcommand("sup", "d-suprema");
  sup->add_option("--subset", o.subset, "comma separated labels");
  auto* max = app.add_subcommand("max", "d-maxima");
  max->add_option("--subset", o.subset, "comma separated labels");
  auto* complete = app.add_subcommand("complete", "predomain completion on directed subsets");
  complete->add_flag("--quotient", o.quotient, "identify equivalent directed subsets");
  auto* wbd = app.add_subcommand("wbd", "way-below distance");
  wbd->add_option("--mode", o.mode, "sup or max");
  wbd->add_flag("--topological", o.topological, "net-based version over canonical profiles");
  wbd->add_option("--kind", o.kind, "limit kind for --topological");
  wbd->add_option("--net", o.nets, "extra profile prefix:cycle");
  auto* haus = app.add_subcommand("hausdorff", "Hausdorff distances on subsets");
  haus->add_flag("--upper", o.upper, "inf over targets of sup over sources");
  haus->add_flag("--lower", o.lower, "sup over sources of inf over targets");
  auto* fb = app.add_subcommand("fb", "distance and order between two formal balls");
  fb->add_option("--from", o.from, "x@r")->required();
  fb->add_option("--to", o.to, "y@s")->required();
  auto* check = app.add_subcommand("check", "run one registered check");
  check->add_option("id", o.name, "check id");
  check->add_flag("--list", o.list, "list check ids");
  check->add_option("--with", o.with, "second relation");
  check->add_option("--third", o.third, "third relation");
  check->add_option("--subset", o.subset, "comma separated labels");
  check->add_option("--net", o.nets, "profile prefix:cycle");
  auto* sweep = app.add_subcommand("sweep", "randomized counterexample search");
  sweep->add_option("--check", o.checks, "check ids (default: all)")->delimiter(',');
  sweep->add_option("--kinds", o.gen_kinds, "instance kinds")->delimiter(',');
  sweep->add_option("--sizes", o.sizes, "carrier sizes")->delimiter(',');
  sweep->add_option("--budget", o.budget, "instances per check");
  sweep->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  auto* gal = app.add_subcommand("gallery", "print a gallery instance");
  gal->add_option("name", o.name, "Gn, Qn, CHAINn, STRICTn, X3NR or METRICn");
  gal->add_flag("--list", o.list, "list names");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qdt: " << e.what() << '\n';
    return kExitInputError;
  }

  Io io(o, in, out, err);
  try {
    if (o.size_cap) set_powerset_cap(o.size_cap);
    if (*classify_cmd) return cmd_classify(o, io);
    if (*refl) return cmd_reflexivize(o, io);
    if (*comp) return cmd_compose(o, io);
    if (*kan) return cmd_kan(o, io);
    if (*balls) return cmd_balls(o, io);
    if (*topo) return cmd_topology(o, io);
    if (*directed) return cmd_directed(o, io);
    if (*ideal) return cmd_ideal(o, io);
    if (*sup) return cmd_bound(o, io, Bound::sup);
    if (*max) return cmd_bound(o, io, Bound::max);
    if (*complete) return cmd_complete(o, io);
    if (*wbd) return cmd_wbd(o, io);
    if (*haus) return cmd_hausdorff(o, io);
    if (*fb) return cmd_fb(o, io);
    if (*check) return cmd_check(o, io);
    if (*sweep) return cmd_sweep(o, io);
    if (*gal) return cmd_gallery(o, io);
  } catch (const InputError& e) {
    err << "qdt: input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "qdt: precondition failed: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnknownCheck& e) {
    err << "qdt: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnknownGallery& e) {
    err << "qdt: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CarrierMismatch& e) {
    err << "qdt: carrier mismatch: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "qdt: invalid argument: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::length_error& e) {
    err << "qdt: too large: " << e.what() << '\n';
    return kExitInputError;
  } catch (const GenerationError& e) {
    err << "qdt: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qdt
