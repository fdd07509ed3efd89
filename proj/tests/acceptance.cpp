// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qdt/balls.hpp"
#include "qdt/gallery.hpp"
#include "qdt/hausdorff.hpp"
#include "qdt/metric.hpp"
#include "qdt/nets.hpp"
#include "qdt/oracle.hpp"
#include "qdt/order.hpp"
#include "qdt/wbd.hpp"
#include "support.hpp"

#ifndef QDT_BINARY
#define QDT_BINARY "qdt"
#endif

using namespace qdt;
using namespace qdt::test;

namespace {

// Collects the first failure; later ones are counted.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  void report(const Report& r, const std::string& where) {
    require(!r.failed(), where + ": " + r.witness);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<void(Tally&)> body;
};

std::string ratio_text(std::size_t i, std::size_t n) {
  std::ostringstream os;
  os << i << "/" << n;
  return os.str();
}

// Exit status and stdout of a shell command.
std::pair<int, std::string> shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void category_laws(Tally& t) {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 5;
    GRel d = random_rel(rng, n), e = random_rel(rng, n), f = random_rel(rng, n);
    t.report(check_category_laws(d, e, f), "triple " + std::to_string(i));
  }
}

void hemiprop(Tally& t) {
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 5;
    GRel d = (i % 2) ? random_distance(rng, n) : random_rel(rng, n);
    t.require(is_hemimetric(reflexivize_upper(d)) && is_hemimetric(reflexivize_lower(d)),
              "reflexivizations not hemimetric, table " + std::to_string(i));
    t.require(compose(reflexivize_upper(d), d) == d && compose(d, reflexivize_lower(d)) == d,
              "factorization, table " + std::to_string(i));
    t.report(check_hemiprop(d), "table " + std::to_string(i));
  }
}

void worked_example(Tally& t) {
  for (std::size_t n : {3u, 5u, 11u}) {
    const GRel g = grid_product(n);
    // (x - y)+ from the grid coordinates
    GRel want = GRel::tabulate(g.source(), g.source(), [&](std::size_t i, std::size_t j) {
      const auto den = static_cast<std::int64_t>(n - 1);
      return i > j ? ExtReal::ratio(static_cast<std::int64_t>(i - j), den) : ExtReal();
    });
    t.require(reflexivize_upper(g) == want, "upper reflexivization, n=" + std::to_string(n));
    t.require(reflexivize_lower(g) == want, "lower reflexivization, n=" + std::to_string(n));
  }
}

void directed_layer(Tally& t) {
  std::mt19937_64 rng(1004);
  for (int i = 0; i < 500; ++i) {
    GRel d = random_distance(rng, 1 + rng() % 4, i % 3 == 0);
    t.report(check_order_sweep(d), "distance " + std::to_string(i));
  }
}

void dualities(Tally& t) {
  std::mt19937_64 rng(1005);
  const auto kinds = all_gen_kinds();
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 4;
    GRel d = (i % 2) ? random_distance(rng, n) : generate(kinds[(i / 2) % kinds.size()], n, 5000 + i);
    const std::string at = "instance " + std::to_string(i);
    const bool mx = bool(is_max_complete(d)), sp = bool(is_sup_complete(d));
    t.require(bool(is_limit_complete(d, kBallHole)) == mx, at + ": ball-hole complete vs max-complete");
    t.require(bool(is_limit_complete(d, kHoleHole)) == sp, at + ": hole-hole complete vs sup-complete");
    const bool cont = bool(is_max_continuous(d));
    t.require(bool(max_continuity_criterion(d)) == cont, at + ": max-continuity criterion");
    t.require(bool(is_ball_hole_continuous(d)) == bool(ball_hole_continuity_criterion(d)),
              at + ": ball-hole continuity criterion");
    t.report(run_check("reductions", Instance{d}).report, at);
    const Report ir = interpolation_report(d);
    t.require(contradiction_count(ir) == 0, at + ": CONTRADICTION in interpolation report");
  }
}

void way_below(Tally& t) {
  for (int i = 0; i < 100; ++i) {
    GRel p = generate(GenKind::partial_order, 1 + i % 5, 6000 + i);
    t.require(way_below_relational(p, Bound::sup) == p, "partial order " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    GRel d = generate(GenKind::hemimetric, 1 + i % 4, 6500 + i);
    t.report(check_dual_characterization(d, DomainKind::max), "hemimetric " + std::to_string(i));
  }
}

void hausdorff(Tally& t) {
  std::mt19937_64 rng(1007);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    GRel d = random_distance(rng, n), e = random_distance(rng, n);
    t.report(check_hausfunc(d, e), "pair " + std::to_string(i));
  }
  std::size_t predomains = 0;
  for (int i = 0; i < 50; ++i) {
    GRel d = generate(GenKind::max_continuous, 1 + i % 4, 7000 + i);
    const std::string at = "max-continuous " + std::to_string(i);
    Completion c = complete_predomain(d);
    t.report(c.report, at);
    t.report(check_pdcomp(d), at);
    const bool pre = check_domain(d, DomainKind::max).predomain;
    for (std::size_t x = 0; x < d.rows(); ++x)
      for (std::size_t y = 0; y < d.rows(); ++y) {
        const ExtReal v = c.rel.values(c.embedding[x], c.embedding[y]);
        t.require(v <= d(x, y), at + ": embedding expands a distance");
        if (pre) t.require(v == d(x, y), at + ": embedding of a predomain is not an isometry");
      }
    predomains += pre;
  }
  for (int i = 0; i < 20; ++i) {
    GRel d = generate(GenKind::predomain, 1 + i % 4, 7500 + i);
    Completion c = complete_predomain(d);
    for (std::size_t x = 0; x < d.rows(); ++x)
      for (std::size_t y = 0; y < d.rows(); ++y)
        t.require(c.rel.values(c.embedding[x], c.embedding[y]) == d(x, y), "predomain " + std::to_string(i));
  }
  t.require(predomains > 0, "no predomain among the max-continuous instances");
}

void formal_balls(Tally& t) {
  std::mt19937_64 rng(1008);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 3;
    GRel d = random_distance(rng, n), e = random_distance(rng, n);
    const std::string at = "pair " + std::to_string(i);
    t.report(check_xdy(d), at);
    t.report(check_bfunc(d, e), at);
    t.report(check_bunder_binter(d, e), at);
    const auto radii = table_grid(d).radii;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        t.require(recover_distance(d, x, y, radii) == d(x, y), at + ": distance not recovered");
  }
  auto consistency = [&](const GRel& d, const std::string& at) {
    t.report(check_kw(d), at + " kw");
    t.report(check_rv(d), at + " rv");
    t.report(check_esmyth(d), at + " esmyth");
  };
  for (const auto& name : gallery_names()) consistency(gallery(name), name);
  for (int i = 0; i < 100; ++i) consistency(generate(GenKind::hemimetric, 1 + i % 4, 8000 + i), "hemimetric " + std::to_string(i));
}

void gallery_facts(Tally& t) {
  const GRel g3 = grid_product(3);
  t.require(is_distance(g3), "G3 is a distance");
  t.require(bool(is_max_complete(g3)), "G3 is max-complete");
  t.require(!is_max_continuous(g3), "G3 is not max-continuous");

  const GRel nr = nonreflexive_max();
  t.require(bool(is_max_continuous(nr)), "X3NR is max-continuous");
  const DomainVerdict v = check_domain(nr, DomainKind::max);
  t.require(!v.predomain, "X3NR is not a predomain");
  t.require(v.cell && *v.cell == std::make_pair(std::size_t{0}, std::size_t{1}), "X3NR witness cell (a,b)");
  t.require(reflexivize_upper(nr)(0, 1) == ExtReal(1) && reflexivize_lower(nr)(0, 1) == ExtReal(),
            "X3NR upper 1 > lower 0 at (a,b)");

  t.require(check_domain(grid_truncated(3), DomainKind::max).domain, "Q3 is a max-domain");
}

void cli(Tally& t) {
  const std::string q = std::string("'") + QDT_BINARY + "'";
  auto pipe = shell(q + " gallery G3 | " + q + " reflexivize --upper | " + q + " classify");
  t.require(pipe.first == 0, "pipe exit status");
  t.require(pipe.second.rfind("quasimetric\n", 0) == 0, "pipe reports " + pipe.second.substr(0, pipe.second.find('\n')));

  struct Case {
    std::string cmd;
    int code;
  };
  const std::vector<Case> matrix = {
      {q + " gallery Q3 | " + q + " check rdomaineqs", 0},
      {q + " gallery G3 | " + q + " check domain", 1},
      {q + " gallery Q3 | " + q + " check domain", 0},
      {"echo '{\"carrier\":[\"a\"],\"matrix\":[[\"-1\"]]}' | " + q + " classify", 2},
      {"echo '{\"carrier\":[\"a\",\"b\"],\"matrix\":[[\"0\"]]}' | " + q + " classify", 2},
      {"echo '{oops' | " + q + " classify", 2},
      {q + " gallery G3 | " + q + " max --subset zz", 2},
      {q + " gallery NOPE", 2},
      {q + " gallery G3 | " + q + " check nonsense", 2},
      {q + " sweep --check domain --kinds distance --sizes 3 --budget 20", 1},
  };
  for (const auto& c : matrix) {
    auto r = shell(c.cmd + " >/dev/null 2>&1");
    t.require(r.first == c.code, c.cmd + " exited " + std::to_string(r.first));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "category laws", 5, category_laws},
      {2, "reflexivization properties", 5, hemiprop},
      {3, "product grid reflexivizations", 1, worked_example},
      {4, "directed, sup and max layer", 30, directed_layer},
      {5, "completeness and continuity reductions", 60, dualities},
      {6, "way-below distances", 60, way_below},
      {7, "Hausdorff distances and completion", 120, hausdorff},
      {8, "formal balls", 120, formal_balls},
      {9, "gallery assertions", 60, gallery_facts},
      {10, "command line", 60, cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && t.failures == 0 && secs < c.limit_s;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << " (" << c.title << "): " << (pass ? "PASS" : "FAIL") << "  " << secs
         << "s / " << c.limit_s << "s, " << t.cases << " cases";
    if (!error.empty()) line << ", exception: " << error;
    if (t.failures) line << ", " << ratio_text(t.failures, t.cases) << " failed, first: " << t.first;
    if (secs >= c.limit_s) line << ", over time";
    std::cout << line.str() << std::endl;
    failed += !pass;
  }
  return failed == 0 ? 0 : 1;
}
