#include <doctest.h>

#include <set>
#include <sstream>

#include "qdt/cli.hpp"
#include "qdt/gallery.hpp"
#include "qdt/json_io.hpp"

using namespace qdt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gallery, reflexivize, classify pipe") {
  auto g = run({"gallery", "G3"});
  REQUIRE(g.code == kExitOk);
  auto r = run({"reflexivize", "--upper"}, g.out);
  REQUIRE(r.code == kExitOk);
  CHECK(parse_relation(r.out) == grid_truncated(3));
  auto c = run({"classify"}, r.out);
  CHECK(c.code == kExitOk);
  CHECK(first_line(c.out) == "quasimetric");
  CHECK(first_line(run({"classify"}, g.out).out) == "distance");
}

TEST_CASE("exit codes") {
  const std::string g3 = run({"gallery", "G3"}).out, q3 = run({"gallery", "Q3"}).out;
  CHECK(run({"check", "rdomaineqs"}, q3).code == kExitOk);
  CHECK(run({"check", "domain"}, q3).code == kExitOk);
  CHECK(run({"check", "domain"}, g3).code == kExitCounterexample);
  CHECK(run({"check", "hemiprop"}, g3).code == kExitOk);
  CHECK(run({"check", "symCauchy"}, g3).code == kExitOk);

  const std::string negative = R"({"carrier":["a","b"],"matrix":[["0","-1"],["0","0"]]})";
  const std::string ragged = R"({"carrier":["a","b"],"matrix":[["0","1"]]})";
  std::vector<std::pair<std::vector<std::string>, std::string>> bad = {
      {{"classify"}, negative},
      {{"classify"}, ragged},
      {{"classify"}, "{not json"},
      {{"max", "--subset", "zz"}, g3},
      {{"gallery", "NOPE"}, ""},
      {{"check", "nonsense"}, g3},
      {{}, g3},
      {{"frobnicate"}, g3},
      {{"fb", "--from", "0@1"}, g3},
      {{"fb", "--from", "0@-1", "--to", "1@0"}, g3},
      {{"complete"}, g3},  // not max-continuous
  };
  std::set<std::string> messages;
  for (const auto& [args, input] : bad) {
    auto r = run(args, input);
    INFO(r.err);
    CHECK(r.code == kExitInputError);
    CHECK_FALSE(r.err.empty());
    messages.insert(first_line(r.err));
  }
  CHECK(messages.size() >= 8);
}

TEST_CASE("relation subcommands") {
  const std::string g3 = run({"gallery", "G3"}).out, q3 = run({"gallery", "Q3"}).out;
  auto comp = run({"compose"}, q3);
  CHECK(parse_relation(comp.out) == grid_truncated(3));
  auto kan = run({"kan", "--right"}, q3);
  CHECK(parse_relation(kan.out) == grid_truncated(3));
  auto low = run({"reflexivize", "--lower"}, g3);
  CHECK(parse_relation(low.out) == grid_truncated(3));
  auto mx = run({"max", "--subset", "1/2,1"}, g3);
  CHECK(mx.code == kExitOk);
  CHECK(mx.out.find("{1}") != std::string::npos);
  auto fb = run({"fb", "--from", "1@1/4", "--to", "1/2@0"}, q3);
  CHECK(fb.code == kExitOk);
  CHECK(fb.out.find("1/4") != std::string::npos);
  CHECK(run({"hausdorff", "--upper"}, q3).code == kExitOk);
  CHECK(run({"wbd", "--mode", "sup"}, q3).code == kExitOk);
  CHECK(run({"topology"}, q3).code == kExitOk);
  CHECK(run({"directed"}, g3).code == kExitOk);
  CHECK(run({"ideal"}, g3).code == kExitOk);
  CHECK(run({"balls"}, q3).code == kExitOk);
  CHECK(run({"complete", "--quotient"}, q3).code == kExitOk);
  CHECK(run({"check", "--list"}).out.find("hausfunc") != std::string::npos);
  CHECK(run({"gallery", "--list"}).out.find("X3NR") != std::string::npos);
}

TEST_CASE("sweeps and output stability") {
  auto s = run({"sweep", "--check", "hemiprop,xdy", "--sizes", "2,3", "--budget", "10", "--format", "json"});
  CHECK(s.code == kExitOk);
  auto again = run({"sweep", "--check", "hemiprop,xdy", "--sizes", "2,3", "--budget", "10", "--format", "json"});
  CHECK(s.out == again.out);
  auto found = run({"sweep", "--check", "domain", "--kinds", "distance", "--sizes", "3", "--budget", "20"});
  CHECK(found.code == kExitCounterexample);
  auto zero = run({"sweep", "--check", "hemiprop", "--budget", "0"});
  CHECK(zero.out.find("UNTESTED") != std::string::npos);
}
