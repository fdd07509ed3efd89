#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdt/grel.hpp"
#include "qdt/profile.hpp"
#include "qdt/report.hpp"

namespace qdt {

struct UnknownCheck : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a check may consume. Missing pieces get defaults: e and f fall back to d,
// subset- and profile-indexed checks sweep every subset / canonical profile.
struct Instance {
  GRel d;
  std::optional<GRel> e;
  std::optional<GRel> f;
  std::vector<NetProfile> profiles;
  std::optional<Subset> subset;
  std::optional<std::vector<ExtReal>> radii;
  std::uint64_t seed = 0;
};

// What a check reads beyond d.
enum Needs : unsigned {
  kNeedsNothing = 0,
  kNeedsSecond = 1,    // e on the same carrier
  kNeedsThird = 2,     // f on the same carrier
  kNeedsSubset = 4,    // run per subset
  kNeedsProfile = 8,   // run per profile
  kUsesProfiles = 16,  // receives the whole profile list
  kUsesGrid = 32,
  kProperty = 64,  // asserts a property of the instance itself; default sweeps skip it
};

struct CheckInfo {
  std::string id;
  std::string statement;  // one-line statement of what is checked
  unsigned needs = kNeedsNothing;
  std::function<Report(const Instance&)> run;
};

struct Verdict {
  std::string check;
  Status status = Status::holds;
  std::string witness;
  std::string statement;
  Report report;
  std::size_t tested = 0;      // instances run
  std::size_t applicable = 0;  // instances whose hypothesis held
  bool untested = false;
  bool reverified = false;
  bool minimized = false;
  std::string digest;  // of the instance run, or of the minimized failure
  std::optional<Instance> instance;  // failing instance
};

const std::vector<CheckInfo>& registry();
// Throws UnknownCheck.
const CheckInfo& find_check(const std::string& id);

// Applies the subset/profile sweep and the defaults described on Instance.
Report run_report(const CheckInfo& check, const Instance& inst);
Verdict run_check(const std::string& id, const Instance& inst);

enum class GenKind { hemimetric, distance, partial_order, strict_order, predomain, max_continuous };
const char* to_string(GenKind k);
GenKind parse_gen_kind(const std::string& text);
std::vector<GenKind> all_gen_kinds();

// Reproducible from (kind, size, seed). Throws std::invalid_argument beyond the powerset cap
// and GenerationError when rejection sampling runs out of attempts.
GRel generate(GenKind kind, std::size_t size, std::uint64_t seed);

struct SearchSpec {
  std::vector<GenKind> kinds{GenKind::distance};
  std::vector<std::size_t> sizes{3};
  std::size_t budget = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// The i-th instance of a sweep: d, plus e and f when the check reads them.
Instance sweep_instance(const CheckInfo& check, const SearchSpec& spec, std::size_t i);

// Runs the sweep; the first failure in seed order is minimized by deleting elements
// while the failure persists, then re-run on the minimized instance.
Verdict search_counterexample(const CheckInfo& check, const SearchSpec& spec);
Verdict search_counterexample(const std::string& id, const SearchSpec& spec);

// Instance with element x removed from every relation, subset and profile.
Instance delete_element(const Instance& inst, std::size_t x);

std::string format_verdict(const Verdict& v);
nlohmann::ordered_json verdict_to_json(const Verdict& v);

}  // namespace qdt
