#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdt {

enum class Status { holds, counterexample, not_applicable };

const char* to_string(Status s);

// Outcome of a property check: first failing clause becomes the witness.
struct Report {
  std::string name;
  Status status = Status::holds;
  std::string witness;
  std::vector<std::string> lines;

  explicit Report(std::string n = {}) : name(std::move(n)) {}

  static Report not_applicable(std::string name, std::string reason) {
    Report r(std::move(name));
    r.status = Status::not_applicable;
    r.witness = std::move(reason);
    return r;
  }

  // Records a clause; the detail callback runs only on failure.
  template <class Detail>
  bool expect(bool ok, const std::string& clause, Detail&& detail) {
    if (ok) {
      lines.push_back(clause + ": ok");
      return true;
    }
    std::string d = detail();
    lines.push_back(clause + ": FAIL " + d);
    if (status != Status::counterexample) {
      status = Status::counterexample;
      witness = clause + ": " + d;
    }
    return false;
  }
  bool expect(bool ok, const std::string& clause) {
    return expect(ok, clause, [] { return std::string(); });
  }

  void note(std::string line) { lines.push_back(std::move(line)); }
  // Folds a sub-report in; a counterexample there is a counterexample here.
  void absorb(const Report& sub);

  bool failed() const { return status == Status::counterexample; }
  std::string to_text() const;
};

}  // namespace qdt
