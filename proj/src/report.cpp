#include "qdt/report.hpp"

#include <sstream>

namespace qdt {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::counterexample: return "counterexample";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

void Report::absorb(const Report& sub) {
  for (const auto& l : sub.lines) lines.push_back(sub.name + "/" + l);
  if (sub.status == Status::not_applicable) lines.push_back(sub.name + ": not applicable (" + sub.witness + ")");
  if (sub.failed() && !failed()) {
    status = Status::counterexample;
    witness = sub.name + "/" + sub.witness;
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << name << ": " << to_string(status);
  if (!witness.empty()) os << " (" << witness << ")";
  os << '\n';
  for (const auto& l : lines) os << "  " << l << '\n';
  return os.str();
}

}  // namespace qdt
