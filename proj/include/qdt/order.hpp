#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdt/grel.hpp"
#include "qdt/nets.hpp"
#include "qdt/report.hpp"

namespace qdt {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SubsetFamily {
  Carrier carrier;
  std::vector<Subset> members;

  // Sorts and deduplicates members.
  void normalize();
  std::vector<std::string> member_labels() const;
};

// Yes/no answer with the first failing subset or point, if any.
struct Decision {
  bool holds = true;
  std::optional<Subset> witness_set;
  std::optional<std::size_t> witness_point;
  std::string detail;

  explicit operator bool() const { return holds; }
  static Decision yes() { return {}; }
  static Decision no_set(Subset s, std::string why);
  static Decision no_point(std::size_t x, std::string why);
};

// Directed: some y in Y sits above all of Y up to 0 (finite top test).
bool is_directed(Subset y, const GRel& d);
// Literal form: (Fd)Y = 0 for every finite F inside Y, the empty F included.
bool is_directed_by_subsets(Subset y, const GRel& d);
bool is_final(Subset y, const GRel& d);
// Literal form over all F in X: F inside I iff (Fd)I = 0.
bool is_ideal(Subset i, const GRel& d);
// {x : xdY = 0}; throws PreconditionError naming an element of Y with ydY > 0.
Subset ideal_closure(Subset y, const GRel& d);

std::vector<Subset> directed_subsets(const GRel& d, Subset within);
std::vector<Subset> directed_subsets(const GRel& d);
std::vector<Subset> ideals(const GRel& d);

// Y <=d x and Yd >= xd
Subset d_sup_set(Subset y, const GRel& d);
// Y <=d x and dY <= dx
Subset d_max_set(Subset y, const GRel& d);

enum class Bound { sup, max };
Subset bound_set(Subset y, const GRel& d, Bound b);
const char* to_string(Bound b);

// x <d y iff every z with y dlow z = 0 has x d z = 0; a 0/inf table.
GRel strict_below(const GRel& d);

// Relations on the subset carrier: rows F with F(Pd)x = sup_{f in F} fdx,
// and the transpose-shaped x(dP)Z = sup_{z in Z} xdz.
Carrier powerset_carrier(const Carrier& c);
GRel subset_rows(const GRel& d);
GRel subset_cols(const GRel& d);

// Every directed set (directed by `directing`) has a bound of the given kind under d.
Decision is_complete(const GRel& directing, const GRel& d, Bound b);
Decision is_sup_complete(const GRel& d);
Decision is_max_complete(const GRel& d);
// Every Cauchy profile has a limit of the given kind.
Decision is_limit_complete(const GRel& d, LimitKind kind);
Decision is_ball_hole_complete(const GRel& d);
Decision is_hole_hole_complete(const GRel& d);

// Every x is a bound of some directed subset of `basis`.
Decision is_continuous(const GRel& directing, const GRel& d, Bound b, Subset basis);
Decision is_max_continuous(const GRel& d);
// Interpolation criterion over all finite F, the empty one included: Fd o <=d <= Fd.
Decision max_continuity_criterion(const GRel& d);
// Every x is a limit of a Cauchy profile inside `basis`.
Decision is_limit_continuous(const GRel& d, LimitKind kind, Subset basis);
Decision is_ball_hole_continuous(const GRel& d);
// Same criterion through the uniformity of d.
Decision ball_hole_continuity_criterion(const GRel& d);

enum class BasisKind { max, ball_hole };
const char* to_string(BasisKind k);
bool is_basis(Subset b, const GRel& d, BasisKind kind);
// Compares the definition with both characterizations when X is continuous.
Report check_basis(Subset b, const GRel& d, BasisKind kind);

// Relational abstract-basis property for a 0/inf relation: F(<) inside F(<) o <.
bool is_abstract_basis(const GRel& rel);

Report check_FdY(Subset y, const GRel& d);
Report check_YdYd(Subset y, const GRel& d);
Report check_supmax(Subset y, const GRel& d);
Report check_supmaxrelations(Subset y, const GRel& d);
Report check_directedCauchy(Subset y, const GRel& d);
Report check_dballclosure(Subset y, const GRel& d);
// Runs the set-level checks above over every subset.
Report check_order_sweep(const GRel& d);

// Hypotheses and conclusions of the completeness and continuity transfers.
// A hypothesis that holds with a failing conclusion is reported as a CONTRADICTION line.
Report interpolation_report(const GRel& d, const std::optional<GRel>& e = std::nullopt);
std::size_t contradiction_count(const Report& r);

}  // namespace qdt
