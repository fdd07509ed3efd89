#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdt/order.hpp"

namespace qdt {

// x Rd y = sup{(xdZ - ydz)+ : Z d-directed, z a d-sup or d-max of Z}; 0 when no pair exists.
GRel way_below_relational(const GRel& d, Bound mode);

// Same shape over d-Cauchy nets with a limit of the given kind. The sup runs over the
// supplied profiles plus one cycling profile per nonempty subset, so it is exact on a
// finite carrier whenever limits depend only on the tail set.
GRel way_below_topological(const GRel& d, const std::vector<NetProfile>& profiles, LimitKind kind);

enum class DomainKind { max, ball_hole };
const char* to_string(DomainKind k);
DomainKind parse_domain_kind(const std::string& text);

struct DomainVerdict {
  bool predomain = false;
  bool domain = false;
  std::string witness;
  std::optional<std::pair<std::size_t, std::size_t>> cell;
  std::optional<Subset> set;
  std::optional<std::size_t> point;
};

// predomain: upper <= lower and continuous of the kind; domain adds completeness.
DomainVerdict check_domain(const GRel& d, DomainKind kind);

// Continuity where the nets are d-Cauchy but limits are taken for e.
Decision is_mixed_limit_continuous(const GRel& d, const GRel& e, LimitKind kind);

// Decides both sides of the dual domain characterization with e = lower reflexivization.
Report check_dual_characterization(const GRel& d, DomainKind kind);

Report check_wbprops(const GRel& d, LimitKind kind);
Report check_rdprops(const GRel& d, Bound mode);
// Relational and topological tables agree for distances (sup with hole-hole, max with ball-hole).
Report check_way_below_agreement(const GRel& d);
// Hole-hole continuity and sup-continuity both match reflexivity of the zero relation.
Report check_hole_continuity(const GRel& d);

}  // namespace qdt
