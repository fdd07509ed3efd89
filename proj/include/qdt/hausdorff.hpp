#pragma once

#include <optional>
#include <vector>

#include "qdt/order.hpp"

namespace qdt {

// Hausdorff-type relation on a family of subsets of `base`.
struct PowersetRel {
  Carrier base;
  SubsetFamily family;
  GRel values;  // over the family, labelled by format_subset

  std::optional<std::size_t> index_of(Subset s) const;
};

SubsetFamily full_family(const Carrier& c);
SubsetFamily directed_family(const GRel& d);
SubsetFamily ideal_family(const GRel& d);

// Y upper Z = inf_{z in Z} sup_{y in Y} ydz
PowersetRel hausdorff_upper(const GRel& d, const std::optional<SubsetFamily>& family = std::nullopt);
// Y lower Z = sup_{y in Y} inf_{z in Z} ydz
PowersetRel hausdorff_lower(const GRel& d, const std::optional<SubsetFamily>& family = std::nullopt);

Report check_hausfunc(const GRel& d, const GRel& e);
// Unions are maxima of upper-directed families and sups of lower-directed ones.
Report check_hausdorff_prop(const GRel& d);

struct Completion {
  PowersetRel rel;                     // upper Hausdorff on the directed subsets
  std::vector<std::size_t> embedding;  // x -> index of {z : zdx = 0}
  Report report;
};

// Throws PreconditionError unless d is max-continuous.
Completion complete_predomain(const GRel& d, bool quotient = false);
// Predomain iff d embeds as a max-basis of a max-domain extension (built from the completion).
Report check_pdcomp(const GRel& d);
Report check_universality(Subset basis, const GRel& d);
Report check_dHhemi(const GRel& d, const std::vector<NetProfile>& profiles = {});

}  // namespace qdt
