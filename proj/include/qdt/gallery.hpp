#pragma once

#include <string>
#include <vector>

#include "qdt/grel.hpp"

namespace qdt {

struct UnknownGallery : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Points 0, 1/(n-1), ..., 1 labelled by their value.
Carrier unit_grid(std::size_t n);
// x(1-y) on the unit grid.
GRel grid_product(std::size_t n);
// (x-y)+ on the unit grid.
GRel grid_truncated(std::size_t n);
// 0 where i <= j (or i < j), inf elsewhere.
GRel chain_order(std::size_t n);
GRel strict_chain(std::size_t n);
// Row a is all 1, other rows 0: a is a non-reflexive max of {b,c}.
GRel nonreflexive_max();
GRel discrete_metric(std::size_t n);

// Names: Gn, Qn, CHAINn, STRICTn, X3NR, METRICn.
GRel gallery(const std::string& name);
std::vector<std::string> gallery_names();

}  // namespace qdt
