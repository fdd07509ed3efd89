#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdt/carrier.hpp"

namespace qdt {

// Eventually periodic sequence: prefix then cycle repeated forever.
struct NetProfile {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;

  static NetProfile constant(std::size_t x) { return {{}, {x}}; }
  // Cycle visiting the members of s in index order.
  static NetProfile cycling(Subset s);

  void validate(std::size_t carrier_size) const;
  Subset tail_set() const;
  // Element at position n of the unrolled sequence.
  std::size_t at(std::size_t n) const;

  friend bool operator==(const NetProfile&, const NetProfile&) = default;
};

// "a b (c d)*": prefix then the repeated cycle.
std::string format_profile(const NetProfile& p, const Carrier& c);

// One profile per nonempty subset: every possible tail behaviour on the carrier.
std::vector<NetProfile> canonical_profiles(std::size_t carrier_size);

}  // namespace qdt
