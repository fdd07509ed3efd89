#include "qdt/profile.hpp"

#include <stdexcept>

namespace qdt {

NetProfile NetProfile::cycling(Subset s) {
  if (s.empty()) throw std::invalid_argument("profile cycle must be nonempty");
  return {{}, s.elements()};
}

void NetProfile::validate(std::size_t carrier_size) const {
  if (cycle.empty()) throw std::invalid_argument("profile cycle must be nonempty");
  for (auto v : prefix)
    if (v >= carrier_size) throw std::out_of_range("profile element outside carrier");
  for (auto v : cycle)
    if (v >= carrier_size) throw std::out_of_range("profile element outside carrier");
}

Subset NetProfile::tail_set() const {
  Subset s;
  for (auto v : cycle) s.insert(v);
  return s;
}

std::size_t NetProfile::at(std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  return cycle[(n - prefix.size()) % cycle.size()];
}

std::vector<NetProfile> canonical_profiles(std::size_t carrier_size) {
  std::vector<NetProfile> out;
  const std::uint64_t total = powerset_size(carrier_size);
  for (std::uint64_t m = 1; m < total; ++m) out.push_back(NetProfile::cycling(Subset{m}));
  return out;
}

std::string format_profile(const NetProfile& p, const Carrier& c) {
  std::string out;
  for (auto i : p.prefix) out += c.label(i) + " ";
  out += "(";
  for (std::size_t k = 0; k < p.cycle.size(); ++k) out += (k ? " " : "") + c.label(p.cycle[k]);
  return out + ")*";
}

}  // namespace qdt
