#include "qdt/carrier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

namespace qdt {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate carrier label '" + l + "'");
  }
}

Carrier Carrier::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Carrier(std::move(labels));
}

std::optional<std::size_t> Carrier::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Carrier::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw UnknownLabel("unknown label '" + label + "'");
  return *i;
}

Subset Subset::of(std::initializer_list<std::size_t> elems) {
  Subset s;
  for (auto i : elems) s.insert(i);
  return s;
}

Subset Subset::full(std::size_t n) {
  if (n > kMaxSubsetCarrier) throw CapacityError("carrier too large for subset bitsets");
  return Subset{n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::string format_subset(Subset s, const Carrier& c) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ",";
    out += c.label(i);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(const std::vector<std::string>& labels, const Carrier& c) {
  Subset s;
  for (const auto& l : labels) s.insert(c.index_of(l));
  return s;
}

namespace {
std::atomic<std::size_t> g_powerset_cap{16};
}

std::size_t powerset_cap() { return g_powerset_cap.load(); }

void set_powerset_cap(std::size_t n) {
  if (n > kMaxSubsetCarrier) throw CapacityError("powerset cap above bitset width");
  g_powerset_cap.store(n);
}

void require_powerset(std::size_t n) {
  if (n > powerset_cap())
    throw CapacityError("powerset enumeration over " + std::to_string(n) + " elements exceeds cap " +
                        std::to_string(powerset_cap()));
}

std::uint64_t powerset_size(std::size_t n) {
  require_powerset(n);
  return std::uint64_t{1} << n;
}

}  // namespace qdt
