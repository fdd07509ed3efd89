#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdt {

struct UnknownLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Finite labelled set; indexes rows and columns of relations.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> labels);
  static Carrier numbered(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

inline constexpr std::size_t kMaxSubsetCarrier = 63;

// Bitset over a carrier's index order.
struct Subset {
  std::uint64_t bits = 0;

  static Subset of(std::initializer_list<std::size_t> elems);
  static Subset full(std::size_t n);
  static Subset singleton(std::size_t i) { return Subset{std::uint64_t{1} << i}; }

  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  void insert(std::size_t i) { bits |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { bits &= ~(std::uint64_t{1} << i); }
  bool empty() const { return bits == 0; }
  std::size_t count() const;
  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  std::vector<std::size_t> elements() const;

  friend Subset operator|(Subset a, Subset b) { return {a.bits | b.bits}; }
  friend Subset operator&(Subset a, Subset b) { return {a.bits & b.bits}; }
  friend bool operator==(Subset, Subset) = default;
  friend auto operator<=>(Subset a, Subset b) { return a.bits <=> b.bits; }
};

std::string format_subset(Subset s, const Carrier& c);
Subset parse_subset(const std::vector<std::string>& labels, const Carrier& c);

// Powerset enumeration guard; the cap is process-wide and adjustable.
std::size_t powerset_cap();
void set_powerset_cap(std::size_t n);
void require_powerset(std::size_t n);
std::uint64_t powerset_size(std::size_t n);

}  // namespace qdt
