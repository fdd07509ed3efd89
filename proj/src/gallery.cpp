#include "qdt/gallery.hpp"

#include <cctype>

namespace qdt {

namespace {

std::vector<ExtReal> grid_values(std::size_t n) {
  std::vector<ExtReal> v;
  if (n == 1) return {ExtReal()};
  for (std::size_t k = 0; k < n; ++k) v.push_back(ExtReal::ratio(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n - 1)));
  return v;
}

GRel characteristic(std::size_t n, bool strict) {
  const Carrier c = Carrier::numbered(n, "c");
  return GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) {
    return (strict ? i < j : i <= j) ? ExtReal() : kInf;
  });
}

}  // namespace

Carrier unit_grid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("grid needs at least one point");
  std::vector<std::string> labels;
  for (const auto& v : grid_values(n)) labels.push_back(v.to_string());
  return Carrier(std::move(labels));
}

GRel grid_product(std::size_t n) {
  const auto v = grid_values(n);
  const Carrier c = unit_grid(n);
  return GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return v[i] * truncated_sub(ExtReal(1), v[j]); });
}

GRel grid_truncated(std::size_t n) {
  const auto v = grid_values(n);
  const Carrier c = unit_grid(n);
  return GRel::tabulate(c, c, [&](std::size_t i, std::size_t j) { return truncated_sub(v[i], v[j]); });
}

GRel chain_order(std::size_t n) { return characteristic(n, false); }
GRel strict_chain(std::size_t n) { return characteristic(n, true); }

GRel nonreflexive_max() {
  const Carrier c({"a", "b", "c"});
  return GRel::tabulate(c, c, [](std::size_t i, std::size_t) { return i == 0 ? ExtReal(1) : ExtReal(); });
}

GRel discrete_metric(std::size_t n) {
  const Carrier c = Carrier::numbered(n, "m");
  return GRel::tabulate(c, c, [](std::size_t i, std::size_t j) { return i == j ? ExtReal() : ExtReal(1); });
}

GRel gallery(const std::string& name) {
  if (name == "X3NR") return nonreflexive_max();
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  const std::string stem = name.substr(0, split), digits = name.substr(split);
  if (digits.empty() || digits.size() > 2) throw UnknownGallery("unknown gallery instance: " + name);
  const std::size_t n = std::stoul(digits);
  if (n == 0) throw UnknownGallery("gallery size must be positive: " + name);
  if (stem == "G") return grid_product(n);
  if (stem == "Q") return grid_truncated(n);
  if (stem == "CHAIN") return chain_order(n);
  if (stem == "STRICT") return strict_chain(n);
  if (stem == "METRIC") return discrete_metric(n);
  throw UnknownGallery("unknown gallery instance: " + name);
}

std::vector<std::string> gallery_names() { return {"G3", "Q3", "CHAIN3", "STRICT3", "X3NR", "METRIC2"}; }

}  // namespace qdt
