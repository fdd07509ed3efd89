#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdt/grel.hpp"
#include "qdt/json_io.hpp"

namespace qdt::test {

// Rows of cell texts over the given labels.
inline GRel table(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& cells) {
  Carrier c(labels);
  GRel d(c);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells[i].size(); ++j) d(i, j) = ExtReal::parse(cells[i][j]);
  return d;
}

inline ExtReal q(std::int64_t n, std::int64_t d = 1) { return ExtReal::ratio(n, d); }

inline ExtReal draw(std::mt19937_64& rng) {
  static const ExtReal palette[] = {0, 0, ExtReal::ratio(1, 3), ExtReal::ratio(1, 2), 1, 2, ExtReal::infinity()};
  return palette[rng() % std::size(palette)];
}

inline GRel random_rel(std::mt19937_64& rng, std::size_t n) {
  Carrier c = Carrier::numbered(n);
  return GRel::tabulate(c, c, [&](std::size_t, std::size_t) { return draw(rng); });
}

// Least distance below d, by path relaxation (Floyd-Warshall on paths of length >= 1).
inline GRel path_closure(GRel d) {
  const std::size_t n = d.rows();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ExtReal via = d(i, k) + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
  return d;
}

inline GRel random_distance(std::mt19937_64& rng, std::size_t n, bool zero_diagonal = false) {
  GRel d = random_rel(rng, n);
  if (zero_diagonal)
    for (std::size_t i = 0; i < n; ++i) d(i, i) = ExtReal();
  return path_closure(d);
}

// Literal triangle inequality over all triples.
inline bool triangle_holds(const GRel& d) {
  for (std::size_t x = 0; x < d.rows(); ++x)
    for (std::size_t y = 0; y < d.rows(); ++y)
      for (std::size_t z = 0; z < d.rows(); ++z)
        if (d(x, z) > d(x, y) + d(y, z)) return false;
  return true;
}

}  // namespace qdt::test
