#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "levelcomplex/simplicial_complex.hpp"

namespace lc = levelcomplex;

inline std::set<std::vector<lc::Cell>> facet_cell_sets(const lc::SimplicialComplex& c) {
  std::set<std::vector<lc::Cell>> out;
  for (lc::Face f : c.facets()) out.insert(c.cells_of(f));
  return out;
}

inline std::vector<lc::Cell> sorted(std::vector<lc::Cell> cells) {
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// Shapes (m, n) with 2 <= m <= n <= top.
inline std::vector<lc::MatrixShape> shapes_up_to(int top) {
  std::vector<lc::MatrixShape> out;
  for (int m = 2; m <= top; ++m) {
    for (int n = m; n <= top; ++n) out.emplace_back(m, n);
  }
  return out;
}
