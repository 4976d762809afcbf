#pragma once

#include <vector>

#include "levelcomplex/simplicial_complex.hpp"

namespace levelcomplex {

/// Row set r^σ and column set c^σ of a set of cells, ascending.
std::vector<int> rows_of(const std::vector<Cell>& cells);
std::vector<int> cols_of(const std::vector<Cell>& cells);

/// Δ(m,n) built directly from monotone lattice paths: for every nonempty row
/// set r ⊆ [m] with c = [n] \ r, all right/down paths from the top-left to the
/// bottom-right corner of the r x c submatrix. Vertices are the off-diagonal
/// cells in row-major order.
SimplicialComplex path_complex(const MatrixShape& shape);

/// The facets of path_complex(shape), each as a path of cells in walking order.
std::vector<std::vector<Cell>> enumerate_path_facets(const MatrixShape& shape);

/// Σ_k C(m,k)·C(n-2,k-1).
long long path_facet_count(const MatrixShape& shape);

enum class VertexKind { RightTurning, LeftTurning, Horizontal, Vertical };

/// A facet of Δ(m,n) decoded into its walking order.
struct PathFacet {
  std::vector<int> rows;    // r^F
  std::vector<int> cols;    // c^F
  std::vector<Cell> path;   // top-left to bottom-right
  /// true = step to the right, false = step down; size path.size() - 1.
  std::vector<bool> steps;

  /// Throws InputError unless the cells form a facet of Δ(shape).
  static PathFacet decode(const MatrixShape& shape, const std::vector<Cell>& cells);

  /// A single-vertex path (only when n = 2) is classified as horizontal.
  VertexKind kind(std::size_t position) const;
};

/// Codimension-one faces lying in exactly one facet, computed by counting.
std::vector<Face> boundary_faces(const SimplicialComplex& complex);
/// Codimension-one faces of Δ(m,n) with r^σ ∪ c^σ = [n] \ {l} for some l > m.
std::vector<Face> boundary_faces_by_rows_cols(const SimplicialComplex& delta,
                                              const MatrixShape& shape);

}  // namespace levelcomplex
