#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "levelcomplex/path_complex.hpp"
#include "levelcomplex/simplicial_complex.hpp"

namespace levelcomplex {

struct FacetPartition {
  std::vector<Cell> plus;
  std::vector<Cell> minus;
  std::vector<Cell> star;
};

/// Splits a facet of Δ(shape) into F⁺, F⁻ and F* by the kind of each vertex
/// along its path. Throws InputError for cells that are not a path facet.
FacetPartition vertex_partition(const std::vector<Cell>& facet, const MatrixShape& shape);

/// Facet order: row sets first (lexicographic, a proper prefix is smaller),
/// then the first differing path step, a step right being smaller.
std::strong_ordering compare_facets(const std::vector<Cell>& a, const std::vector<Cell>& b,
                                    const MatrixShape& shape);

/// Facets of path_complex(shape), ascending, as faces of that complex.
std::vector<Face> shelling_order(const MatrixShape& shape);

struct ShellingViolation {
  bool backward = false;
  std::size_t step = 0;
  Face face;  // a maximal intersection of the wrong size
};

struct ShellingReport {
  std::vector<Face> order;
  bool ok_forward = false;
  bool ok_backward = false;
  std::vector<ShellingViolation> violations;
  /// Restriction face of order[k] when the order is read forward / reversed.
  std::vector<Face> restriction_forward;
  std::vector<Face> restriction_backward;
  /// restriction size -> number of steps, forward direction.
  std::map<int, long long> restriction_sizes;
};

/// Checks at every step that ⟨F_k⟩ ∩ ⟨F_1, ..., F_{k-1}⟩ is generated by
/// faces of size |F_k| - 1, for the order and for its reverse. Throws
/// InputError unless `order` is a permutation of the facets.
ShellingReport verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order);

struct IntersectionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Facet by facet on Δ(shape): intersections with earlier facets are exactly
/// the F⁻ deletions, with later facets exactly the F⁺ deletions, and each F*
/// deletion lies in no other facet.
IntersectionCheck intersection_partition_report(const SimplicialComplex& complex, const MatrixShape& shape);
bool intersection_partition_check(const SimplicialComplex& complex, const MatrixShape& shape);

/// h_j = number of forward steps whose restriction face has j vertices.
std::vector<long long> h_vector_from_shelling(const ShellingReport& report);

}  // namespace levelcomplex
