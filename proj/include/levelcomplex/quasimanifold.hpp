#pragma once

#include <vector>

#include "levelcomplex/field.hpp"
#include "levelcomplex/simplicial_complex.hpp"

namespace levelcomplex {

struct QuasimanifoldReport {
  bool ok = false;
  bool pure = false;
  /// Codimension-one faces lying in more than two facets.
  std::vector<Face> ridge_violations;
  /// Lower-dimensional faces whose link is disconnected.
  std::vector<Face> link_violations;
};

/// Pure complex whose codimension-one faces lie in one or two facets and
/// whose smaller faces have connected links (H̃_0 = 0 over the field).
QuasimanifoldReport is_quasimanifold(const SimplicialComplex& complex, const FieldSpec& field);

struct ReisnerReport {
  bool cohen_macaulay = false;
  /// Faces σ with H̃_i(lk σ) ≠ 0 for some i below dim(lk σ).
  std::vector<Face> violations;
};

/// Reisner's criterion swept over every face, ∅ included.
ReisnerReport reisner_check(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace levelcomplex
