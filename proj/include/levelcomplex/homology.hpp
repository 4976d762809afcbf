#pragma once

#include <vector>

#include "levelcomplex/field.hpp"
#include "levelcomplex/simplicial_complex.hpp"
#include "levelcomplex/sparse_rank.hpp"

namespace levelcomplex {

/// Boundary of the chain group spanned by `faces` (all of size k) into the
/// group spanned by `targets` (all of size k - 1, sorted). Terms whose face is
/// missing from `targets` are dropped, which realises quotient complexes.
/// Signs follow ∂[v_0 < ... < v_k] = Σ (-1)^t [.. v̂_t ..] in vertex order.
SparseMatrix boundary_matrix(const std::vector<Face>& faces, const std::vector<Face>& targets);

/// Homology dimensions of the chain complex whose degree-(k-1) basis is
/// chains[k] (faces of size k, each list sorted). Entry k of the result is
/// the dimension in degree k - 1.
std::vector<long long> chain_homology(const std::vector<std::vector<Face>>& chains,
                                      const FieldSpec& field);

/// dim H̃_i for i = -1 .. dim; entry i + 1. Empty for the void complex.
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field);

/// dim H̃_i, zero outside the computed range.
long long reduced_homology_dim(const SimplicialComplex& complex, int i, const FieldSpec& field);

/// dim H_i(complex, sub) from the chain complex C(complex)/C(sub). With a
/// void `sub` this is reduced homology of `complex`.
long long relative_homology_dim(const SimplicialComplex& complex, const SimplicialComplex& sub,
                                int i, const FieldSpec& field);

}  // namespace levelcomplex
