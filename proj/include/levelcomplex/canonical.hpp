#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "levelcomplex/field.hpp"
#include "levelcomplex/monomial_order.hpp"
#include "levelcomplex/simplicial_complex.hpp"
#include "levelcomplex/worker_pool.hpp"

namespace levelcomplex {

/// Dimension of each graded piece, keyed by degree.
using GradedDims = std::map<int, long long>;

/// numerator(t) / (1 - t)^denominator_power
struct HilbertSeries {
  std::vector<long long> numerator;
  int denominator_power = 0;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

enum class MultiplicityRule {
  /// Σ_k C(i-1, k-1)·|G'_k|: exponent vectors with exact support σ.
  Compositions,
  /// Σ_k k^(i-k)·|G'_k|, the closed expression printed alongside.
  Powers,
};

/// Nondecreasing row sequences placed in the last n - m columns:
/// {(i_1, m+1), ..., (i_{n-m}, n)} with i_1 <= ... <= i_{n-m}. {∅} when m = n.
std::vector<std::vector<Cell>> c_set(const MatrixShape& shape);

/// dim H̃ of the link of σ in the link's top dimension.
long long d_sigma(const SimplicialComplex& complex, Face sigma, const FieldSpec& field);

/// dim H_d(Δ, cost σ) = dim H̃_{d-|σ|}(lk σ) for d = dim Δ. Equals d_sigma on
/// pure complexes.
long long canonical_weight(const SimplicialComplex& complex, Face sigma, const FieldSpec& field);

/// Faces with nonzero canonical weight (the set G'), with their weights.
std::vector<std::pair<Face, long long>> canonical_support(const SimplicialComplex& complex,
                                                          const FieldSpec& field,
                                                          const WorkerPool& pool = WorkerPool{});

/// Inclusion-minimal faces with nonzero canonical weight (the set G). For
/// quasimanifolds the sweep runs by cardinality and only visits faces whose
/// ridges all have weight zero; otherwise every face is examined.
std::vector<Face> minimal_canonical_generators(const SimplicialComplex& complex,
                                               const FieldSpec& field,
                                               const WorkerPool& pool = WorkerPool{});

/// Graded dimensions of ω in degrees 0..max_degree from the weighted support.
GradedDims canonical_graded_dims(const std::vector<std::pair<Face, long long>>& support,
                                 int max_degree, MultiplicityRule rule);

long long canonical_graded_dimension(const SimplicialComplex& complex, int degree,
                                     const FieldSpec& field, MultiplicityRule rule);

/// Closed double sum for |G'_i| on Δ(m,n).
long long gprime_closed_formula(const MatrixShape& shape, int i);

/// Σ f_{i-1} t^i (1-t)^{d-i} over (1-t)^d, with common (1-t) factors and
/// trailing zeros removed.
HilbertSeries hs_from_f_vector(const std::vector<long long>& f);

/// Graded dimensions of (-1)^dim · HS(1/t) up to max_degree.
GradedDims hs_duality(const HilbertSeries& hs, int dim, int max_degree);

std::string to_string(const HilbertSeries& hs);

struct CanonicalReport {
  bool cohen_macaulay = false;
  bool quasimanifold = false;
  std::vector<Face> minimal_generators;
  std::vector<int> generator_degrees;
  long long cm_type = 0;
  /// -(least degree of ω) for the complex with cone points removed.
  int a_invariant = 0;
  /// a(S/I): the reduced value minus the number of cone points.
  int ambient_a_invariant = 0;
  bool is_level = false;
  bool is_gorenstein = false;
  GradedDims omega_dims;
  GradedDims omega_dims_power_rule;
  GradedDims omega_dims_duality;
};

/// Canonical-module combinatorics of a complex; `cone_points` only shifts the
/// ambient a-invariant.
CanonicalReport canonical_report(const SimplicialComplex& complex, int cone_points,
                                 const FieldSpec& field, int max_degree,
                                 const WorkerPool& pool = WorkerPool{});

/// canonical_report for Δ of the initial ideal under `order`, degrees up to 2n.
CanonicalReport level_report(const MonomialOrder& order, const FieldSpec& field,
                             const WorkerPool& pool = WorkerPool{});

}  // namespace levelcomplex
