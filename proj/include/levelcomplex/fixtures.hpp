#pragma once

#include <string>
#include <vector>

#include "levelcomplex/betti.hpp"
#include "levelcomplex/shape.hpp"

namespace levelcomplex {

/// A bundled reference Betti table, transcribed verbatim.
struct FixtureTable {
  std::string name;
  MatrixShape shape;
  /// Order selector the table belongs to; empty for the determinantal ideal itself.
  std::string order;
  std::string source;
  BettiTable entries;
  /// The data file as shipped, comments included.
  std::string text;
};

const std::vector<FixtureTable>& fixtures();
/// Throws InputError for unknown names.
const FixtureTable& fixture(const std::string& name);
/// The S/I_2 table at this shape, if one is bundled.
const FixtureTable* determinantal_fixture(const MatrixShape& shape);

/// Text of a bundled order file such as "randomA-4x5.perm".
const std::string& bundled_order_text(const std::string& name);
std::vector<std::string> bundled_order_names();

struct BettiDifference {
  int i;
  int j;
  long long computed;
  long long expected;
};

/// Entrywise differences over the union of nonzero entries.
std::vector<BettiDifference> betti_differences(const BettiTable& computed,
                                               const BettiTable& expected);

/// β_{i,j}(S/I_2) ≤ β_{i,j}(S/in(I_2)) at every entry; returns the violations.
std::vector<BettiDifference> dominance_violations(const BettiTable& initial,
                                                  const BettiTable& determinantal);
/// Degrees j whose alternating sums Σ_i (-1)^i β_{i,j} differ.
std::vector<int> antidiagonal_violations(const BettiTable& a, const BettiTable& b);
/// Indices k > 0 with β_{k,k} ≠ 0.
std::vector<int> diagonal_violations(const BettiTable& table);
/// Indices 1 ≤ i ≤ height where t_i > t_{i-1} fails.
std::vector<int> top_degree_violations(const BettiTable& table, int height);

struct FixtureComparison {
  std::vector<BettiDifference> differences;
  /// Filled when a determinantal table of the same shape is bundled.
  bool facts_checked = false;
  std::vector<BettiDifference> dominance;
  std::vector<int> antidiagonal;

  bool ok() const { return differences.empty() && dominance.empty() && antidiagonal.empty(); }
};

/// Throws ShapeMismatch when `shape` differs from the fixture's.
FixtureComparison compare_with_fixture(const BettiTable& computed, const MatrixShape& shape,
                                       const FixtureTable& fixture);

}  // namespace levelcomplex
