#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "levelcomplex/field.hpp"
#include "levelcomplex/simplicial_complex.hpp"
#include "levelcomplex/worker_pool.hpp"

namespace levelcomplex {

/// Graded Betti numbers β_{i,j}: homological index i, internal degree j.
class BettiTable {
 public:
  void add(int i, int j, long long value);
  long long at(int i, int j) const;
  /// Nonzero entries only.
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  int pdim() const;
  /// max (j - i) over nonzero entries.
  int reg() const;
  /// t_i = max{j : β_{i,j} ≠ 0}.
  std::optional<int> top_degree(int i) const;
  /// Σ_i (-1)^i β_{i,j}.
  long long alternating_sum(int j) const;
  int max_degree() const;

  /// Grid with rows j - i and columns i, zeros printed.
  std::string render_text() const;
  std::string render_csv() const;
  /// Reads the grid written by render_text; '#' comments are skipped.
  static BettiTable parse_text(std::istream& in);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

struct HochsterOptions {
  /// Refuse sweeps over more vertices unless forced.
  int max_vertices = 24;
  bool force = false;
};

/// β_{i,j}(k[Δ]) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W) over all vertex subsets W
/// of the complex's vertex list. Cone points are skipped (they never
/// contribute). For flag complexes each induced subcomplex is first shrunk by
/// removing dominated vertices, which preserves its homotopy type.
BettiTable hochster_betti_table(const SimplicialComplex& complex, const FieldSpec& field,
                                const WorkerPool& pool = WorkerPool{},
                                const HochsterOptions& options = {});

}  // namespace levelcomplex
