#pragma once

#include <compare>
#include <string>
#include <vector>

namespace levelcomplex {

/// A cell (row, col) of the m x n variable matrix, 1-based.
struct Cell {
  int row = 0;
  int col = 0;

  bool is_diagonal() const { return row == col; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// Shape of the generic matrix: 2 <= m <= n, at most 64 cells so that faces
/// fit in one machine word.
class MatrixShape {
 public:
  MatrixShape(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int variable_count() const { return m_ * n_; }

  bool contains(const Cell& cell) const;
  /// Row-major index of a cell, 0-based.
  int index(const Cell& cell) const;
  Cell cell(int index) const;

  std::vector<Cell> cells() const;
  /// Off-diagonal cells in row-major order; this is the vertex order of the
  /// path complex.
  std::vector<Cell> off_diagonal_cells() const;

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;

 private:
  int m_;
  int n_;
};

std::string to_string(const MatrixShape& shape);

long long binomial(long long n, long long k);

}  // namespace levelcomplex
