#include "levelcomplex/shape.hpp"

#include "levelcomplex/error.hpp"

namespace levelcomplex {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

MatrixShape::MatrixShape(int m, int n) : m_(m), n_(n) {
  if (m < 2 || n < m) {
    throw InputError("shape requires 2 <= m <= n, got m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
  }
  if (m * n > 64) {
    throw InputError("shape " + std::to_string(m) + "x" + std::to_string(n) +
                     " has more than 64 cells");
  }
}

bool MatrixShape::contains(const Cell& cell) const {
  return cell.row >= 1 && cell.row <= m_ && cell.col >= 1 && cell.col <= n_;
}

int MatrixShape::index(const Cell& cell) const {
  if (!contains(cell)) {
    throw InputError("cell " + to_string(cell) + " outside shape " +
                     levelcomplex::to_string(*this));
  }
  return (cell.row - 1) * n_ + (cell.col - 1);
}

Cell MatrixShape::cell(int index) const {
  return Cell{index / n_ + 1, index % n_ + 1};
}

std::vector<Cell> MatrixShape::cells() const {
  std::vector<Cell> out;
  out.reserve(variable_count());
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<Cell> MatrixShape::off_diagonal_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  return out;
}

std::string to_string(const MatrixShape& shape) {
  return "(" + std::to_string(shape.m()) + "," + std::to_string(shape.n()) + ")";
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace levelcomplex
