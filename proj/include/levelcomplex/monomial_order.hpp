#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "levelcomplex/shape.hpp"

namespace levelcomplex {

/// Exponent vector over the row-major variables of one MatrixShape.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const MatrixShape& shape);
  Monomial(const MatrixShape& shape, const std::vector<Cell>& factors);

  int variable_count() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int exponent(int var) const { return exponents_[var]; }
  const std::vector<std::uint8_t>& exponents() const { return exponents_; }
  void set_exponent(int var, int value);

  bool is_square_free() const;
  /// Variables with nonzero exponent, ascending.
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint8_t> exponents_;
  int degree_ = 0;
};

std::string to_string(const Monomial& mono, const MatrixShape& shape);

enum class OrderKind { Rows, Diagonals, NaturalRowMajor, Custom };

std::string to_string(OrderKind kind);

/// Degree reverse lexicographic order induced by a priority permutation of the
/// variables (highest priority first).
class MonomialOrder {
 public:
  MonomialOrder(const MatrixShape& shape, OrderKind kind, std::vector<Cell> priority);

  /// Off-diagonal cells row by row, then the diagonal from (1,1) down.
  static MonomialOrder rows(const MatrixShape& shape);
  /// Diagonals from the bottom-left corner to the top-right, top cell first
  /// within each diagonal, main diagonal last.
  static MonomialOrder diagonals(const MatrixShape& shape);
  static MonomialOrder natural_row_major(const MatrixShape& shape);
  static MonomialOrder custom(const MatrixShape& shape, std::vector<Cell> priority);

  /// Reads a permutation file: one "i j" per line, highest priority first.
  /// Blank lines and lines starting with '#' are skipped.
  static MonomialOrder parse_permutation(const MatrixShape& shape, std::istream& in);
  static MonomialOrder load_permutation(const MatrixShape& shape, const std::string& path);

  /// Parses the CLI selector: rows, diag, natural or perm:<path>.
  static MonomialOrder from_selector(const MatrixShape& shape, const std::string& selector);

  const MatrixShape& shape() const { return shape_; }
  OrderKind kind() const { return kind_; }
  const std::vector<Cell>& priority() const { return priority_; }
  /// Position of a variable in the priority list; 0 is the largest variable.
  int rank(int var) const { return rank_[var]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

 private:
  MatrixShape shape_;
  OrderKind kind_;
  std::vector<Cell> priority_;
  std::vector<int> rank_;
  std::vector<int> by_priority_;  // variable index at each priority position
};

/// The 2-minor on rows i < k and columns j < l.
struct Minor2 {
  int row1;
  int row2;
  int col1;
  int col2;

  Monomial diagonal(const MatrixShape& shape) const;
  Monomial antidiagonal(const MatrixShape& shape) const;
};

std::vector<Minor2> all_minors(const MatrixShape& shape);

Monomial leading_term(const Minor2& minor, const MonomialOrder& order);

/// Leading terms of all C(m,2)C(n,2) minors, in minor enumeration order.
std::vector<Monomial> initial_ideal_generators(const MonomialOrder& order);

}  // namespace levelcomplex
