#include "levelcomplex/monomial_order.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

Monomial::Monomial(const MatrixShape& shape) : exponents_(shape.variable_count(), 0) {}

Monomial::Monomial(const MatrixShape& shape, const std::vector<Cell>& factors)
    : Monomial(shape) {
  for (const Cell& c : factors) {
    ++exponents_[shape.index(c)];
    ++degree_;
  }
}

void Monomial::set_exponent(int var, int value) {
  degree_ += value - exponents_[var];
  exponents_[var] = static_cast<std::uint8_t>(value);
}

bool Monomial::is_square_free() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int v = 0; v < variable_count(); ++v) {
    if (exponents_[v] != 0) out.push_back(v);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exponents_.size(); ++v) {
    if (exponents_[v] > other.exponents_[v]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exponents_.size(); ++v) out.exponents_[v] += other.exponents_[v];
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exponents_.size(); ++v) out.exponents_[v] -= divisor.exponents_[v];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.degree_ = 0;
  for (std::size_t v = 0; v < a.exponents_.size(); ++v) {
    out.exponents_[v] = std::max(a.exponents_[v], b.exponents_[v]);
    out.degree_ += out.exponents_[v];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exponents_.size(); ++v) {
    if (exponents_[v] != 0 && other.exponents_[v] != 0) return false;
  }
  return true;
}

std::string to_string(const Monomial& mono, const MatrixShape& shape) {
  if (mono.degree() == 0) return "1";
  std::string out;
  for (int v = 0; v < mono.variable_count(); ++v) {
    const int e = mono.exponent(v);
    if (e == 0) continue;
    const Cell c = shape.cell(v);
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(c.row) + "_" + std::to_string(c.col);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Rows: return "rows";
    case OrderKind::Diagonals: return "diag";
    case OrderKind::NaturalRowMajor: return "natural";
    case OrderKind::Custom: return "custom";
  }
  return "unknown";
}

MonomialOrder::MonomialOrder(const MatrixShape& shape, OrderKind kind, std::vector<Cell> priority)
    : shape_(shape), kind_(kind), priority_(std::move(priority)) {
  const int count = shape_.variable_count();
  if (static_cast<int>(priority_.size()) != count) {
    throw InputError("priority list has " + std::to_string(priority_.size()) +
                     " cells, expected " + std::to_string(count));
  }
  rank_.assign(count, -1);
  by_priority_.assign(count, -1);
  for (int pos = 0; pos < count; ++pos) {
    const int var = shape_.index(priority_[pos]);
    if (rank_[var] != -1) {
      throw InputError("cell " + to_string(priority_[pos]) + " appears twice in priority list");
    }
    rank_[var] = pos;
    by_priority_[pos] = var;
  }
}

MonomialOrder MonomialOrder::rows(const MatrixShape& shape) {
  std::vector<Cell> prio = shape.off_diagonal_cells();
  for (int k = 1; k <= shape.m(); ++k) prio.push_back({k, k});
  return MonomialOrder(shape, OrderKind::Rows, std::move(prio));
}

MonomialOrder MonomialOrder::diagonals(const MatrixShape& shape) {
  std::vector<Cell> prio = shape.off_diagonal_cells();
  std::stable_sort(prio.begin(), prio.end(), [](const Cell& a, const Cell& b) {
    const int da = a.row - a.col;
    const int db = b.row - b.col;
    if (da != db) return da > db;
    return a.row < b.row;
  });
  for (int k = 1; k <= shape.m(); ++k) prio.push_back({k, k});
  return MonomialOrder(shape, OrderKind::Diagonals, std::move(prio));
}

MonomialOrder MonomialOrder::natural_row_major(const MatrixShape& shape) {
  return MonomialOrder(shape, OrderKind::NaturalRowMajor, shape.cells());
}

MonomialOrder MonomialOrder::custom(const MatrixShape& shape, std::vector<Cell> priority) {
  return MonomialOrder(shape, OrderKind::Custom, std::move(priority));
}

MonomialOrder MonomialOrder::parse_permutation(const MatrixShape& shape, std::istream& in) {
  std::vector<Cell> prio;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Cell c;
    std::string extra;
    if (!(fields >> c.row >> c.col) || (fields >> extra)) {
      throw InputError("permutation line " + std::to_string(line_no) + ": expected \"i j\"");
    }
    if (!shape.contains(c)) {
      throw InputError("permutation line " + std::to_string(line_no) + ": cell " + to_string(c) +
                       " outside shape " + to_string(shape));
    }
    prio.push_back(c);
  }
  return custom(shape, std::move(prio));
}

MonomialOrder MonomialOrder::load_permutation(const MatrixShape& shape, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open permutation file " + path);
  return parse_permutation(shape, in);
}

MonomialOrder MonomialOrder::from_selector(const MatrixShape& shape, const std::string& selector) {
  if (selector == "rows") return rows(shape);
  if (selector == "diag") return diagonals(shape);
  if (selector == "natural") return natural_row_major(shape);
  if (selector.rfind("perm:", 0) == 0) return load_permutation(shape, selector.substr(5));
  throw InputError("unknown order selector '" + selector + "' (rows|diag|natural|perm:<path>)");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.variable_count() != shape_.variable_count() ||
      b.variable_count() != shape_.variable_count()) {
    throw ShapeMismatch("monomial does not belong to shape " + to_string(shape_));
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int pos = shape_.variable_count() - 1; pos >= 0; --pos) {
    const int var = by_priority_[pos];
    const int ea = a.exponent(var);
    const int eb = b.exponent(var);
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

Monomial Minor2::diagonal(const MatrixShape& shape) const {
  return Monomial(shape, {{row1, col1}, {row2, col2}});
}

Monomial Minor2::antidiagonal(const MatrixShape& shape) const {
  return Monomial(shape, {{row1, col2}, {row2, col1}});
}

std::vector<Minor2> all_minors(const MatrixShape& shape) {
  std::vector<Minor2> out;
  for (int i = 1; i <= shape.m(); ++i)
    for (int k = i + 1; k <= shape.m(); ++k)
      for (int j = 1; j <= shape.n(); ++j)
        for (int l = j + 1; l <= shape.n(); ++l) out.push_back({i, k, j, l});
  return out;
}

Monomial leading_term(const Minor2& minor, const MonomialOrder& order) {
  const MatrixShape& shape = order.shape();
  if (!(minor.row1 < minor.row2 && minor.col1 < minor.col2) ||
      !shape.contains({minor.row1, minor.col1}) || !shape.contains({minor.row2, minor.col2})) {
    throw InputError("invalid minor indices for shape " + to_string(shape));
  }
  Monomial diag = minor.diagonal(shape);
  Monomial anti = minor.antidiagonal(shape);
  return order.compare(diag, anti) == std::strong_ordering::greater ? diag : anti;
}

std::vector<Monomial> initial_ideal_generators(const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const Minor2& minor : all_minors(order.shape())) out.push_back(leading_term(minor, order));
  return out;
}

}  // namespace levelcomplex
