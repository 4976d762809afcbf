#include "levelcomplex/sparse_rank.hpp"

#include <gmpxx.h>

namespace levelcomplex {

namespace {

struct ModP {
  using Value = std::uint32_t;
  std::uint64_t p;

  Value from_int(int v) const {
    const long long r = v % static_cast<long long>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  static bool is_zero(Value v) { return v == 0; }
  Value mul(Value a, Value b) const { return static_cast<Value>(std::uint64_t{a} * b % p); }
  Value sub(Value a, Value b) const { return static_cast<Value>((a + p - b) % p); }
  Value inverse(Value a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Value>(result);
  }
};

struct Rationals {
  using Value = mpq_class;

  static Value from_int(int v) { return Value(v); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value inverse(const Value& a) { return 1 / a; }
};

/// Column reduction keyed by the lowest nonzero row, as in persistence
/// algorithms; each stored pivot column is normalised to end in 1.
template <class Field>
std::size_t reduce_rank(const SparseMatrix& matrix, const Field& field) {
  using Value = typename Field::Value;
  using Column = std::vector<std::pair<std::uint32_t, Value>>;
  std::vector<Column> pivots;
  std::vector<int> owner(matrix.rows, -1);
  Column work;
  Column scratch;

  for (const auto& source : matrix.columns) {
    work.clear();
    for (const auto& [row, v] : source) {
      Value x = field.from_int(v);
      if (!Field::is_zero(x)) work.emplace_back(row, std::move(x));
    }
    while (!work.empty()) {
      const std::uint32_t low = work.back().first;
      const int o = owner[low];
      if (o < 0) {
        const Value inv = field.inverse(work.back().second);
        for (auto& entry : work) entry.second = field.mul(entry.second, inv);
        owner[low] = static_cast<int>(pivots.size());
        pivots.push_back(work);
        break;
      }
      // work -= factor * pivot, where pivot ends in 1.
      const Value factor = work.back().second;
      const Column& pivot = pivots[o];
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < work.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < work.size() && work[i].first < pivot[j].first)) {
          scratch.push_back(std::move(work[i++]));
        } else if (i == work.size() || pivot[j].first < work[i].first) {
          scratch.emplace_back(pivot[j].first, field.sub(Value(0), field.mul(factor, pivot[j].second)));
          ++j;
        } else {
          Value x = field.sub(work[i].second, field.mul(factor, pivot[j].second));
          if (!Field::is_zero(x)) scratch.emplace_back(work[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      std::swap(work, scratch);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(const SparseMatrix& matrix, const FieldSpec& field) {
  if (field.is_rationals()) return reduce_rank(matrix, Rationals{});
  return reduce_rank(matrix, ModP{field.characteristic()});
}

}  // namespace levelcomplex
