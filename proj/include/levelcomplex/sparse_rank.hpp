#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "levelcomplex/field.hpp"

namespace levelcomplex {

/// Column-major sparse integer matrix; each column lists (row, value) with
/// strictly increasing rows.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

/// Exact rank over the field. Rationals use GMP; GF(p) uses word arithmetic.
std::size_t matrix_rank(const SparseMatrix& matrix, const FieldSpec& field);

}  // namespace levelcomplex
