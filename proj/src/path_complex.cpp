#include "levelcomplex/path_complex.hpp"

#include <algorithm>
#include <map>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

std::vector<int> rows_of(const std::vector<Cell>& cells) {
  std::vector<int> out;
  for (const Cell& c : cells) out.push_back(c.row);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> cols_of(const std::vector<Cell>& cells) {
  std::vector<int> out;
  for (const Cell& c : cells) out.push_back(c.col);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void walk(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t r,
          std::size_t c, std::vector<Cell>& path, std::vector<std::vector<Cell>>& out) {
  path.push_back({rows[r], cols[c]});
  if (r + 1 == rows.size() && c + 1 == cols.size()) {
    out.push_back(path);
  } else {
    if (c + 1 < cols.size()) walk(rows, cols, r, c + 1, path, out);
    if (r + 1 < rows.size()) walk(rows, cols, r + 1, c, path, out);
  }
  path.pop_back();
}

}  // namespace

std::vector<std::vector<Cell>> enumerate_path_facets(const MatrixShape& shape) {
  std::vector<std::vector<Cell>> out;
  for (unsigned mask = 1; mask < (1U << shape.m()); ++mask) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (int k = 1; k <= shape.n(); ++k) {
      if (k <= shape.m() && ((mask >> (k - 1)) & 1U)) {
        rows.push_back(k);
      } else {
        cols.push_back(k);
      }
    }
    if (cols.empty()) continue;  // r = [n] leaves no columns (m = n)
    std::vector<Cell> path;
    walk(rows, cols, 0, 0, path, out);
  }
  return out;
}

SimplicialComplex path_complex(const MatrixShape& shape) {
  const std::vector<Cell> vertices = shape.off_diagonal_cells();
  SimplicialComplex empty(vertices, {});
  std::vector<Face> facets;
  for (const auto& path : enumerate_path_facets(shape)) facets.push_back(empty.face_of(path));
  return SimplicialComplex(vertices, std::move(facets));
}

long long path_facet_count(const MatrixShape& shape) {
  long long total = 0;
  for (int k = 1; k <= shape.m(); ++k) {
    total += binomial(shape.m(), k) * binomial(shape.n() - 2, k - 1);
  }
  return total;
}

PathFacet PathFacet::decode(const MatrixShape& shape, const std::vector<Cell>& cells) {
  PathFacet out;
  out.path = cells;
  std::sort(out.path.begin(), out.path.end());
  out.path.erase(std::unique(out.path.begin(), out.path.end()), out.path.end());
  out.rows = rows_of(out.path);
  out.cols = cols_of(out.path);

  std::vector<int> all = out.rows;
  all.insert(all.end(), out.cols.begin(), out.cols.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expected(shape.n());
  for (int k = 0; k < shape.n(); ++k) expected[k] = k + 1;
  if (out.path.empty() || all != expected) {
    throw InputError("cells do not form a path facet: rows and columns must partition [n]");
  }
  for (const Cell& c : out.path) {
    if (!shape.contains(c)) throw InputError("path cell " + to_string(c) + " outside shape");
  }

  auto row_pos = [&](int r) { return std::find(out.rows.begin(), out.rows.end(), r) - out.rows.begin(); };
  auto col_pos = [&](int c) { return std::find(out.cols.begin(), out.cols.end(), c) - out.cols.begin(); };
  if (out.path.front() != Cell{out.rows.front(), out.cols.front()} ||
      out.path.back() != Cell{out.rows.back(), out.cols.back()}) {
    throw InputError("path facet must run corner to corner of its submatrix");
  }
  for (std::size_t k = 1; k < out.path.size(); ++k) {
    const Cell& a = out.path[k - 1];
    const Cell& b = out.path[k];
    if (a.row == b.row && col_pos(b.col) == col_pos(a.col) + 1) {
      out.steps.push_back(true);
    } else if (a.col == b.col && row_pos(b.row) == row_pos(a.row) + 1) {
      out.steps.push_back(false);
    } else {
      throw InputError("path facet has a non-adjacent step " + to_string(a) + " -> " +
                       to_string(b));
    }
  }
  return out;
}

VertexKind PathFacet::kind(std::size_t position) const {
  const bool has_prev = position > 0;
  const bool has_next = position + 1 < path.size();
  const bool prev_right = has_prev && steps[position - 1];
  const bool next_right = has_next && steps[position];
  if (has_prev && has_next) {
    if (prev_right && next_right) return VertexKind::Horizontal;
    if (!prev_right && !next_right) return VertexKind::Vertical;
    return prev_right ? VertexKind::RightTurning : VertexKind::LeftTurning;
  }
  if (has_next) return next_right ? VertexKind::Horizontal : VertexKind::Vertical;
  if (has_prev) return prev_right ? VertexKind::Horizontal : VertexKind::Vertical;
  return VertexKind::Horizontal;
}

std::vector<Face> boundary_faces(const SimplicialComplex& complex) {
  std::map<Face, int> count;
  for (Face f : complex.facets()) {
    f.for_each_vertex([&](int v) { ++count[f.without(v)]; });
  }
  std::vector<Face> out;
  const int ridge = complex.dim();  // size of a codimension-one face
  for (const auto& [face, c] : count) {
    if (c == 1 && face.size() == ridge) out.push_back(face);
  }
  return out;
}

std::vector<Face> boundary_faces_by_rows_cols(const SimplicialComplex& delta,
                                              const MatrixShape& shape) {
  std::vector<Face> out;
  for (Face face : delta.faces()) {
    if (face.size() != shape.n() - 2) continue;
    const auto cells = delta.cells_of(face);
    std::vector<int> used = rows_of(cells);
    const auto cols = cols_of(cells);
    used.insert(used.end(), cols.begin(), cols.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (static_cast<int>(used.size()) != shape.n() - 1) continue;
    int missing = 0;
    for (int k = 1; k <= shape.n(); ++k) {
      if (!std::binary_search(used.begin(), used.end(), k)) missing = k;
    }
    if (missing > shape.m()) out.push_back(face);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace levelcomplex
