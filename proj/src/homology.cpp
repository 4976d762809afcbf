#include "levelcomplex/homology.hpp"

#include <algorithm>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

SparseMatrix boundary_matrix(const std::vector<Face>& faces, const std::vector<Face>& targets) {
  SparseMatrix out;
  out.rows = targets.size();
  out.columns.reserve(faces.size());
  for (Face f : faces) {
    std::vector<std::pair<std::uint32_t, int>> column;
    int t = 0;
    f.for_each_vertex([&](int v) {
      const Face g = f.without(v);
      const auto it = std::lower_bound(targets.begin(), targets.end(), g);
      if (it != targets.end() && *it == g) {
        column.emplace_back(static_cast<std::uint32_t>(it - targets.begin()), t % 2 == 0 ? 1 : -1);
      }
      ++t;
    });
    std::sort(column.begin(), column.end());
    out.columns.push_back(std::move(column));
  }
  return out;
}

std::vector<long long> chain_homology(const std::vector<std::vector<Face>>& chains,
                                      const FieldSpec& field) {
  const std::size_t top = chains.size();
  // rank[k] = rank of ∂ from chains[k] to chains[k-1]
  std::vector<long long> rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    if (chains[k].empty() || chains[k - 1].empty()) continue;
    rank[k] = static_cast<long long>(matrix_rank(boundary_matrix(chains[k], chains[k - 1]), field));
  }
  std::vector<long long> dims(top, 0);
  for (std::size_t k = 0; k < top; ++k) {
    dims[k] = static_cast<long long>(chains[k].size()) - rank[k] - rank[k + 1];
  }
  return dims;
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field) {
  if (complex.is_void()) return {};
  return chain_homology(complex.faces_by_size(), field);
}

long long reduced_homology_dim(const SimplicialComplex& complex, int i, const FieldSpec& field) {
  const auto dims = reduced_homology_dims(complex, field);
  const int k = i + 1;
  if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
  return dims[k];
}

long long relative_homology_dim(const SimplicialComplex& complex, const SimplicialComplex& sub,
                                int i, const FieldSpec& field) {
  if (sub.vertices() != complex.vertices()) {
    throw InputError("relative homology: complexes use different vertex lists");
  }
  for (Face f : sub.facets()) {
    if (!complex.contains(f)) throw InputError("relative homology: sub is not a subcomplex");
  }
  if (complex.is_void()) return 0;
  auto chains = complex.faces_by_size();
  for (auto& level : chains) {
    std::erase_if(level, [&](Face f) { return sub.contains(f); });
  }
  // Degree i lives at size i + 1; its neighbours at sizes i and i + 2.
  const int k = i + 1;
  if (k < 0 || k >= static_cast<int>(chains.size())) return 0;
  return chain_homology(chains, field)[k];
}

}  // namespace levelcomplex
