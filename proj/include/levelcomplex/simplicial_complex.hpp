#pragma once

#include <span>
#include <string>
#include <vector>

#include "levelcomplex/face.hpp"
#include "levelcomplex/monomial_order.hpp"
#include "levelcomplex/shape.hpp"

namespace levelcomplex {

/// A simplicial complex over an ordered vertex list of matrix cells, stored by
/// its facets. The void complex has no faces at all; {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal members of `generators` as facets.
  SimplicialComplex(std::vector<Cell> vertices, std::vector<Face> generators);

  static SimplicialComplex void_complex(std::vector<Cell> vertices);
  static SimplicialComplex full_simplex(std::vector<Cell> vertices);

  const std::vector<Cell>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  /// Facets sorted by descending size, then by bit pattern.
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dim() const;
  bool is_pure() const;
  bool contains(Face face) const;
  /// Vertices that occur in some face.
  Face used_vertices() const;

  /// All faces including ∅, sorted by size then bit pattern.
  std::vector<Face> faces() const;
  /// faces_by_size()[k] lists the faces with k vertices.
  std::vector<std::vector<Face>> faces_by_size() const;

  int index_of(const Cell& cell) const;
  Face face_of(std::span<const Cell> cells) const;
  std::vector<Cell> cells_of(Face face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Cell> vertices_;
  std::vector<Face> facets_;
};

/// Keeps only inclusion-maximal faces, sorted as in SimplicialComplex::facets.
std::vector<Face> maximal_faces(std::vector<Face> faces);

/// Complex of subsets whose monomial lies outside the ideal generated by the
/// square-free `generators`, over the cells in `universe`.
SimplicialComplex stanley_reisner_complex(const std::vector<Monomial>& generators,
                                          const MatrixShape& shape,
                                          const std::vector<Cell>& universe);

std::vector<Cell> cone_points(const SimplicialComplex& complex);

/// Induced subcomplex on the cells in `keep`, re-indexed in `keep` order.
SimplicialComplex restrict(const SimplicialComplex& complex, const std::vector<Cell>& keep);
/// Induced subcomplex on a vertex mask, keeping the original vertex indexing.
SimplicialComplex induced(const SimplicialComplex& complex, Face keep);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ complex}; throws if σ is not a face.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);
/// Faces that do not contain σ.
SimplicialComplex contrastar(const SimplicialComplex& complex, Face sigma);

/// True when the complex equals the clique complex of its 1-skeleton.
bool is_flag(const SimplicialComplex& complex);

/// Maximal cliques of a graph given as adjacency masks (pivoting
/// Bron-Kerbosch), sorted.
std::vector<Face> maximal_cliques(const std::vector<std::uint64_t>& adjacency, Face candidates);

/// f_{-1}, f_0, ..., f_dim.
std::vector<long long> f_vector(const SimplicialComplex& complex);
/// h-vector of length d + 1 for d = dim_ring (defaults to dim + 1).
std::vector<long long> h_vector_from_f(const std::vector<long long>& f, int dim_ring);

/// Complex on the off-diagonal cells after the cone points of the
/// Stanley-Reisner complex of in_<(I_2) are removed.
struct OrderComplex {
  SimplicialComplex full;          // Δ_I on all m·n cells
  std::vector<Cell> cone;          // cone points of Δ_I
  SimplicialComplex reduced;       // Δ_I restricted to the non-cone vertices
};

OrderComplex order_complex(const MonomialOrder& order);

std::string to_string(const SimplicialComplex& complex, Face face);

}  // namespace levelcomplex
