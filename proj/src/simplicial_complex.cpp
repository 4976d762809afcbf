#include "levelcomplex/simplicial_complex.hpp"

#include <algorithm>
#include <bit>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

namespace {

bool facet_order(Face a, Face b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.bits() < b.bits();
}

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<Face>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(r);
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbours in P.
  int pivot = -1;
  int best = -1;
  for (std::uint64_t b = p | x; b != 0; b &= b - 1) {
    const int u = std::countr_zero(b);
    const int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t b = p & ~adj[pivot]; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), facet_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](Face k) { return f.is_subset_of(k); });
    if (!covered) kept.push_back(f);
  }
  return kept;
}

SimplicialComplex::SimplicialComplex(std::vector<Cell> vertices, std::vector<Face> generators)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > 64) throw InputError("complexes are limited to 64 vertices");
  const std::uint64_t all =
      vertices_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices_.size()) - 1;
  for (Face f : generators) {
    if ((f.bits() & ~all) != 0) throw InputError("face uses an undeclared vertex");
  }
  facets_ = maximal_faces(std::move(generators));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<Cell> vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<Cell> vertices) {
  const std::size_t n = vertices.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return SimplicialComplex(std::move(vertices), {Face(all)});
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  return facets_.front().size() - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(Face face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face f) { return face.is_subset_of(f); });
}

Face SimplicialComplex::used_vertices() const {
  Face out;
  for (Face f : facets_) out = out | f;
  return out;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face f : facets_) {
    const std::uint64_t full = f.bits();
    for (std::uint64_t s = full;; s = (s - 1) & full) {
      out.emplace_back(s);
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<Face>> out(std::max(0, dim() + 2));
  for (Face f : faces()) out[f.size()].push_back(f);
  return out;
}

int SimplicialComplex::index_of(const Cell& cell) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), cell);
  if (it == vertices_.end()) throw InputError("unknown vertex " + to_string(cell));
  return static_cast<int>(it - vertices_.begin());
}

Face SimplicialComplex::face_of(std::span<const Cell> cells) const {
  Face out;
  for (const Cell& c : cells) out = out.with(index_of(c));
  return out;
}

std::vector<Cell> SimplicialComplex::cells_of(Face face) const {
  std::vector<Cell> out;
  face.for_each_vertex([&](int v) { out.push_back(vertices_[v]); });
  return out;
}

std::vector<Face> maximal_cliques(const std::vector<std::uint64_t>& adjacency, Face candidates) {
  std::vector<Face> out;
  if (candidates.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint64_t> adj(adjacency.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    adj[v] = adjacency[v] & candidates.bits() & ~(std::uint64_t{1} << v);
  }
  bron_kerbosch(adj, 0, candidates.bits(), 0, out);
  std::sort(out.begin(), out.end(), facet_order);
  return out;
}

SimplicialComplex stanley_reisner_complex(const std::vector<Monomial>& generators,
                                          const MatrixShape& shape,
                                          const std::vector<Cell>& universe) {
  const int n = static_cast<int>(universe.size());
  if (n > 64) throw InputError("complexes are limited to 64 vertices");
  std::vector<int> vertex_of(shape.variable_count(), -1);
  for (int v = 0; v < n; ++v) vertex_of[shape.index(universe[v])] = v;

  std::vector<std::uint64_t> adj(n, 0);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v) adj[v] = all & ~(std::uint64_t{1} << v);
  std::uint64_t allowed = all;
  std::vector<Face> higher;

  for (const Monomial& g : generators) {
    if (g.variable_count() != shape.variable_count()) {
      throw ShapeMismatch("generator does not belong to shape " + to_string(shape));
    }
    if (!g.is_square_free()) {
      throw InputError("generator " + to_string(g, shape) + " is not square-free");
    }
    std::vector<int> verts;
    bool inside = true;
    for (int var : g.support()) {
      if (vertex_of[var] < 0) {
        inside = false;
        break;
      }
      verts.push_back(vertex_of[var]);
    }
    if (!inside) continue;  // never divides a monomial over the universe
    if (verts.empty()) {
      return SimplicialComplex::void_complex(universe);  // the unit ideal
    }
    if (verts.size() == 1) {
      allowed &= ~(std::uint64_t{1} << verts[0]);
    } else if (verts.size() == 2) {
      adj[verts[0]] &= ~(std::uint64_t{1} << verts[1]);
      adj[verts[1]] &= ~(std::uint64_t{1} << verts[0]);
    } else {
      higher.push_back(Face::of(verts));
    }
  }

  std::vector<Face> facets = maximal_cliques(adj, Face(allowed));
  // Non-quadratic generators: split every facet that still contains one.
  for (Face nonface : higher) {
    std::vector<Face> next;
    for (Face f : facets) {
      if (!nonface.is_subset_of(f)) {
        next.push_back(f);
        continue;
      }
      nonface.for_each_vertex([&](int v) { next.push_back(f.without(v)); });
    }
    facets = maximal_faces(std::move(next));
  }
  return SimplicialComplex(universe, std::move(facets));
}

std::vector<Cell> cone_points(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  std::uint64_t common = ~std::uint64_t{0};
  for (Face f : complex.facets()) common &= f.bits();
  return complex.cells_of(Face(common));
}

SimplicialComplex restrict(const SimplicialComplex& complex, const std::vector<Cell>& keep) {
  std::vector<int> old_index;
  for (const Cell& c : keep) old_index.push_back(complex.index_of(c));
  std::vector<Face> generators;
  for (Face f : complex.facets()) {
    Face g;
    for (std::size_t k = 0; k < old_index.size(); ++k) {
      if (f.contains(old_index[k])) g = g.with(static_cast<int>(k));
    }
    generators.push_back(g);
  }
  return SimplicialComplex(keep, std::move(generators));
}

SimplicialComplex induced(const SimplicialComplex& complex, Face keep) {
  std::vector<Face> generators;
  for (Face f : complex.facets()) generators.push_back(f & keep);
  return SimplicialComplex(complex.vertices(), std::move(generators));
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) throw InputError("link: face is not in the complex");
  std::vector<Face> generators;
  for (Face f : complex.facets()) {
    if (sigma.is_subset_of(f)) generators.push_back(f - sigma);
  }
  return SimplicialComplex(complex.vertices(), std::move(generators));
}

SimplicialComplex contrastar(const SimplicialComplex& complex, Face sigma) {
  std::vector<Face> generators;
  if (!sigma.empty()) {
    for (Face f : complex.facets()) {
      if (!sigma.is_subset_of(f)) {
        generators.push_back(f);
      } else {
        sigma.for_each_vertex([&](int v) { generators.push_back(f.without(v)); });
      }
    }
  }
  return SimplicialComplex(complex.vertices(), std::move(generators));
}

bool is_flag(const SimplicialComplex& complex) {
  if (complex.is_void()) return true;
  std::vector<std::uint64_t> adj(complex.vertex_count(), 0);
  for (Face f : complex.facets()) {
    f.for_each_vertex([&](int v) { adj[v] |= f.without(v).bits(); });
  }
  return maximal_cliques(adj, complex.used_vertices()) == complex.facets();
}

std::vector<long long> f_vector(const SimplicialComplex& complex) {
  std::vector<long long> f(std::max(0, complex.dim() + 2), 0);
  for (Face face : complex.faces()) ++f[face.size()];
  return f;
}

std::vector<long long> h_vector_from_f(const std::vector<long long>& f, int dim_ring) {
  std::vector<long long> h(std::max(0, dim_ring + 1), 0);
  for (int k = 0; k <= dim_ring; ++k) {
    long long sum = 0;
    for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
      const long long sign = ((k - i) % 2 == 0) ? 1 : -1;
      sum += sign * binomial(dim_ring - i, k - i) * f[i];
    }
    h[k] = sum;
  }
  return h;
}

OrderComplex order_complex(const MonomialOrder& order) {
  const MatrixShape& shape = order.shape();
  SimplicialComplex full =
      stanley_reisner_complex(initial_ideal_generators(order), shape, shape.cells());
  std::vector<Cell> cone = cone_points(full);
  std::vector<Cell> keep;
  for (const Cell& c : shape.cells()) {
    if (std::find(cone.begin(), cone.end(), c) == cone.end()) keep.push_back(c);
  }
  SimplicialComplex reduced = restrict(full, keep);
  return {std::move(full), std::move(cone), std::move(reduced)};
}

std::string to_string(const SimplicialComplex& complex, Face face) {
  std::string out = "{";
  bool first = true;
  for (const Cell& c : complex.cells_of(face)) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace levelcomplex
