#include "levelcomplex/shelling.hpp"

#include <algorithm>
#include <set>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

namespace {

std::vector<Face> maximal_intersections(Face facet, const std::vector<Face>& others) {
  std::vector<Face> meets;
  meets.reserve(others.size());
  for (Face g : others) meets.push_back(facet & g);
  return maximal_faces(std::move(meets));
}

std::vector<Face> deletions(const SimplicialComplex& complex, Face facet,
                            const std::vector<Cell>& cells) {
  std::vector<Face> out;
  for (const Cell& v : cells) out.push_back(facet.without(complex.index_of(v)));
  std::sort(out.begin(), out.end());
  return out;
}

// Walks the order once; returns per-position restriction faces.
std::vector<Face> sweep(const std::vector<Face>& order, bool backward,
                        std::vector<ShellingViolation>& violations, bool& ok) {
  ok = true;
  std::vector<Face> restriction(order.size());
  std::vector<Face> seen;
  for (std::size_t s = 0; s < order.size(); ++s) {
    const std::size_t k = backward ? order.size() - 1 - s : s;
    const Face facet = order[k];
    if (!seen.empty()) {
      Face r;
      for (Face meet : maximal_intersections(facet, seen)) {
        if (meet.size() != facet.size() - 1) {
          ok = false;
          violations.push_back({backward, s, meet});
        } else {
          r = r | (facet - meet);
        }
      }
      restriction[k] = r;
    }
    seen.push_back(facet);
  }
  return restriction;
}

}  // namespace

FacetPartition vertex_partition(const std::vector<Cell>& facet, const MatrixShape& shape) {
  const PathFacet pf = PathFacet::decode(shape, facet);
  const int m = shape.m();
  const int max_r = pf.rows.back();
  FacetPartition out;
  for (std::size_t p = 0; p < pf.path.size(); ++p) {
    const Cell v = pf.path[p];
    switch (pf.kind(p)) {
      case VertexKind::RightTurning:
        out.plus.push_back(v);
        break;
      case VertexKind::LeftTurning:
        out.minus.push_back(v);
        break;
      case VertexKind::Horizontal:
        if (v.col > m) {
          out.star.push_back(v);
        } else if (v.col > max_r) {
          out.plus.push_back(v);
        } else {
          out.minus.push_back(v);
        }
        break;
      case VertexKind::Vertical:
        (v.row < max_r ? out.plus : out.minus).push_back(v);
        break;
    }
  }
  return out;
}

std::strong_ordering compare_facets(const std::vector<Cell>& a, const std::vector<Cell>& b,
                                    const MatrixShape& shape) {
  const PathFacet fa = PathFacet::decode(shape, a);
  const PathFacet fb = PathFacet::decode(shape, b);
  if (auto c = fa.rows <=> fb.rows; c != 0) return c;
  for (std::size_t k = 0; k < fa.steps.size(); ++k) {
    if (fa.steps[k] != fb.steps[k]) {
      return fa.steps[k] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Face> shelling_order(const MatrixShape& shape) {
  const SimplicialComplex delta = path_complex(shape);
  std::vector<std::vector<Cell>> paths = enumerate_path_facets(shape);
  std::sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
    return compare_facets(a, b, shape) < 0;
  });
  std::vector<Face> out;
  for (const auto& p : paths) out.push_back(delta.face_of(p));
  return out;
}

ShellingReport verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order) {
  std::vector<Face> sorted_order = order;
  std::vector<Face> facets = complex.facets();
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(facets.begin(), facets.end());
  if (sorted_order != facets) throw InputError("order is not a permutation of the facets");

  ShellingReport report;
  report.order = order;
  report.restriction_forward = sweep(order, false, report.violations, report.ok_forward);
  report.restriction_backward = sweep(order, true, report.violations, report.ok_backward);
  for (Face r : report.restriction_forward) ++report.restriction_sizes[r.size()];
  return report;
}

IntersectionCheck intersection_partition_report(const SimplicialComplex& complex,
                                         const MatrixShape& shape) {
  IntersectionCheck check;
  const std::vector<Face> order = shelling_order(shape);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Face facet = order[k];
    const std::vector<Cell> cells = complex.cells_of(facet);
    const FacetPartition part = vertex_partition(cells, shape);
    const std::vector<Face> earlier(order.begin(), order.begin() + k);
    const std::vector<Face> later(order.begin() + k + 1, order.end());

    auto expect = [&](const std::vector<Face>& others, const std::vector<Cell>& side,
                      const char* label) {
      std::vector<Face> got = others.empty() ? std::vector<Face>{} : maximal_intersections(facet, others);
      std::sort(got.begin(), got.end());
      if (got != deletions(complex, facet, side)) {
        check.ok = false;
        check.failures.push_back(to_string(complex, facet) + ": intersection with " + label +
                                 " facets differs");
      }
    };
    expect(earlier, part.minus, "earlier");
    expect(later, part.plus, "later");

    for (const Cell& v : part.star) {
      const Face ridge = facet.without(complex.index_of(v));
      for (Face g : complex.facets()) {
        if (g != facet && ridge.is_subset_of(g)) {
          check.ok = false;
          check.failures.push_back(to_string(complex, facet) + ": deletion of " + to_string(v) +
                                   " lies in another facet");
        }
      }
    }
  }
  return check;
}

bool intersection_partition_check(const SimplicialComplex& complex, const MatrixShape& shape) {
  return intersection_partition_report(complex, shape).ok;
}

std::vector<long long> h_vector_from_shelling(const ShellingReport& report) {
  if (!report.ok_forward) throw InputError("not a valid shelling");
  int d = 0;
  for (Face f : report.order) d = std::max(d, f.size());
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [size, count] : report.restriction_sizes) h[size] += count;
  return h;
}

}  // namespace levelcomplex
