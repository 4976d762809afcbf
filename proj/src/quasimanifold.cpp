#include "levelcomplex/quasimanifold.hpp"

#include <map>

#include "levelcomplex/error.hpp"
#include "levelcomplex/homology.hpp"

namespace levelcomplex {

QuasimanifoldReport is_quasimanifold(const SimplicialComplex& complex, const FieldSpec& field) {
  QuasimanifoldReport report;
  report.pure = complex.is_pure();
  if (!report.pure) throw InputError("quasimanifold check needs a pure complex");
  if (complex.is_void()) return report;

  const int d = complex.dim();
  std::map<Face, int> ridge_count;
  for (Face f : complex.facets()) {
    f.for_each_vertex([&](int v) { ++ridge_count[f.without(v)]; });
  }
  for (const auto& [face, count] : ridge_count) {
    if (count > 2) report.ridge_violations.push_back(face);
  }
  for (Face face : complex.faces()) {
    // dim(face) < d - 1, i.e. |face| < d
    if (face.size() >= d) break;
    if (reduced_homology_dim(link(complex, face), 0, field) != 0) {
      report.link_violations.push_back(face);
    }
  }
  report.ok = report.ridge_violations.empty() && report.link_violations.empty();
  return report;
}

ReisnerReport reisner_check(const SimplicialComplex& complex, const FieldSpec& field) {
  ReisnerReport report;
  for (Face face : complex.faces()) {
    const SimplicialComplex lk = link(complex, face);
    const auto dims = reduced_homology_dims(lk, field);
    const int top = lk.dim();
    for (int i = -1; i < top; ++i) {
      if (dims[i + 1] != 0) {
        report.violations.push_back(face);
        break;
      }
    }
  }
  report.cohen_macaulay = report.violations.empty();
  return report;
}

}  // namespace levelcomplex
