#include "levelcomplex/canonical.hpp"

#include <algorithm>
#include <set>

#include "levelcomplex/homology.hpp"
#include "levelcomplex/quasimanifold.hpp"

namespace levelcomplex {

namespace {

void nondecreasing(int m, int length, int low, std::vector<int>& seq,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(seq.size()) == length) {
    out.push_back(seq);
    return;
  }
  for (int r = low; r <= m; ++r) {
    seq.push_back(r);
    nondecreasing(m, length, r, seq, out);
    seq.pop_back();
  }
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

long long composition_count(int i, int k) {
  if (i == 0 && k == 0) return 1;
  return binomial(i - 1, k - 1);
}

}  // namespace

std::vector<std::vector<Cell>> c_set(const MatrixShape& shape) {
  const int m = shape.m();
  const int n = shape.n();
  std::vector<std::vector<int>> seqs;
  std::vector<int> seq;
  nondecreasing(m, n - m, 1, seq, seqs);
  std::vector<std::vector<Cell>> out;
  for (const auto& s : seqs) {
    std::vector<Cell> face;
    for (int k = 0; k < n - m; ++k) face.push_back({s[k], m + 1 + k});
    out.push_back(std::move(face));
  }
  return out;
}

long long d_sigma(const SimplicialComplex& complex, Face sigma, const FieldSpec& field) {
  const SimplicialComplex lk = link(complex, sigma);
  return reduced_homology_dim(lk, lk.dim(), field);
}

long long canonical_weight(const SimplicialComplex& complex, Face sigma, const FieldSpec& field) {
  const SimplicialComplex lk = link(complex, sigma);
  return reduced_homology_dim(lk, complex.dim() - sigma.size(), field);
}

std::vector<std::pair<Face, long long>> canonical_support(const SimplicialComplex& complex,
                                                          const FieldSpec& field,
                                                          const WorkerPool& pool) {
  const std::vector<Face> faces = complex.faces();
  std::vector<long long> weight(faces.size(), 0);
  pool.parallel_for(faces.size(), [&](std::size_t k, std::size_t) {
    weight[k] = canonical_weight(complex, faces[k], field);
  });
  std::vector<std::pair<Face, long long>> out;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (weight[k] != 0) out.emplace_back(faces[k], weight[k]);
  }
  return out;
}

std::vector<Face> minimal_canonical_generators(const SimplicialComplex& complex,
                                               const FieldSpec& field, const WorkerPool& pool) {
  if (complex.is_void()) return {};
  bool pruned = complex.is_pure();
  if (pruned) pruned = is_quasimanifold(complex, field).ok;

  std::vector<Face> generators;
  if (!pruned) {
    const auto support = canonical_support(complex, field, pool);
    for (const auto& [face, w] : support) {
      const bool minimal = std::none_of(support.begin(), support.end(), [&](const auto& other) {
        return other.first != face && other.first.is_subset_of(face);
      });
      if (minimal) generators.push_back(face);
    }
    return generators;
  }

  // Monotone weights: a face is a candidate only if every ridge of it was
  // swept and found to have weight zero.
  std::set<Face> zero;
  for (const auto& level : complex.faces_by_size()) {
    std::vector<Face> candidates;
    for (Face f : level) {
      bool all_zero = true;
      f.for_each_vertex([&](int v) { all_zero = all_zero && zero.contains(f.without(v)); });
      if (all_zero) candidates.push_back(f);
    }
    if (candidates.empty()) break;
    std::vector<long long> weight(candidates.size(), 0);
    pool.parallel_for(candidates.size(), [&](std::size_t k, std::size_t) {
      weight[k] = canonical_weight(complex, candidates[k], field);
    });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (weight[k] == 0) {
        zero.insert(candidates[k]);
      } else {
        generators.push_back(candidates[k]);
      }
    }
  }
  return generators;
}

GradedDims canonical_graded_dims(const std::vector<std::pair<Face, long long>>& support,
                                 int max_degree, MultiplicityRule rule) {
  std::map<int, long long> by_size;
  for (const auto& [face, w] : support) by_size[face.size()] += w;
  GradedDims out;
  for (int i = 0; i <= max_degree; ++i) {
    long long total = 0;
    for (const auto& [k, count] : by_size) {
      if (k > i) continue;
      const long long mult =
          rule == MultiplicityRule::Compositions ? composition_count(i, k) : ipow(k, i - k);
      total += mult * count;
    }
    out[i] = total;
  }
  return out;
}

long long canonical_graded_dimension(const SimplicialComplex& complex, int degree,
                                     const FieldSpec& field, MultiplicityRule rule) {
  return canonical_graded_dims(canonical_support(complex, field), degree, rule).at(degree);
}

long long gprime_closed_formula(const MatrixShape& shape, int i) {
  const int m = shape.m();
  const int n = shape.n();
  if (i < 1) return 0;
  long long total = 0;
  for (int c = 0; c <= m + i - n; ++c) {
    for (int r = m + i + 1 - n - c; r <= std::min(m - c, i); ++r) {
      const int a = r + c + n - m - i - 1;
      const int b = m + i - n - c;
      const int e = i - r;
      if (a < 0 || b < 0 || e < 0) continue;  // 1/(negative)! = 0
      // (i-1)! / (a! b! e!) with a + b + e = i - 1
      const long long multinomial = binomial(i - 1, a) * binomial(i - 1 - a, b);
      total += binomial(m, r) * binomial(m - r, c) * multinomial;
    }
  }
  return total;
}

HilbertSeries hs_from_f_vector(const std::vector<long long>& f) {
  HilbertSeries hs;
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 0) return hs;
  hs.numerator = h_vector_from_f(f, d);
  hs.denominator_power = d;
  while (hs.denominator_power > 0) {
    long long at_one = 0;
    for (long long c : hs.numerator) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t): q_k = Σ_{j<=k} p_j
    std::vector<long long> q(hs.numerator.size() - 1, 0);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < hs.numerator.size(); ++k) {
      run += hs.numerator[k];
      q[k] = run;
    }
    hs.numerator = std::move(q);
    --hs.denominator_power;
  }
  while (hs.numerator.size() > 1 && hs.numerator.back() == 0) hs.numerator.pop_back();
  return hs;
}

GradedDims hs_duality(const HilbertSeries& hs, int dim, int max_degree) {
  const int p = hs.denominator_power;
  const long long sign = ((dim + p) % 2 == 0) ? 1 : -1;
  // numerator of ω: sign · Σ a_i t^{p - i}
  std::map<int, long long> num;
  for (std::size_t i = 0; i < hs.numerator.size(); ++i) {
    num[p - static_cast<int>(i)] += sign * hs.numerator[i];
  }
  const int low = num.empty() ? 0 : std::min(0, num.begin()->first);
  GradedDims out;
  for (int k = low; k <= max_degree; ++k) {
    long long total = 0;
    for (const auto& [e, a] : num) {
      const int rest = k - e;
      if (rest < 0) continue;
      const long long series = p == 0 ? (rest == 0 ? 1 : 0) : binomial(rest + p - 1, p - 1);
      total += a * series;
    }
    out[k] = total;
  }
  return out;
}

std::string to_string(const HilbertSeries& hs) {
  std::string num;
  for (std::size_t k = 0; k < hs.numerator.size(); ++k) {
    const long long c = hs.numerator[k];
    if (c == 0) continue;
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    const long long a = c < 0 ? -c : c;
    if (k == 0) {
      num += std::to_string(a);
    } else {
      if (a != 1) num += std::to_string(a);
      num += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  if (num.empty()) num = "0";
  return "(" + num + ")/(1-t)^" + std::to_string(hs.denominator_power);
}

CanonicalReport canonical_report(const SimplicialComplex& complex, int cone_points,
                                 const FieldSpec& field, int max_degree, const WorkerPool& pool) {
  CanonicalReport report;
  report.cohen_macaulay = reisner_check(complex, field).cohen_macaulay;
  report.quasimanifold = complex.is_pure() && is_quasimanifold(complex, field).ok;
  if (!report.cohen_macaulay) return report;

  report.minimal_generators = minimal_canonical_generators(complex, field, pool);
  std::set<int> distinct;
  for (Face g : report.minimal_generators) {
    report.generator_degrees.push_back(g.size());
    distinct.insert(g.size());
    report.cm_type += canonical_weight(complex, g, field);
  }
  if (!distinct.empty()) {
    report.a_invariant = -*distinct.begin();
    report.ambient_a_invariant = report.a_invariant - cone_points;
  }
  report.is_level = distinct.size() == 1;
  report.is_gorenstein = report.cm_type == 1;

  const auto support = canonical_support(complex, field, pool);
  report.omega_dims = canonical_graded_dims(support, max_degree, MultiplicityRule::Compositions);
  report.omega_dims_power_rule =
      canonical_graded_dims(support, max_degree, MultiplicityRule::Powers);
  report.omega_dims_duality =
      hs_duality(hs_from_f_vector(f_vector(complex)), complex.dim() + 1, max_degree);
  return report;
}

CanonicalReport level_report(const MonomialOrder& order, const FieldSpec& field,
                             const WorkerPool& pool) {
  const OrderComplex oc = order_complex(order);
  return canonical_report(oc.reduced, static_cast<int>(oc.cone.size()), field,
                          2 * order.shape().n(), pool);
}

}  // namespace levelcomplex
