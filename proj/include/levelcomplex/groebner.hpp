#pragma once

#include <cstddef>
#include <vector>

#include "levelcomplex/monomial_order.hpp"
#include "levelcomplex/worker_pool.hpp"

namespace levelcomplex {

struct Term {
  Monomial monomial;
  long long coefficient;
};

/// Integer polynomial kept sorted by a fixed order, largest term first.
class Polynomial {
 public:
  explicit Polynomial(const MonomialOrder* order) : order_(order) {}
  Polynomial(const MonomialOrder* order, std::vector<Term> terms);

  static Polynomial from_minor(const MonomialOrder* order, const Minor2& minor);

  const MonomialOrder* order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  /// *this - coefficient * multiplier * other
  Polynomial minus_scaled(const Polynomial& other, long long coefficient,
                          const Monomial& multiplier) const;
  Term pop_leading();

 private:
  const MonomialOrder* order_;
  std::vector<Term> terms_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full multivariate division remainder. Among divisors whose leading term
/// divides the current term, the lowest index is used.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors);

struct GroebnerReport {
  bool ok = true;
  std::size_t generator_count = 0;
  std::size_t pair_count = 0;
  /// (i, j) minor indices whose S-polynomial left a nonzero remainder.
  std::vector<std::pair<std::size_t, std::size_t>> failed_pairs;
};

/// Buchberger criterion over all pairs of 2-minors under the given order.
GroebnerReport verify_groebner_basis(const MonomialOrder& order, const WorkerPool& pool = WorkerPool{});

}  // namespace levelcomplex
