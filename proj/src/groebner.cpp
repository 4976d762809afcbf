#include "levelcomplex/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelcomplex {

namespace {

long long checked_sub_mul(long long a, long long c, long long b) {
  long long prod = 0;
  long long out = 0;
  if (__builtin_mul_overflow(c, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw std::overflow_error("polynomial coefficient overflow");
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const MonomialOrder* order, std::vector<Term> terms)
    : order_(order), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order_->compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::from_minor(const MonomialOrder* order, const Minor2& minor) {
  const MatrixShape& shape = order->shape();
  return Polynomial(order, {{minor.diagonal(shape), 1}, {minor.antidiagonal(shape), -1}});
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::minus_scaled(const Polynomial& other, long long coefficient,
                                    const Monomial& multiplier) const {
  Polynomial out(order_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial shifted = other.terms_[j].monomial * multiplier;
    const auto cmp = i == terms_.size() ? std::strong_ordering::less
                                        : order_->compare(terms_[i].monomial, shifted);
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(
          {std::move(shifted), checked_sub_mul(0, coefficient, other.terms_[j].coefficient)});
      ++j;
    } else {
      const long long c =
          checked_sub_mul(terms_[i].coefficient, coefficient, other.terms_[j].coefficient);
      if (c != 0) out.terms_.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = Monomial::lcm(f.leading().monomial, g.leading().monomial);
  // g.lc * (l / lt f) * f - f.lc * (l / lt g) * g
  return Polynomial(f.order())
      .minus_scaled(f, -g.leading().coefficient, l / f.leading().monomial)
      .minus_scaled(g, f.leading().coefficient, l / g.leading().monomial);
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& d : divisors) {
      const Term& dl = d.leading();
      if (dl.monomial.divides(lead.monomial) && lead.coefficient % dl.coefficient == 0) {
        divisor = &d;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(rest.pop_leading());
      continue;
    }
    const Term& dl = divisor->leading();
    rest = rest.minus_scaled(*divisor, lead.coefficient / dl.coefficient,
                             lead.monomial / dl.monomial);
  }
  return Polynomial(p.order(), std::move(remainder));
}

GroebnerReport verify_groebner_basis(const MonomialOrder& order, const WorkerPool& pool) {
  std::vector<Polynomial> minors;
  for (const Minor2& minor : all_minors(order.shape())) {
    minors.push_back(Polynomial::from_minor(&order, minor));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    for (std::size_t j = i + 1; j < minors.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<char> failed(pairs.size(), 0);
  pool.parallel_for(pairs.size(), [&](std::size_t k, std::size_t) {
    const auto [i, j] = pairs[k];
    failed[k] = !reduce(s_polynomial(minors[i], minors[j]), minors).is_zero();
  });

  GroebnerReport report;
  report.generator_count = minors.size();
  report.pair_count = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (failed[k]) report.failed_pairs.push_back(pairs[k]);
  }
  report.ok = report.failed_pairs.empty();
  return report;
}

}  // namespace levelcomplex
