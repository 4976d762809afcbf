#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "levelcomplex/error.hpp"
#include "levelcomplex/groebner.hpp"
#include "levelcomplex/monomial_order.hpp"
#include "levelcomplex/path_complex.hpp"
#include "support.hpp"

using namespace levelcomplex;

TEST_CASE("degrevlex comparisons") {
  const MatrixShape s22(2, 2);
  const auto rows22 = MonomialOrder::rows(s22);
  const Monomial a(s22, {{1, 2}, {2, 1}});
  CHECK(rows22.compare(a, a) == std::strong_ordering::equal);
  CHECK(rows22.compare(Monomial(s22, {{1, 1}, {2, 2}}), a) == std::strong_ordering::less);

  const MatrixShape s34(3, 4);
  const auto rows34 = MonomialOrder::rows(s34);
  CHECK(rows34.compare(Monomial(s34, {{1, 2}}), Monomial(s34, {{1, 3}})) ==
        std::strong_ordering::greater);
  // higher degree always wins
  CHECK(rows34.compare(Monomial(s34, {{3, 3}, {3, 3}}), Monomial(s34, {{1, 2}})) ==
        std::strong_ordering::greater);

  CHECK_THROWS_AS(rows34.compare(Monomial(s34), Monomial(s22)), ShapeMismatch);
}

TEST_CASE("degrevlex is a total order on random monomials") {
  const MatrixShape s(3, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(0, 2);
  for (const auto& order : {MonomialOrder::rows(s), MonomialOrder::diagonals(s),
                            MonomialOrder::natural_row_major(s)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial x(s), y(s), z(s);
      for (int v = 0; v < s.variable_count(); ++v) {
        x.set_exponent(v, exp(rng) == 2 ? 1 : 0);
        y.set_exponent(v, exp(rng) == 2 ? 1 : 0);
        z.set_exponent(v, exp(rng) == 2 ? 1 : 0);
      }
      const auto xy = order.compare(x, y);
      CHECK(order.compare(y, x) == 0 <=> xy);
      CHECK((xy == 0) == (x == y));
      if (xy < 0 && order.compare(y, z) < 0) CHECK(order.compare(x, z) < 0);
    }
  }
}

TEST_CASE("leading terms of 2-minors") {
  const MatrixShape s22(2, 2);
  CHECK(leading_term({1, 2, 1, 2}, MonomialOrder::rows(s22)) ==
        Monomial(s22, {{1, 2}, {2, 1}}));

  const MatrixShape s(3, 4);
  const auto rows = MonomialOrder::rows(s);
  CHECK(leading_term({1, 3, 3, 4}, rows) == Monomial(s, {{1, 3}, {3, 4}}));
  CHECK(leading_term({1, 2, 3, 4}, rows) == Monomial(s, {{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(leading_term({2, 1, 3, 4}, rows), InputError);
  CHECK_THROWS_AS(leading_term({1, 4, 1, 2}, rows), InputError);
}

TEST_CASE("initial ideal generators") {
  const MatrixShape s22(2, 2);
  const auto g22 = initial_ideal_generators(MonomialOrder::rows(s22));
  REQUIRE(g22.size() == 1);
  CHECK(g22[0] == Monomial(s22, {{1, 2}, {2, 1}}));

  const MatrixShape s34(3, 4);
  const auto g34 = initial_ideal_generators(MonomialOrder::rows(s34));
  CHECK(g34.size() == 18);
  for (const auto& g : g34) {
    CHECK(g.is_square_free());
    CHECK(g.degree() == 2);
    for (int v : g.support()) CHECK_FALSE(s34.cell(v).is_diagonal());
  }

  const MatrixShape s45(4, 5);
  for (const auto& order : {MonomialOrder::rows(s45), MonomialOrder::diagonals(s45),
                            MonomialOrder::natural_row_major(s45)}) {
    const auto gens = initial_ideal_generators(order);
    CHECK(gens.size() == 60);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) CHECK_FALSE(gens[a] == gens[b]);
    }
  }
}

TEST_CASE("rows-order generators follow the two-case description") {
  for (const auto& s : shapes_up_to(6)) {
    std::set<std::vector<int>> expected;
    for (int i = 1; i <= s.m(); ++i) {
      for (int k = i + 1; k <= s.m(); ++k) {
        for (int j = 1; j <= s.n(); ++j) {
          for (int l = j + 1; l <= s.n(); ++l) {
            // antidiagonal unless the antidiagonal holds a diagonal cell
            const bool diagonal_term = (i == l || k == j);
            const Monomial t = diagonal_term ? Monomial(s, {{i, j}, {k, l}}) : Monomial(s, {{i, l}, {k, j}});
            expected.insert(t.support());
          }
        }
      }
    }
    std::set<std::vector<int>> got;
    for (const auto& g : initial_ideal_generators(MonomialOrder::rows(s))) {
      got.insert(g.support());
      for (int v : g.support()) CHECK_FALSE(s.cell(v).is_diagonal());
    }
    CHECK(got == expected);
  }
}

TEST_CASE("built-in priority lists") {
  const MatrixShape s(3, 4);
  const auto rows = MonomialOrder::rows(s);
  CHECK(rows.priority().front() == Cell{1, 2});
  CHECK(rows.priority()[3] == Cell{2, 1});
  CHECK(rows.priority().back() == Cell{3, 3});

  const auto natural = MonomialOrder::natural_row_major(s);
  CHECK(natural.priority().front() == Cell{1, 1});
  CHECK(natural.priority().back() == Cell{3, 4});

  // diagonals from bottom-left to top-right, higher cell first, main diagonal last
  const auto diag = MonomialOrder::diagonals(s);
  const std::vector<Cell> want = {{3, 1}, {2, 1}, {3, 2}, {1, 2}, {2, 3}, {3, 4},
                                  {1, 3}, {2, 4}, {1, 4}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(diag.priority() == want);
}

TEST_CASE("diagonal order complex has the same number of path facets") {
  for (const auto& s : shapes_up_to(5)) {
    const auto oc = order_complex(MonomialOrder::diagonals(s));
    CHECK(static_cast<long long>(oc.reduced.facets().size()) == path_facet_count(s));
    CHECK(oc.cone.size() == static_cast<std::size_t>(s.m()));
  }
}

TEST_CASE("permutation files") {
  const MatrixShape s(2, 2);
  std::istringstream good("# highest first\n1 2\n\n2 1\n1 1\n2 2\n");
  const auto order = MonomialOrder::parse_permutation(s, good);
  CHECK(order.kind() == OrderKind::Custom);
  CHECK(order.priority() == std::vector<Cell>{{1, 2}, {2, 1}, {1, 1}, {2, 2}});

  std::istringstream short_file("1 2\n2 1\n1 1\n");
  CHECK_THROWS_AS(MonomialOrder::parse_permutation(s, short_file), InputError);
  std::istringstream duplicate("1 2\n1 2\n1 1\n2 2\n");
  CHECK_THROWS_AS(MonomialOrder::parse_permutation(s, duplicate), InputError);
  std::istringstream out_of_range("1 2\n2 1\n1 1\n3 2\n");
  CHECK_THROWS_AS(MonomialOrder::parse_permutation(s, out_of_range), InputError);
  std::istringstream garbage("1 2\nx y\n1 1\n2 2\n");
  CHECK_THROWS_AS(MonomialOrder::parse_permutation(s, garbage), InputError);
  CHECK_THROWS_AS(MonomialOrder::from_selector(s, "lex"), InputError);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(MatrixShape(1, 3), InputError);
  CHECK_THROWS_AS(MatrixShape(4, 3), InputError);
  CHECK(MatrixShape(3, 4).variable_count() == 12);
}

TEST_CASE("S-polynomials of 2-minors reduce to zero") {
  const MatrixShape s22(2, 2);
  const auto r22 = verify_groebner_basis(MonomialOrder::rows(s22));
  CHECK(r22.ok);
  CHECK(r22.pair_count == 0);

  const MatrixShape s34(3, 4);
  const auto r34 = verify_groebner_basis(MonomialOrder::rows(s34), WorkerPool(2));
  CHECK(r34.ok);
  CHECK(r34.generator_count == 18);
  CHECK(r34.pair_count == 153);
  CHECK(verify_groebner_basis(MonomialOrder::diagonals(s34)).ok);
}

TEST_CASE("reduction detects a non-basis") {
  // lex-like order where x11 dominates: {x11 x22 - x12 x21} alone is fine, but
  // dropping a minor from a 2x3 basis must leave a nonzero remainder.
  const MatrixShape s(2, 3);
  const auto order = MonomialOrder::natural_row_major(s);
  auto minors = all_minors(s);
  std::vector<Polynomial> basis;
  for (std::size_t k = 0; k + 1 < minors.size(); ++k) basis.push_back(Polynomial::from_minor(&order, minors[k]));
  const Polynomial missing = Polynomial::from_minor(&order, minors.back());
  CHECK_FALSE(reduce(missing, basis).is_zero());
  CHECK(reduce(s_polynomial(basis[0], basis[0]), basis).is_zero());
}
