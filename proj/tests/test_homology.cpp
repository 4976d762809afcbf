#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "levelcomplex/betti.hpp"
#include "levelcomplex/error.hpp"
#include "levelcomplex/fixtures.hpp"
#include "levelcomplex/homology.hpp"
#include "levelcomplex/path_complex.hpp"
#include "support.hpp"

using namespace levelcomplex;

namespace {

const FieldSpec Q = FieldSpec::rationals();

/// Hochster's formula summed directly over every vertex subset.
BettiTable naive_betti(const SimplicialComplex& c, const FieldSpec& field) {
  BettiTable table;
  const int n = c.vertex_count();
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    const int j = std::popcount(w);
    const auto dims = reduced_homology_dims(induced(c, Face(w)), field);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int i = j - static_cast<int>(k);  // H̃_{k-1} contributes to β_{j-k, j}
      if (dims[k] != 0) table.add(i, j, dims[k]);
    }
  }
  return table;
}

}  // namespace

TEST_CASE("field parsing") {
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("32003").characteristic() == 32003);
  CHECK(to_string(FieldSpec::parse("2")) == "GF(2)");
  CHECK_THROWS_AS(FieldSpec::parse("4"), InputError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
}

TEST_CASE("sparse rank over Q and GF(p)") {
  SparseMatrix m;
  m.rows = 2;
  m.columns = {{{0, 2}, {1, 4}}, {{0, 1}, {1, 2}}};
  CHECK(matrix_rank(m, Q) == 1);
  CHECK(matrix_rank(m, FieldSpec::prime(3)) == 1);
  m.columns = {{{0, 2}, {1, 0}}, {{0, 0}, {1, 3}}};
  CHECK(matrix_rank(m, Q) == 2);
  CHECK(matrix_rank(m, FieldSpec::prime(3)) == 1);  // 3 vanishes in GF(3)
}

TEST_CASE("reduced homology of small complexes") {
  const auto d33 = path_complex(MatrixShape(3, 3));
  CHECK(reduced_homology_dims(d33, Q) == std::vector<long long>{0, 0, 1});
  const auto d34 = path_complex(MatrixShape(3, 4));
  for (long long d : reduced_homology_dims(d34, Q)) CHECK(d == 0);
  const SimplicialComplex empty({}, {Face()});
  CHECK(reduced_homology_dims(empty, Q) == std::vector<long long>{1});
  CHECK(reduced_homology_dims(SimplicialComplex(), Q).empty());
}

TEST_CASE("balls and spheres") {
  for (const auto& s : shapes_up_to(6)) {
    if (s.m() == s.n() ? s.n() > 4 : (s.m() > 4 || s.n() > 6)) continue;
    CAPTURE(to_string(s));
    const auto dims = reduced_homology_dims(path_complex(s), Q);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int degree = static_cast<int>(k) - 1;
      CHECK(dims[k] == (s.m() == s.n() && degree == s.n() - 2 ? 1 : 0));
    }
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  const auto delta = path_complex(MatrixShape(4, 5));
  const auto levels = delta.faces_by_size();
  for (std::size_t k = 2; k < levels.size(); ++k) {
    const SparseMatrix outer = boundary_matrix(levels[k], levels[k - 1]);
    const SparseMatrix inner = boundary_matrix(levels[k - 1], levels[k - 2]);
    // compose: column c of inner * outer
    for (const auto& col : outer.columns) {
      std::map<std::uint32_t, long long> acc;
      for (const auto& [row, val] : col) {
        for (const auto& [r2, v2] : inner.columns[row]) acc[r2] += static_cast<long long>(val) * v2;
      }
      for (const auto& [r, v] : acc) CHECK(v == 0);
    }
  }
}

TEST_CASE("relative homology") {
  const MatrixShape s(3, 4);
  const auto delta = path_complex(s);
  const Face centre = delta.face_of(std::vector<Cell>{{3, 4}});
  const Face corner = delta.face_of(std::vector<Cell>{{1, 2}});
  CHECK(relative_homology_dim(delta, contrastar(delta, centre), 2, Q) == 1);
  CHECK(relative_homology_dim(delta, contrastar(delta, corner), 2, Q) == 0);
  for (Face f : delta.facets()) CHECK(relative_homology_dim(delta, contrastar(delta, f), 2, Q) == 1);
  CHECK_THROWS_AS(relative_homology_dim(contrastar(delta, centre), delta, 1, Q), InputError);
}

TEST_CASE("link homology equals relative homology of the contrastar") {
  for (const auto& s : shapes_up_to(5)) {
    CAPTURE(to_string(s));
    const auto delta = path_complex(s);
    for (Face sigma : delta.faces()) {
      const auto lk = link(delta, sigma);
      const auto cost = contrastar(delta, sigma);
      for (int i = -1; i <= delta.dim() + 1; ++i) {
        CHECK(reduced_homology_dim(lk, i - sigma.size(), Q) == relative_homology_dim(delta, cost, i, Q));
      }
    }
  }
}

TEST_CASE("Hochster tables on small complexes") {
  const MatrixShape s34(3, 4);
  const auto oc = order_complex(MonomialOrder::rows(s34));
  const auto table = hochster_betti_table(oc.full, Q);
  CHECK(table.at(1, 2) == 18);
  CHECK(table.at(0, 0) == 1);
  CHECK(table == naive_betti(oc.reduced, Q));

  const MatrixShape s23(2, 3);
  const SimplicialComplex non_edge({{1, 2}, {2, 1}}, {Face(0b01), Face(0b10)});
  const auto single = hochster_betti_table(non_edge, Q);
  CHECK(single.at(1, 2) == 1);
  CHECK(single.entries().size() == 2);

  // a non-flag complex (hollow triangle) exercises the generic path
  const SimplicialComplex hollow({{1, 1}, {1, 2}, {1, 3}}, {Face(0b011), Face(0b110), Face(0b101)});
  CHECK(hochster_betti_table(hollow, Q) == naive_betti(hollow, Q));
  CHECK(hochster_betti_table(hollow, Q).at(1, 3) == 1);
}

TEST_CASE("Hochster sweep agrees with the naive sum for every built-in order") {
  for (const auto& s : {MatrixShape(3, 3), MatrixShape(3, 4), MatrixShape(2, 5)}) {
    for (const auto& order : {MonomialOrder::rows(s), MonomialOrder::diagonals(s),
                              MonomialOrder::natural_row_major(s)}) {
      const auto oc = order_complex(order);
      CHECK(hochster_betti_table(oc.full, Q) == naive_betti(oc.reduced, Q));
    }
  }
}

TEST_CASE("Hochster guard") {
  const auto oc = order_complex(MonomialOrder::rows(MatrixShape(4, 6)));
  HochsterOptions small;
  small.max_vertices = 10;
  CHECK_THROWS_AS(hochster_betti_table(oc.full, Q, WorkerPool{}, small), GuardExceeded);
}

TEST_CASE("(4,5) tables for the rows and natural orders match the reference tables") {
  const MatrixShape s(4, 5);
  const auto rows = hochster_betti_table(order_complex(MonomialOrder::rows(s)).full, Q);
  CHECK(rows == fixture("rows-4x5").entries);
  const auto natural =
      hochster_betti_table(order_complex(MonomialOrder::natural_row_major(s)).full, Q, WorkerPool(3));
  CHECK(natural == fixture("natural-4x5").entries);
}

TEST_CASE("thread count does not change the table") {
  const MatrixShape s(4, 5);
  const auto oc = order_complex(MonomialOrder::diagonals(s));
  const auto one = hochster_betti_table(oc.full, Q, WorkerPool(1));
  CHECK(one == hochster_betti_table(oc.full, Q, WorkerPool(4)));
  CHECK(one.render_text() == hochster_betti_table(oc.full, Q, WorkerPool(2)).render_text());
}

TEST_CASE("Betti table statistics and rendering") {
  const auto& t = fixture("I2-3x4").entries;
  CHECK(t.pdim() == 6);
  CHECK(t.reg() == 2);
  CHECK(t.top_degree(6) == 8);
  CHECK(t.alternating_sum(2) == -18);
  std::istringstream in(t.render_text());
  CHECK(BettiTable::parse_text(in) == t);
  CHECK(t.render_csv().starts_with("i,j,beta\n0,0,1\n"));
  std::istringstream bad("0 1\n0: 1\n");
  CHECK_THROWS_AS(BettiTable::parse_text(bad), InputError);
}

TEST_CASE("GF(2) agrees with Q on the (3,4) tables") {
  const auto oc = order_complex(MonomialOrder::rows(MatrixShape(3, 4)));
  CHECK(hochster_betti_table(oc.full, Q) == hochster_betti_table(oc.full, FieldSpec::prime(2)));
}
