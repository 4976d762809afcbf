// Acceptance run: one PASS/FAIL line per criterion, with timings.
//
//   acceptance [--threads N] [--expect-fail 7,...]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), so a documented failure stays visible in the output
// without hiding any new one.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "levelcomplex/betti.hpp"
#include "levelcomplex/canonical.hpp"
#include "levelcomplex/cli.hpp"
#include "levelcomplex/fixtures.hpp"
#include "levelcomplex/groebner.hpp"
#include "levelcomplex/homology.hpp"
#include "levelcomplex/path_complex.hpp"
#include "levelcomplex/quasimanifold.hpp"
#include "levelcomplex/shelling.hpp"

using namespace levelcomplex;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::vector<MatrixShape> shapes_up_to(int top) {
  std::vector<MatrixShape> out;
  for (int m = 2; m <= top; ++m) {
    for (int n = m; n <= top; ++n) out.emplace_back(m, n);
  }
  return out;
}

std::set<std::vector<Cell>> facet_sets(const SimplicialComplex& c) {
  std::set<std::vector<Cell>> out;
  for (Face f : c.facets()) out.insert(c.cells_of(f));
  return out;
}

std::vector<MonomialOrder> builtin_orders(const MatrixShape& s) {
  return {MonomialOrder::rows(s), MonomialOrder::natural_row_major(s),
          MonomialOrder::diagonals(s)};
}

// 1 -----------------------------------------------------------------------
Verdict facet_reproduction(const WorkerPool&) {
  Verdict v;
  std::ostringstream out, err;
  const int code = run_cli({"facets", "--m", "3", "--n", "4", "--order", "rows"}, out, err);
  v.require(code == 0, "facets exited with " + std::to_string(code));
  const std::set<std::vector<Cell>> reference = {
      {{3, 1}, {3, 2}, {3, 4}}, {{2, 1}, {3, 1}, {3, 4}}, {{2, 1}, {2, 4}, {3, 4}},
      {{2, 1}, {2, 3}, {2, 4}}, {{1, 2}, {3, 2}, {3, 4}}, {{1, 2}, {1, 4}, {3, 4}},
      {{1, 4}, {2, 4}, {3, 4}}, {{1, 3}, {2, 3}, {2, 4}}, {{1, 3}, {1, 4}, {2, 4}},
      {{1, 2}, {1, 3}, {1, 4}}};
  std::set<std::vector<Cell>> got;
  if (code == 0) {
    const auto doc = nlohmann::json::parse(out.str());
    for (const auto& facet : doc["facets"]) {
      std::vector<Cell> cells;
      for (const auto& c : facet) cells.push_back({c[0].get<int>(), c[1].get<int>()});
      std::sort(cells.begin(), cells.end());
      got.insert(cells);
    }
  }
  v.require(got == reference, "facet set differs from the reference list");
  v.note(std::to_string(got.size()) + " facets");
  return v;
}

// 2 -----------------------------------------------------------------------
Verdict dual_construction(const WorkerPool&) {
  Verdict v;
  int shapes = 0;
  for (const auto& s : shapes_up_to(6)) {
    const auto paths = path_complex(s);
    const auto oc = order_complex(MonomialOrder::rows(s));
    v.require(facet_sets(paths) == facet_sets(oc.reduced), "facets differ at " + to_string(s));
    long long count = 0;
    for (int k = 1; k <= s.m(); ++k) count += binomial(s.m(), k) * binomial(s.n() - 2, k - 1);
    v.require(static_cast<long long>(paths.facets().size()) == count, "facet count at " + to_string(s));
    ++shapes;
  }
  v.note(std::to_string(shapes) + " shapes");
  return v;
}

// 3 -----------------------------------------------------------------------
Verdict groebner(const WorkerPool& pool) {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& s : {MatrixShape(2, 2), MatrixShape(2, 3), MatrixShape(3, 3), MatrixShape(3, 4)}) {
    for (const auto& order : builtin_orders(s)) {
      const auto r = verify_groebner_basis(order, pool);
      v.require(r.ok, to_string(order.kind()) + " at " + to_string(s));
      pairs += r.pair_count;
    }
  }
  v.note(std::to_string(pairs) + " S-pairs reduced");
  return v;
}

// 4 -----------------------------------------------------------------------
Verdict quasimanifold_reisner(const WorkerPool&) {
  Verdict v;
  for (const auto& s : shapes_up_to(5)) {
    const auto delta = path_complex(s);
    for (const auto& field : {Q, FieldSpec::prime(2)}) {
      v.require(is_quasimanifold(delta, field).ok, "quasimanifold " + to_string(s) + " over " + to_string(field));
      v.require(reisner_check(delta, field).cohen_macaulay, "Reisner " + to_string(s) + " over " + to_string(field));
    }
  }
  return v;
}

// 5 -----------------------------------------------------------------------
Verdict canonical_generators(const WorkerPool& pool) {
  Verdict v;
  for (const auto& s : {MatrixShape(2, 3), MatrixShape(2, 4), MatrixShape(3, 4), MatrixShape(3, 5),
                        MatrixShape(4, 5)}) {
    const auto oc = order_complex(MonomialOrder::rows(s));
    const auto r = canonical_report(oc.reduced, static_cast<int>(oc.cone.size()), Q, 0, pool);
    std::set<Face> c;
    for (const auto& cells : c_set(s)) c.insert(oc.reduced.face_of(cells));
    const std::set<Face> g(r.minimal_generators.begin(), r.minimal_generators.end());
    v.require(g == c, "G != C at " + to_string(s));
    v.require(static_cast<long long>(g.size()) == binomial(s.n() - 1, s.m() - 1), "|G| at " + to_string(s));
    for (int d : r.generator_degrees) v.require(d == s.n() - s.m(), "generator degree at " + to_string(s));
    v.require(r.is_level, "not level at " + to_string(s));
  }
  for (const auto& s : {MatrixShape(2, 2), MatrixShape(3, 3)}) {
    const auto r = level_report(MonomialOrder::rows(s), Q, pool);
    v.require(r.cm_type == 1 && r.is_gorenstein, "not Gorenstein at " + to_string(s));
  }
  return v;
}

// 6 -----------------------------------------------------------------------
Verdict graded_dimensions(const WorkerPool& pool) {
  Verdict v;
  const MatrixShape s(3, 4);
  const auto delta = path_complex(s);
  const auto support = canonical_support(delta, Q, pool);
  const auto comp = canonical_graded_dims(support, 4, MultiplicityRule::Compositions);
  const auto power = canonical_graded_dims(support, 4, MultiplicityRule::Powers);
  const auto dual = hs_duality(hs_from_f_vector(f_vector(delta)), 3, 4);
  const long long want[] = {0, 3, 15, 37};
  for (int i = 1; i <= 3; ++i) {
    v.require(comp.at(i) == want[i] && power.at(i) == want[i] && dual.at(i) == want[i],
              "degree " + std::to_string(i));
  }
  // exponent vectors of total degree 4 whose support is a weighted face
  long long enumerated = 0;
  for (const auto& [face, weight] : support) {
    const int k = face.size();
    std::function<long long(int, int)> count = [&](int slots, int left) -> long long {
      if (slots == 0) return left == 0;
      long long sum = 0;
      for (int e = 1; e <= left; ++e) sum += count(slots - 1, left - e);
      return sum;
    };
    enumerated += weight * count(k, 4);
  }
  v.require(comp.at(4) == enumerated && enumerated == dual.at(4), "degree 4 routes disagree");
  v.note("degree 4: compositions " + std::to_string(comp.at(4)) + ", enumeration " +
         std::to_string(enumerated) + ", duality " + std::to_string(dual.at(4)));
  v.require(power.at(4) == 81, "power rule at degree 4");
  std::ostringstream out, err;
  run_cli({"canonical", "--m", "3", "--n", "4"}, out, err);
  const auto report = nlohmann::json::parse(out.str());
  bool flagged = false;
  for (const auto& d : report["discrepancies"]) {
    flagged = flagged || (d["degree"] == 4 && d["power_rule"] == 81 && d["compositions"] == comp.at(4));
  }
  v.require(flagged, "report does not flag the degree-4 discrepancy");
  v.note("power rule value 81 flagged as discrepancy");

  std::map<int, long long> gprime;
  for (const auto& [face, weight] : support) gprime[face.size()] += weight;
  const long long want_g[] = {0, 3, 12, 10};
  for (int i = 1; i <= 3; ++i) {
    v.require(gprime_closed_formula(s, i) == want_g[i] && gprime[i] == want_g[i],
              "|G'_" + std::to_string(i) + "|");
  }
  return v;
}

// 7 -----------------------------------------------------------------------
Verdict betti_tables(const WorkerPool& pool) {
  Verdict v;
  const MatrixShape s(4, 5);
  const std::pair<MonomialOrder, const char*> cases[] = {
      {MonomialOrder::rows(s), "rows-4x5"},
      {MonomialOrder::natural_row_major(s), "natural-4x5"},
      {MonomialOrder::diagonals(s), "diag-4x5"}};
  const auto& det = fixture("I2-4x5").entries;
  for (const auto& [order, name] : cases) {
    const auto table = hochster_betti_table(order_complex(order).full, Q, pool);
    const auto& fx = fixture(name);
    const auto diffs = betti_differences(table, fx.entries);
    v.require(diffs.empty(), std::string(name) + " differs in " + std::to_string(diffs.size()) + " entries");
    for (const auto& d : diffs) {
      std::string why;
      const auto printed_sums = antidiagonal_violations(fx.entries, det);
      if (std::find(printed_sums.begin(), printed_sums.end(), d.j) != printed_sums.end() &&
          antidiagonal_violations(table, det).empty()) {
        why = "; the printed value breaks the equal anti-diagonal sums with S/I_2 at degree " +
              std::to_string(d.j) + ", the computed value satisfies them";
      }
      v.note("  " + std::string(name) + " beta_{" + std::to_string(d.i) + "," + std::to_string(d.j) +
             "}: computed " + std::to_string(d.computed) + ", printed " + std::to_string(d.expected) + why);
    }
  }
  return v;
}

// 8 -----------------------------------------------------------------------
Verdict fact_suite(const WorkerPool& pool) {
  Verdict v;
  const MatrixShape s(4, 5);
  const auto& det = fixture("I2-4x5").entries;
  for (const auto& order : builtin_orders(s)) {
    const std::string name = to_string(order.kind());
    const auto t = hochster_betti_table(order_complex(order).full, Q, pool);
    v.require(dominance_violations(t, det).empty(), name + ": dominance");
    v.require(antidiagonal_violations(t, det).empty(), name + ": anti-diagonal sums");
    v.require(diagonal_violations(t).empty(), name + ": beta_{k,k}");
    v.require(top_degree_violations(t, 12).empty(), name + ": t_i increasing");
    v.require(t.reg() == 3, name + ": reg");
    v.require(t.pdim() == 12, name + ": pdim");
  }
  for (const auto& shape : {MatrixShape(3, 4), MatrixShape(4, 5)}) {
    const int h = (shape.m() - 1) * (shape.n() - 1);
    const auto t = hochster_betti_table(order_complex(MonomialOrder::natural_row_major(shape)).full, Q, pool);
    const long long b = t.at(h, h + shape.m() - 1);
    v.require(b != 0, "natural order at " + to_string(shape) + ": beta_{h,h+m-1} = 0");
    v.note("natural " + to_string(shape) + ": beta_{" + std::to_string(h) + "," +
           std::to_string(h + shape.m() - 1) + "} = " + std::to_string(b));
  }
  return v;
}

// 9 -----------------------------------------------------------------------
Verdict homology(const WorkerPool&) {
  Verdict v;
  for (const auto& s : shapes_up_to(6)) {
    const bool in_range = s.m() == s.n() ? s.n() <= 4 : (s.m() <= 4 && s.n() <= 6);
    if (!in_range) continue;
    const auto dims = reduced_homology_dims(path_complex(s), Q);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int degree = static_cast<int>(k) - 1;
      const long long want = (s.m() == s.n() && degree == s.n() - 2) ? 1 : 0;
      v.require(dims[k] == want, "H~_" + std::to_string(degree) + " of " + to_string(s));
    }
  }
  auto identity = [&](const SimplicialComplex& delta, Face sigma) {
    const auto lk = link(delta, sigma);
    const auto cost = contrastar(delta, sigma);
    for (int i = -1; i <= delta.dim() + 1; ++i) {
      if (reduced_homology_dim(lk, i - sigma.size(), Q) != relative_homology_dim(delta, cost, i, Q)) return false;
    }
    return true;
  };
  const auto d34 = path_complex(MatrixShape(3, 4));
  int faces = 0;
  for (Face f : d34.faces()) {
    v.require(identity(d34, f), "link/contrastar identity at a face of (3,4)");
    ++faces;
  }
  const auto d45 = path_complex(MatrixShape(4, 5));
  const auto all = d45.faces();
  std::mt19937 rng(2024);
  for (int k = 0; k < 200; ++k) {
    v.require(identity(d45, all[rng() % all.size()]), "link/contrastar identity at a face of (4,5)");
  }
  v.note(std::to_string(faces) + " faces of (3,4), 200 sampled faces of (4,5)");
  return v;
}

// 10 ----------------------------------------------------------------------
Verdict shelling(const WorkerPool&) {
  Verdict v;
  for (const auto& s : shapes_up_to(6)) {
    const auto delta = path_complex(s);
    const auto order = shelling_order(s);
    const auto r = verify_shelling(delta, order);
    v.require(r.ok_forward && r.ok_backward, "two-way shelling at " + to_string(s));
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto part = vertex_partition(delta.cells_of(order[k]), s);
      v.require(r.restriction_forward[k] == delta.face_of(part.minus), "F- restriction at " + to_string(s));
      v.require(r.restriction_backward[k] == delta.face_of(part.plus), "F+ restriction at " + to_string(s));
    }
    if (r.ok_forward) {
      v.require(h_vector_from_shelling(r) == h_vector_from_f(f_vector(delta), delta.dim() + 1),
                "h-vector at " + to_string(s));
    }
  }
  const MatrixShape s(3, 4);
  const auto delta = path_complex(s);
  const auto h = h_vector_from_shelling(verify_shelling(delta, shelling_order(s)));
  const std::vector<long long> want = {1, 6, 3, 0};
  v.require(h == want && h_vector_from_f(f_vector(delta), 3) == want, "(3,4) h-vector");
  return v;
}

// 11 ----------------------------------------------------------------------
Verdict monotonicity(const WorkerPool&) {
  Verdict v;
  const auto delta = path_complex(MatrixShape(4, 5));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const Face facet = delta.facets()[rng() % delta.facets().size()];
    Face tau, sigma;
    facet.for_each_vertex([&](int x) {
      if (rng() % 2) tau = tau.with(x);
    });
    tau.for_each_vertex([&](int x) {
      if (rng() % 2) sigma = sigma.with(x);
    });
    v.require(d_sigma(delta, sigma, Q) <= d_sigma(delta, tau, Q), "d_sigma > d_tau on a chain");
  }
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  Verdict (*run)(const WorkerPool&);
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int threads = 1;
  std::vector<int> expect_fail;
  app.add_option("--threads", threads)->check(CLI::PositiveNumber);
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const WorkerPool pool(static_cast<std::size_t>(threads));

  const Criterion criteria[] = {
      {1, "facet reproduction at (3,4)", 1, facet_reproduction},
      {2, "path facets equal Stanley-Reisner facets up to (6,6)", 30, dual_construction},
      {3, "Groebner verification for three orders", 10, groebner},
      {4, "quasimanifold and Reisner up to (5,5) over Q, GF(2)", 120, quasimanifold_reisner},
      {5, "canonical generators G = C; Gorenstein for m = n", 300, canonical_generators},
      {6, "graded dimensions of the canonical module at (3,4)", 60, graded_dimensions},
      {7, "(4,5) Betti tables equal the reference tables", 900, betti_tables},
      {8, "Betti table properties and non-levelness of the natural order", 900, fact_suite},
      {9, "homology of the path complex; link/contrastar identity", 120, homology},
      {10, "two-way shelling up to (6,6)", 60, shelling},
      {11, "canonical weights grow along 1000 face chains", 120, monotonicity},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run(pool);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs <= c.budget_seconds, "over the time budget");
    if (!v.ok) failed.insert(c.id);
    std::printf("%s criterion %2d: %s (%.2fs, budget %.0fs)\n", v.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds);
    for (const auto& n : v.notes) std::printf("       %s\n", n.c_str());
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu of %zu criteria pass", std::size(criteria) - failed.size(), std::size(criteria));
  if (!expected.empty()) {
    std::printf("; expected failures:");
    for (int id : expected) std::printf(" %d", id);
  }
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
