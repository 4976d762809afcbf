#include "levelcomplex/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "levelcomplex/betti.hpp"
#include "levelcomplex/canonical.hpp"
#include "levelcomplex/error.hpp"
#include "levelcomplex/fixtures.hpp"
#include "levelcomplex/groebner.hpp"
#include "levelcomplex/homology.hpp"
#include "levelcomplex/path_complex.hpp"
#include "levelcomplex/quasimanifold.hpp"
#include "levelcomplex/shelling.hpp"

namespace levelcomplex {

namespace {

using Json = nlohmann::ordered_json;

/// Hochster sweeps above this many vertices need --force on the command line.
constexpr int kCliVertexGuard = 20;

struct RunConfig {
  int m = 3;
  int n = 4;
  std::string order = "rows";
  std::string field = "Q";
  int threads = 1;
  std::string format = "json";
  std::string output;
  bool force = false;
};

/// A command's result: the document to print and whether a check failed.
struct Outcome {
  Json json;
  std::string text;
  std::string csv;
  bool finding = false;
};

Json cell_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(cell_json(c));
  return out;
}

Json face_json(const SimplicialComplex& complex, Face face) {
  return cells_json(complex.cells_of(face));
}

Json dims_json(const GradedDims& dims) {
  Json out = Json::object();
  for (const auto& [degree, value] : dims) out[std::to_string(degree)] = value;
  return out;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out = "{";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += ",";
    out += to_string(cells[k]);
  }
  return out + "}";
}

std::string dims_text(const GradedDims& dims) {
  std::string out;
  for (const auto& [degree, value] : dims) {
    if (!out.empty()) out += " ";
    out += std::to_string(degree) + ":" + std::to_string(value);
  }
  return out;
}

Json header(const RunConfig& cfg) {
  return Json{{"m", cfg.m}, {"n", cfg.n}, {"order", cfg.order}};
}

struct Context {
  RunConfig cfg;
  MatrixShape shape;
  MonomialOrder order;
  FieldSpec field;
  WorkerPool pool;

  explicit Context(const RunConfig& c)
      : cfg(c),
        shape(c.m, c.n),
        order(resolve_order(shape, c.order)),
        field(FieldSpec::parse(c.field)),
        pool(static_cast<std::size_t>(c.threads)) {}

  bool is_rows_order() const { return order.kind() == OrderKind::Rows; }
};

std::vector<std::vector<Cell>> sorted_facet_cells(const SimplicialComplex& complex) {
  std::vector<std::vector<Cell>> out;
  for (Face f : complex.facets()) out.push_back(complex.cells_of(f));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- facets

Outcome cmd_facets(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  const auto facets = sorted_facet_cells(oc.reduced);
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["cone_points"] = cells_json(oc.cone);
  o.json["facet_count"] = facets.size();
  Json list = Json::array();
  for (const auto& f : facets) {
    list.push_back(cells_json(f));
    o.text += cells_text(f) + "\n";
  }
  o.json["facets"] = list;
  return o;
}

// ---------------------------------------------------------------- complex

Outcome cmd_complex(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  const SimplicialComplex& delta = oc.reduced;
  Outcome o;
  o.json = Json{{"m", ctx.cfg.m}, {"n", ctx.cfg.n}};
  o.json["order"] = ctx.cfg.order;
  o.json["vertices"] = cells_json(delta.vertices());
  Json facets = Json::array();
  for (const auto& cells : sorted_facet_cells(delta)) {
    Json idx = Json::array();
    for (const Cell& c : cells) idx.push_back(delta.index_of(c));
    facets.push_back(idx);
  }
  o.json["facets"] = facets;
  o.json["cone_points"] = cells_json(oc.cone);
  o.json["dim"] = delta.dim();
  o.json["pure"] = delta.is_pure();
  o.json["f_vector"] = f_vector(delta);

  std::ostringstream t;
  t << "shape " << to_string(ctx.shape) << ", order " << ctx.cfg.order << "\n";
  t << "vertices " << cells_text(delta.vertices()) << "\n";
  t << "cone points " << cells_text(oc.cone) << "\n";
  t << "dim " << delta.dim() << ", " << delta.facets().size() << " facets\n";
  for (const auto& cells : sorted_facet_cells(delta)) t << "  " << cells_text(cells) << "\n";
  o.text = t.str();
  return o;
}

// ---------------------------------------------------------------- gb-verify

Outcome cmd_gb_verify(const Context& ctx) {
  const GroebnerReport r = verify_groebner_basis(ctx.order, ctx.pool);
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["ok"] = r.ok;
  o.json["generators"] = r.generator_count;
  o.json["pairs"] = r.pair_count;
  Json failed = Json::array();
  for (const auto& [a, b] : r.failed_pairs) failed.push_back(Json::array({a, b}));
  o.json["failed_pairs"] = failed;
  o.text = std::string(r.ok ? "ok" : "FAILED") + ": " + std::to_string(r.pair_count) +
           " S-pairs over " + std::to_string(r.generator_count) + " minors, " +
           std::to_string(r.failed_pairs.size()) + " with nonzero remainder\n";
  o.finding = !r.ok;
  return o;
}

// ---------------------------------------------------------------- betti

Json betti_entries_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", value}});
  }
  return entries;
}

Json comparison_json(const FixtureComparison& c, const std::string& name) {
  Json out{{"fixture", name}, {"equal", c.differences.empty()}};
  Json diffs = Json::array();
  for (const auto& d : c.differences) {
    diffs.push_back(Json{{"i", d.i}, {"j", d.j}, {"computed", d.computed}, {"fixture", d.expected}});
  }
  out["differences"] = diffs;
  out["facts_checked"] = c.facts_checked;
  out["dominance_ok"] = c.dominance.empty();
  out["antidiagonal_ok"] = c.antidiagonal.empty();
  out["antidiagonal_violations"] = c.antidiagonal;
  return out;
}

std::string comparison_text(const FixtureComparison& c, const std::string& name) {
  std::ostringstream t;
  t << "fixture " << name << ": " << (c.differences.empty() ? "equal" : "differs") << "\n";
  for (const auto& d : c.differences) {
    t << "  beta_{" << d.i << "," << d.j << "} computed " << d.computed << ", fixture "
      << d.expected << "\n";
  }
  if (c.facts_checked) {
    t << "  dominance over S/I_2: " << (c.dominance.empty() ? "holds" : "fails") << "\n";
    t << "  anti-diagonal sums vs S/I_2: " << (c.antidiagonal.empty() ? "equal" : "differ")
      << "\n";
  }
  return t.str();
}

std::string order_selector_key(const std::string& selector) {
  if (!selector.starts_with("perm:")) return selector;
  return "perm:" + std::filesystem::path(selector.substr(5)).filename().string();
}

const FixtureTable* fixture_for(const Context& ctx) {
  const std::string key = order_selector_key(ctx.cfg.order);
  for (const auto& f : fixtures()) {
    if (!f.order.empty() && f.shape == ctx.shape && f.order == key) return &f;
  }
  return nullptr;
}

BettiTable compute_betti(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  HochsterOptions options;
  options.max_vertices = kCliVertexGuard;
  options.force = ctx.cfg.force;
  return hochster_betti_table(oc.full, ctx.field, ctx.pool, options);
}

Outcome cmd_betti(const Context& ctx, const std::string& fixture_name) {
  const BettiTable table = compute_betti(ctx);
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["field"] = to_string(ctx.field);
  o.json["pdim"] = table.pdim();
  o.json["reg"] = table.reg();
  o.json["entries"] = betti_entries_json(table);
  o.text = table.render_text();
  o.csv = table.render_csv();

  const FixtureTable* fx = nullptr;
  if (fixture_name == "auto") {
    fx = fixture_for(ctx);
  } else if (!fixture_name.empty()) {
    fx = &fixture(fixture_name);
  }
  if (fx != nullptr) {
    const FixtureComparison cmp = compare_with_fixture(table, ctx.shape, *fx);
    o.json["comparison"] = comparison_json(cmp, fx->name);
    o.text += comparison_text(cmp, fx->name);
    o.finding = !cmp.ok();
  }
  return o;
}

// ---------------------------------------------------------------- canonical / level

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return out;
}

std::string checks_text(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += std::string(c.ok ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  }
  return out;
}

bool any_failed(const std::vector<Check>& checks) {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
}

/// The statements proved for the rows order, checked against the report.
std::vector<Check> canonical_checks(const Context& ctx, const OrderComplex& oc,
                                    const CanonicalReport& r) {
  std::vector<Check> checks;
  for (const auto& [degree, value] : r.omega_dims) {
    if (r.omega_dims_duality.at(degree) != value) {
      checks.push_back({"composition rule matches Hilbert-series duality", false,
                        "degree " + std::to_string(degree)});
      break;
    }
  }
  if (checks.empty()) checks.push_back({"composition rule matches Hilbert-series duality", true, ""});
  if (!ctx.is_rows_order()) return checks;

  const int m = ctx.shape.m();
  const int n = ctx.shape.n();
  checks.push_back({"Cohen-Macaulay (Reisner)", r.cohen_macaulay, ""});
  std::set<Face> expected;
  for (const auto& cells : c_set(ctx.shape)) expected.insert(oc.reduced.face_of(cells));
  const std::set<Face> got(r.minimal_generators.begin(), r.minimal_generators.end());
  checks.push_back({"G equals C", got == expected,
                    std::to_string(got.size()) + " generators, |C| = " + std::to_string(expected.size())});
  const long long want_type = binomial(n - 1, m - 1);
  checks.push_back({"type equals C(n-1,m-1)", r.cm_type == want_type,
                    std::to_string(r.cm_type) + " vs " + std::to_string(want_type)});
  checks.push_back({"a-invariant equals -(n-m)", r.a_invariant == -(n - m),
                    std::to_string(r.a_invariant)});
  checks.push_back({"ambient a-invariant equals -n", r.ambient_a_invariant == -n,
                    std::to_string(r.ambient_a_invariant)});
  checks.push_back({"level", r.is_level, ""});
  return checks;
}

Json canonical_core_json(const SimplicialComplex& delta, const CanonicalReport& r) {
  Json gens = Json::array();
  for (Face g : r.minimal_generators) gens.push_back(face_json(delta, g));
  Json out;
  out["generators"] = gens;
  out["degrees"] = r.generator_degrees;
  out["type"] = r.cm_type;
  out["a_invariant"] = r.a_invariant;
  out["ambient_a_invariant"] = r.ambient_a_invariant;
  out["level"] = r.is_level;
  out["gorenstein"] = r.is_gorenstein;
  out["cohen_macaulay"] = r.cohen_macaulay;
  out["omega_dims"] = dims_json(r.omega_dims);
  out["omega_dims_power_rule"] = dims_json(r.omega_dims_power_rule);
  return out;
}

Json discrepancies_json(const CanonicalReport& r) {
  Json out = Json::array();
  for (const auto& [degree, value] : r.omega_dims) {
    const long long power = r.omega_dims_power_rule.at(degree);
    if (power != value) {
      out.push_back(Json{{"degree", degree}, {"compositions", value}, {"power_rule", power}});
    }
  }
  return out;
}

constexpr const char* kRuleNote =
    "omega_dims counts exponent vectors with support exactly a face of G' (sum of "
    "C(i-1,k-1)|G'_k|) and agrees with Hilbert-series duality; omega_dims_power_rule uses "
    "sum of k^(i-k)|G'_k| (per-face power rule); the two rules differ once i >= k + 2 for "
    "some k >= 2 with G'_k nonempty";

std::string canonical_text(const Context& ctx, const SimplicialComplex& delta,
                           const CanonicalReport& r) {
  std::ostringstream t;
  t << "shape " << to_string(ctx.shape) << ", order " << ctx.cfg.order << ", field "
    << to_string(ctx.field) << "\n";
  if (!r.cohen_macaulay) {
    t << "not Cohen-Macaulay over this field; canonical-module data not applicable\n";
    return t.str();
  }
  t << "minimal generators (" << r.minimal_generators.size() << "):";
  for (Face g : r.minimal_generators) t << " " << cells_text(delta.cells_of(g));
  t << "\ntype " << r.cm_type << (r.is_gorenstein ? " (Gorenstein)" : "") << ", "
    << (r.is_level ? "level" : "not level") << "\n";
  t << "a-invariant " << r.a_invariant << " (ambient a(S/I) = " << r.ambient_a_invariant << ")\n";
  t << "omega dims (compositions): " << dims_text(r.omega_dims) << "\n";
  t << "omega dims (power rule):   " << dims_text(r.omega_dims_power_rule) << "\n";
  return t.str();
}

Outcome cmd_level(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  const CanonicalReport r = canonical_report(oc.reduced, static_cast<int>(oc.cone.size()),
                                             ctx.field, 2 * ctx.shape.n(), ctx.pool);
  const std::vector<Check> checks = canonical_checks(ctx, oc, r);
  Outcome o;
  o.json = canonical_core_json(oc.reduced, r);
  o.json["checks"] = checks_json(checks);
  o.text = canonical_text(ctx, oc.reduced, r) + checks_text(checks);
  o.finding = any_failed(checks);
  return o;
}

Outcome cmd_canonical(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  const SimplicialComplex& delta = oc.reduced;
  const int max_degree = 2 * ctx.shape.n();
  const CanonicalReport r = canonical_report(delta, static_cast<int>(oc.cone.size()), ctx.field,
                                             max_degree, ctx.pool);
  const auto support = canonical_support(delta, ctx.field, ctx.pool);
  std::map<int, long long> gprime;
  for (const auto& [face, w] : support) gprime[face.size()] += w;

  std::vector<Check> checks = canonical_checks(ctx, oc, r);
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["field"] = to_string(ctx.field);
  o.json["quasimanifold"] = r.quasimanifold;
  o.json.update(canonical_core_json(delta, r));
  o.json["omega_dims_duality"] = dims_json(r.omega_dims_duality);
  Json gp = Json::object();
  for (const auto& [k, v] : gprime) gp[std::to_string(k)] = v;
  o.json["gprime_counts"] = gp;
  std::string text_gprime = "|G'_i|:";
  for (const auto& [k, v] : gprime) text_gprime += " " + std::to_string(k) + ":" + std::to_string(v);
  if (ctx.is_rows_order()) {
    Json formula = Json::object();
    bool match = true;
    for (int i = 1; i <= ctx.shape.n() - 1; ++i) {
      const long long f = gprime_closed_formula(ctx.shape, i);
      formula[std::to_string(i)] = f;
      const auto it = gprime.find(i);
      if ((it == gprime.end() ? 0 : it->second) != f) match = false;
    }
    o.json["gprime_formula"] = formula;
    checks.push_back({"closed |G'_i| formula matches enumeration", match, ""});
  }
  o.json["discrepancies"] = discrepancies_json(r);
  o.json["note"] = kRuleNote;
  o.json["checks"] = checks_json(checks);
  o.text = canonical_text(ctx, delta, r) + "omega dims (duality):      " +
           dims_text(r.omega_dims_duality) + "\n" + text_gprime + "\n" + checks_text(checks);
  if (!discrepancies_json(r).empty()) o.text += std::string("note: ") + kRuleNote + "\n";
  o.finding = any_failed(checks);
  return o;
}

// ---------------------------------------------------------------- hilbert

Outcome cmd_hilbert(const Context& ctx) {
  const OrderComplex oc = order_complex(ctx.order);
  const auto f = f_vector(oc.reduced);
  const int d = oc.reduced.dim() + 1;
  const HilbertSeries hs = hs_from_f_vector(f);
  const GradedDims omega = hs_duality(hs, d, 2 * ctx.shape.n());
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["f_vector"] = f;
  o.json["h_vector"] = h_vector_from_f(f, d);
  o.json["numerator"] = hs.numerator;
  o.json["denominator_power"] = hs.denominator_power;
  o.json["series"] = to_string(hs);
  o.json["omega_dims_duality"] = dims_json(omega);
  std::ostringstream t;
  t << "HS(t) = " << to_string(hs) << "\n";
  t << "f-vector:";
  for (auto x : f) t << " " << x;
  t << "\nomega dims (duality): " << dims_text(omega) << "\n";
  o.text = t.str();
  return o;
}

// ---------------------------------------------------------------- shelling

Outcome cmd_shelling(const Context& ctx, const std::string& direction) {
  if (!ctx.is_rows_order()) throw InputError("the facet shelling order is defined for --order rows only");
  const SimplicialComplex delta = path_complex(ctx.shape);
  const std::vector<Face> order = shelling_order(ctx.shape);
  const ShellingReport r = verify_shelling(delta, order);
  const bool intersections = intersection_partition_check(delta, ctx.shape);
  const auto h_f = h_vector_from_f(f_vector(delta), delta.dim() + 1);
  const auto h_s = r.ok_forward ? h_vector_from_shelling(r) : std::vector<long long>{};

  const bool want_fwd = direction != "backward";
  const bool want_bwd = direction != "forward";
  bool partition_ok = true;

  Outcome o;
  o.json = header(ctx.cfg);
  o.json["direction"] = direction;
  Json steps = Json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto cells = delta.cells_of(order[k]);
    const FacetPartition part = vertex_partition(cells, ctx.shape);
    Json step{{"facet", cells_json(cells)}};
    Face minus = delta.face_of(part.minus);
    Face plus = delta.face_of(part.plus);
    if (want_fwd) {
      step["restriction_forward"] = face_json(delta, r.restriction_forward[k]);
      step["minus"] = cells_json(part.minus);
      partition_ok = partition_ok && r.restriction_forward[k] == minus;
    }
    if (want_bwd) {
      step["restriction_backward"] = face_json(delta, r.restriction_backward[k]);
      step["plus"] = cells_json(part.plus);
      partition_ok = partition_ok && r.restriction_backward[k] == plus;
    }
    step["star"] = cells_json(part.star);
    steps.push_back(step);
    t << k + 1 << ". " << cells_text(cells);
    if (want_fwd) t << "  R+ " << cells_text(delta.cells_of(r.restriction_forward[k]));
    if (want_bwd) t << "  R- " << cells_text(delta.cells_of(r.restriction_backward[k]));
    t << "\n";
  }
  o.json["ok_forward"] = r.ok_forward;
  o.json["ok_backward"] = r.ok_backward;
  o.json["restrictions_match_partition"] = partition_ok;
  o.json["intersection_check"] = intersections;
  o.json["steps"] = steps;
  o.json["h_vector"] = h_s;
  o.json["h_vector_from_f"] = h_f;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    if ((v.backward && !want_bwd) || (!v.backward && !want_fwd)) continue;
    violations.push_back(Json{{"direction", v.backward ? "backward" : "forward"},
                              {"step", v.step},
                              {"face", face_json(delta, v.face)}});
  }
  o.json["violations"] = violations;

  t << "forward " << (r.ok_forward ? "ok" : "FAILED") << ", backward "
    << (r.ok_backward ? "ok" : "FAILED") << ", intersection partition "
    << (intersections ? "ok" : "FAILED") << "\nh-vector:";
  for (auto x : h_s) t << " " << x;
  t << "\n";
  o.text = t.str();
  o.finding = (want_fwd && !r.ok_forward) || (want_bwd && !r.ok_backward) || !intersections ||
              !partition_ok || (r.ok_forward && h_s != h_f);
  return o;
}

// ---------------------------------------------------------------- report

Outcome cmd_report(const Context& ctx) {
  std::vector<Check> checks;
  Outcome o;
  o.json = header(ctx.cfg);
  o.json["field"] = to_string(ctx.field);

  const GroebnerReport gb = verify_groebner_basis(ctx.order, ctx.pool);
  checks.push_back({"2-minors form a Groebner basis", gb.ok, std::to_string(gb.pair_count) + " S-pairs"});

  const OrderComplex oc = order_complex(ctx.order);
  const SimplicialComplex& delta = oc.reduced;
  if (ctx.is_rows_order()) {
    const SimplicialComplex paths = path_complex(ctx.shape);
    checks.push_back({"facets are the lattice paths", sorted_facet_cells(paths) == sorted_facet_cells(delta),
                      std::to_string(delta.facets().size()) + " facets"});
    std::set<Face> by_count;
    for (Face f : boundary_faces(delta)) by_count.insert(f);
    std::set<Face> by_rows;
    for (Face f : boundary_faces_by_rows_cols(delta, ctx.shape)) by_rows.insert(f);
    checks.push_back({"boundary faces match the row/column description", by_count == by_rows,
                      std::to_string(by_count.size()) + " boundary faces"});
    const auto dims = reduced_homology_dims(delta, ctx.field);
    bool homology_ok = true;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int degree = static_cast<int>(k) - 1;
      const long long want = (ctx.shape.m() == ctx.shape.n() && degree == ctx.shape.n() - 2) ? 1 : 0;
      homology_ok = homology_ok && dims[k] == want;
    }
    checks.push_back({"reduced homology of a ball (m<n) or sphere (m=n)", homology_ok, ""});
  }
  if (delta.is_pure()) {
    const QuasimanifoldReport q = is_quasimanifold(delta, ctx.field);
    checks.push_back({"quasimanifold", q.ok, ""});
  } else {
    checks.push_back({"quasimanifold", false, "complex is not pure"});
  }

  const CanonicalReport r = canonical_report(delta, static_cast<int>(oc.cone.size()), ctx.field,
                                             2 * ctx.shape.n(), ctx.pool);
  for (auto& c : canonical_checks(ctx, oc, r)) checks.push_back(std::move(c));
  o.json["level"] = r.is_level;
  o.json["type"] = r.cm_type;
  o.json["a_invariant"] = r.a_invariant;
  o.json["gorenstein"] = r.is_gorenstein;
  o.json["cohen_macaulay"] = r.cohen_macaulay;

  if (ctx.is_rows_order()) {
    const SimplicialComplex paths = path_complex(ctx.shape);
    const ShellingReport s = verify_shelling(paths, shelling_order(ctx.shape));
    const bool h_ok = s.ok_forward &&
                      h_vector_from_shelling(s) == h_vector_from_f(f_vector(paths), paths.dim() + 1);
    checks.push_back({"two-way shelling", s.ok_forward && s.ok_backward, ""});
    checks.push_back({"shelling intersections follow the vertex partition",
                      intersection_partition_check(paths, ctx.shape), ""});
    checks.push_back({"h-vector from shelling equals f->h transform", h_ok, ""});
  }

  // Betti table only when the sweep is within the guard (or forced).
  Json betti = nullptr;
  try {
    const BettiTable table = compute_betti(ctx);
    betti = Json{{"pdim", table.pdim()}, {"reg", table.reg()}, {"entries", betti_entries_json(table)}};
    checks.push_back({"regularity equals m-1", table.reg() == ctx.shape.m() - 1, std::to_string(table.reg())});
    const int height = (ctx.shape.m() - 1) * (ctx.shape.n() - 1);
    checks.push_back({"projective dimension equals (m-1)(n-1)", table.pdim() == height,
                      std::to_string(table.pdim())});
    if (const FixtureTable* fx = fixture_for(ctx)) {
      const FixtureComparison cmp = compare_with_fixture(table, ctx.shape, *fx);
      betti["comparison"] = comparison_json(cmp, fx->name);
      checks.push_back({"Betti table equals fixture " + fx->name, cmp.differences.empty(),
                        std::to_string(cmp.differences.size()) + " differing entries"});
    }
    if (const FixtureTable* det = determinantal_fixture(ctx.shape)) {
      checks.push_back({"dominates the S/I_2 table", dominance_violations(table, det->entries).empty(), det->name});
      checks.push_back({"anti-diagonal sums equal the S/I_2 table",
                        antidiagonal_violations(table, det->entries).empty(), det->name});
    }
  } catch (const GuardExceeded& e) {
    o.json["betti_skipped"] = e.what();
  }
  o.json["betti"] = betti;

  o.finding = any_failed(checks);
  o.json["ok"] = !o.finding;
  o.json["checks"] = checks_json(checks);
  o.text = canonical_text(ctx, delta, r) + checks_text(checks) +
           (o.finding ? "verdict: FINDINGS\n" : "verdict: all checks pass\n");
  return o;
}

// ---------------------------------------------------------------- fixtures

Outcome cmd_fixtures_list() {
  Outcome o;
  o.json = Json::array();
  std::ostringstream t;
  for (const auto& f : fixtures()) {
    o.json.push_back(Json{{"name", f.name},
                          {"m", f.shape.m()},
                          {"n", f.shape.n()},
                          {"order", f.order},
                          {"source", f.source}});
    t << f.name << "  " << to_string(f.shape) << "  " << (f.order.empty() ? "-" : f.order) << "  "
      << f.source << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_fixtures_show(const std::string& name) {
  const FixtureTable& f = fixture(name);
  Outcome o;
  o.json = Json{{"name", f.name}, {"m", f.shape.m()}, {"n", f.shape.n()}, {"order", f.order},
                {"source", f.source}, {"pdim", f.entries.pdim()}, {"reg", f.entries.reg()},
                {"entries", betti_entries_json(f.entries)}};
  o.text = f.text;
  o.csv = f.entries.render_csv();
  return o;
}

int default_threads(std::ostream& err) {
  const char* env = std::getenv("LEVELCOMPLEX_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int t = std::stoi(env);
    if (t >= 1) return t;
  } catch (const std::exception&) {
  }
  err << "warning: ignoring invalid LEVELCOMPLEX_THREADS='" << env << "'\n";
  return 1;
}

}  // namespace

MonomialOrder resolve_order(const MatrixShape& shape, const std::string& selector) {
  if (selector.starts_with("perm:")) {
    const std::string path = selector.substr(5);
    if (!std::filesystem::exists(path)) {
      const auto names = bundled_order_names();
      if (std::find(names.begin(), names.end(), path) != names.end()) {
        std::istringstream in(bundled_order_text(path));
        return MonomialOrder::parse_permutation(shape, in);
      }
    }
  }
  return MonomialOrder::from_selector(shape, selector);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads(err);

  CLI::App app{"Initial ideals of 2-minors: complexes, canonical modules, Betti tables, shellings",
               "levelcomplex"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--m", cfg.m, "rows of the matrix")->check(CLI::PositiveNumber);
  app.add_option("--n", cfg.n, "columns of the matrix")->check(CLI::PositiveNumber);
  app.add_option("--order", cfg.order, "rows | diag | natural | perm:<path>");
  app.add_option("--field", cfg.field, "Q or a prime p");
  app.add_option("--threads", cfg.threads, "worker threads (default: LEVELCOMPLEX_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json | text | csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--output", cfg.output, "write to this file instead of stdout");
  app.add_flag("--force", cfg.force, "allow Hochster sweeps above the vertex guard");

  auto* facets = app.add_subcommand("facets", "facets of the complex after cone-point removal");
  auto* complex = app.add_subcommand("complex", "export the complex");
  auto* gb = app.add_subcommand("gb-verify", "check the Groebner-basis property of the 2-minors");
  auto* betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula");
  std::string fixture_name;
  betti->add_option("--fixture", fixture_name, "compare with a bundled table (name or 'auto')");
  auto* canonical = app.add_subcommand("canonical", "canonical-module combinatorics");
  auto* level = app.add_subcommand("level", "levelness verdict");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and its dual");
  auto* shelling = app.add_subcommand("shelling", "verify the facet shelling order");
  std::string direction = "both";
  shelling->add_option("--direction", direction, "forward | backward | both")
      ->check(CLI::IsMember({"forward", "backward", "both"}));
  auto* report = app.add_subcommand("report", "run every check and emit a verdict");
  auto* fixtures_cmd = app.add_subcommand("fixtures", "bundled reference Betti tables");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "list the bundled tables");
  auto* fixtures_show = fixtures_cmd->add_subcommand("show", "print one bundled table");
  std::string show_name;
  fixtures_show->add_option("name", show_name, "fixture name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadInput;
  }

  try {
    Outcome o;
    if (fixtures_list->parsed()) {
      o = cmd_fixtures_list();
    } else if (fixtures_show->parsed()) {
      o = cmd_fixtures_show(show_name);
    } else {
      const Context ctx(cfg);
      if (facets->parsed()) o = cmd_facets(ctx);
      else if (complex->parsed()) o = cmd_complex(ctx);
      else if (gb->parsed()) o = cmd_gb_verify(ctx);
      else if (betti->parsed()) o = cmd_betti(ctx, fixture_name);
      else if (canonical->parsed()) o = cmd_canonical(ctx);
      else if (level->parsed()) o = cmd_level(ctx);
      else if (hilbert->parsed()) o = cmd_hilbert(ctx);
      else if (shelling->parsed()) o = cmd_shelling(ctx, direction);
      else if (report->parsed()) o = cmd_report(ctx);
    }

    std::string body;
    if (cfg.format == "json") {
      body = o.json.dump(2) + "\n";
    } else if (cfg.format == "text") {
      body = o.text;
    } else {
      if (o.csv.empty()) throw InputError("csv output is only available for Betti tables");
      body = o.csv;
    }
    if (cfg.output.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw InputError("cannot write " + cfg.output);
      file << body;
    }
    return o.finding ? kFinding : kSuccess;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace levelcomplex
