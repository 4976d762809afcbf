#include "levelcomplex/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

namespace detail {
const std::map<std::string, std::string>& embedded_files();
}

namespace {

struct Manifest {
  const char* name;
  int m;
  int n;
  const char* order;
  const char* source;
};

constexpr Manifest kManifest[] = {
    {"I2-2x10", 2, 10, "", "S/I_2, case m=2, n=10"},
    {"I2-3x3", 3, 3, "", "S/I_2, case m=3, n=3"},
    {"I2-3x4", 3, 4, "", "S/I_2, case m=3, n=4"},
    {"I2-4x4", 4, 4, "", "S/I_2, case m=4, n=4"},
    {"I2-4x5", 4, 5, "", "S/I_2, case m=4, n=5"},
    {"rows-4x5", 4, 5, "rows", "S/I, case m=4, n=5"},
    {"natural-4x5", 4, 5, "natural", "S/J, case m=4, n=5"},
    {"diag-4x5", 4, 5, "diag", "S/in_<'(I_2), case m=4, n=5"},
    {"randomA-4x5", 4, 5, "perm:randomA-4x5.perm", "S/in(I_2) for the first listed order, case m=4, n=5"},
    {"randomB-4x5", 4, 5, "perm:randomB-4x5.perm", "S/in(I_2) for the second listed order, case m=4, n=5"},
};

std::vector<FixtureTable> load_all() {
  std::vector<FixtureTable> out;
  const auto& files = detail::embedded_files();
  for (const Manifest& entry : kManifest) {
    const auto it = files.find(std::string("fixtures/") + entry.name + ".betti");
    if (it == files.end()) throw std::logic_error(std::string("missing fixture ") + entry.name);
    std::istringstream in(it->second);
    out.push_back({entry.name, MatrixShape(entry.m, entry.n), entry.order, entry.source,
                   BettiTable::parse_text(in), it->second});
  }
  return out;
}

}  // namespace

const std::vector<FixtureTable>& fixtures() {
  static const std::vector<FixtureTable> all = load_all();
  return all;
}

const FixtureTable& fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + name + "'");
}

const FixtureTable* determinantal_fixture(const MatrixShape& shape) {
  for (const auto& f : fixtures()) {
    if (f.order.empty() && f.shape == shape) return &f;
  }
  return nullptr;
}

const std::string& bundled_order_text(const std::string& name) {
  const auto& files = detail::embedded_files();
  const auto it = files.find("orders/" + name);
  if (it == files.end()) throw InputError("unknown bundled order '" + name + "'");
  return it->second;
}

std::vector<std::string> bundled_order_names() {
  std::vector<std::string> out;
  for (const auto& [path, text] : detail::embedded_files()) {
    if (path.starts_with("orders/")) out.push_back(path.substr(7));
  }
  return out;
}

std::vector<BettiDifference> betti_differences(const BettiTable& computed,
                                               const BettiTable& expected) {
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : computed.entries()) keys.insert(k);
  for (const auto& [k, v] : expected.entries()) keys.insert(k);
  std::vector<BettiDifference> out;
  for (const auto& [i, j] : keys) {
    const long long a = computed.at(i, j);
    const long long b = expected.at(i, j);
    if (a != b) out.push_back({i, j, a, b});
  }
  return out;
}

std::vector<BettiDifference> dominance_violations(const BettiTable& initial,
                                                  const BettiTable& determinantal) {
  std::vector<BettiDifference> out;
  for (const auto& [key, value] : determinantal.entries()) {
    const long long a = initial.at(key.first, key.second);
    if (a < value) out.push_back({key.first, key.second, a, value});
  }
  return out;
}

std::vector<int> antidiagonal_violations(const BettiTable& a, const BettiTable& b) {
  std::vector<int> out;
  const int top = std::max(a.max_degree(), b.max_degree());
  for (int j = 0; j <= top; ++j) {
    if (a.alternating_sum(j) != b.alternating_sum(j)) out.push_back(j);
  }
  return out;
}

std::vector<int> diagonal_violations(const BettiTable& table) {
  std::vector<int> out;
  for (const auto& [key, value] : table.entries()) {
    if (key.first > 0 && key.first == key.second && value != 0) out.push_back(key.first);
  }
  return out;
}

std::vector<int> top_degree_violations(const BettiTable& table, int height) {
  std::vector<int> out;
  for (int i = 1; i <= height; ++i) {
    const auto cur = table.top_degree(i);
    const auto prev = table.top_degree(i - 1);
    if (!cur || !prev || *cur <= *prev) out.push_back(i);
  }
  return out;
}

FixtureComparison compare_with_fixture(const BettiTable& computed, const MatrixShape& shape,
                                       const FixtureTable& fixture) {
  if (!(shape == fixture.shape)) {
    throw ShapeMismatch("fixture " + fixture.name + " is for shape " + to_string(fixture.shape) +
                        ", not " + to_string(shape));
  }
  FixtureComparison out;
  out.differences = betti_differences(computed, fixture.entries);
  if (const FixtureTable* det = determinantal_fixture(shape)) {
    out.facts_checked = true;
    out.dominance = dominance_violations(computed, det->entries);
    out.antidiagonal = antidiagonal_violations(computed, det->entries);
  }
  return out;
}

}  // namespace levelcomplex
