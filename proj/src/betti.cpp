#include "levelcomplex/betti.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "levelcomplex/error.hpp"
#include "levelcomplex/homology.hpp"

namespace levelcomplex {

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

long long BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pdim() const {
  int out = 0;
  for (const auto& [key, v] : entries_) out = std::max(out, key.first);
  return out;
}

int BettiTable::reg() const {
  int out = 0;
  for (const auto& [key, v] : entries_) out = std::max(out, key.second - key.first);
  return out;
}

std::optional<int> BettiTable::top_degree(int i) const {
  std::optional<int> out;
  for (const auto& [key, v] : entries_) {
    if (key.first == i) out = std::max(out.value_or(key.second), key.second);
  }
  return out;
}

long long BettiTable::alternating_sum(int j) const {
  long long sum = 0;
  for (const auto& [key, v] : entries_) {
    if (key.second == j) sum += (key.first % 2 == 0) ? v : -v;
  }
  return sum;
}

int BettiTable::max_degree() const {
  int out = 0;
  for (const auto& [key, v] : entries_) out = std::max(out, key.second);
  return out;
}

std::string BettiTable::render_text() const {
  const int cols = pdim() + 1;
  const int rows = reg() + 1;
  std::size_t width = 1;
  for (const auto& [key, v] : entries_) width = std::max(width, std::to_string(v).size());
  width = std::max(width, std::to_string(cols - 1).size());
  auto pad = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };

  const std::size_t label = std::to_string(rows - 1).size() + 1;
  std::ostringstream out;
  out << std::string(label, ' ');
  for (int i = 0; i < cols; ++i) out << pad(std::to_string(i));
  out << '\n';
  for (int r = 0; r < rows; ++r) {
    const std::string name = std::to_string(r) + ":";
    out << name << std::string(label - name.size(), ' ');
    for (int i = 0; i < cols; ++i) out << pad(std::to_string(at(i, i + r)));
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::render_csv() const {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [key, v] : entries_) out << key.first << ',' << key.second << ',' << v << '\n';
  return out.str();
}

BettiTable BettiTable::parse_text(std::istream& in) {
  BettiTable table;
  std::string line;
  std::vector<int> columns;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (columns.empty()) {
      int c = 0;
      while (fields >> c) columns.push_back(c);
      if (columns.empty()) throw InputError("betti table: missing column header");
      continue;
    }
    std::string name;
    fields >> name;
    if (name.empty() || name.back() != ':') throw InputError("betti table: bad row label '" + name + "'");
    const int r = std::stoi(name.substr(0, name.size() - 1));
    for (int c : columns) {
      long long v = 0;
      if (!(fields >> v)) throw InputError("betti table: short row " + std::to_string(r));
      table.add(c, c + r, v);
    }
  }
  return table;
}

namespace {

void all_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t clique, std::uint64_t cand,
                 std::vector<std::vector<Face>>& out) {
  out[std::popcount(clique)].emplace_back(clique);
  for (std::uint64_t b = cand; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    // only extend with higher vertices to avoid duplicates
    const std::uint64_t higher = b & ~((std::uint64_t{2} << v) - 1);
    all_cliques(adj, clique | (std::uint64_t{1} << v), higher & adj[v], out);
  }
}

/// Removes vertices whose closed neighbourhood (inside w) is contained in
/// another vertex's closed neighbourhood.
std::uint64_t strip_dominated(const std::vector<std::uint64_t>& closed, std::uint64_t w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t b = w; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const std::uint64_t nv = closed[v] & w;
      for (std::uint64_t c = nv & ~(std::uint64_t{1} << v); c != 0; c &= c - 1) {
        const int u = std::countr_zero(c);
        if ((nv & ~closed[u]) == 0) {
          w &= ~(std::uint64_t{1} << v);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return w;
}

class InducedHomology {
 public:
  InducedHomology(const SimplicialComplex& complex, const FieldSpec& field)
      : field_(field), flag_(is_flag(complex)) {
    const int n = complex.vertex_count();
    closed_.assign(n, 0);
    adj_.assign(n, 0);
    for (Face f : complex.facets()) {
      f.for_each_vertex([&](int v) { adj_[v] |= f.without(v).bits(); });
    }
    for (int v = 0; v < n; ++v) closed_[v] = adj_[v] | (std::uint64_t{1} << v);
    if (!flag_) all_faces_ = complex.faces_by_size();
    used_ = complex.used_vertices().bits();
  }

  /// Reduced homology of the induced subcomplex on w; entry k is H̃_{k-1}.
  const std::vector<long long>& of(std::uint64_t w) {
    w &= used_;
    if (flag_) w = strip_dominated(closed_, w);
    if (std::popcount(w) == 1) return contractible_;
    if (const auto it = cache_.find(w); it != cache_.end()) return it->second;
    std::vector<std::vector<Face>> chains;
    if (flag_) {
      chains.assign(std::popcount(w) + 1, {});
      all_cliques(adj_, 0, w, chains);
      while (!chains.empty() && chains.back().empty()) chains.pop_back();
      for (auto& level : chains) std::sort(level.begin(), level.end());
    } else {
      for (const auto& level : all_faces_) {
        std::vector<Face> kept;
        for (Face f : level) {
          if ((f.bits() & ~w) == 0) kept.push_back(f);
        }
        if (kept.empty()) break;
        chains.push_back(std::move(kept));
      }
    }
    return cache_.emplace(w, chain_homology(chains, field_)).first->second;
  }

 private:
  FieldSpec field_;
  bool flag_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> closed_;
  std::vector<std::vector<Face>> all_faces_;
  std::uint64_t used_ = 0;
  std::unordered_map<std::uint64_t, std::vector<long long>> cache_;
  const std::vector<long long> contractible_{};
};

}  // namespace

BettiTable hochster_betti_table(const SimplicialComplex& complex, const FieldSpec& field,
                                const WorkerPool& pool, const HochsterOptions& options) {
  BettiTable table;
  if (complex.is_void()) {
    throw InputError("Hochster's formula needs a non-void complex");
  }
  std::uint64_t cone = ~std::uint64_t{0};
  for (Face f : complex.facets()) cone &= f.bits();
  std::vector<int> sweep;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    if (!((cone >> v) & 1U)) sweep.push_back(v);
  }
  const int n = static_cast<int>(sweep.size());
  if (n > options.max_vertices && !options.force) {
    throw GuardExceeded("Hochster sweep over " + std::to_string(n) + " vertices exceeds the guard of " +
                        std::to_string(options.max_vertices) + " (2^" + std::to_string(n) +
                        " subsets); force to override");
  }
  if (n > 40) throw GuardExceeded("Hochster sweep over more than 40 vertices is not supported");

  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint64_t block = std::uint64_t{1} << 12;
  const std::uint64_t blocks = (total + block - 1) / block;
  std::vector<std::map<std::pair<int, int>, long long>> partial(blocks);
  std::vector<std::unique_ptr<InducedHomology>> engines(pool.size());

  pool.parallel_for(blocks, [&](std::size_t b, std::size_t worker) {
    if (!engines[worker]) engines[worker] = std::make_unique<InducedHomology>(complex, field);
    InducedHomology& engine = *engines[worker];
    auto& acc = partial[b];
    const std::uint64_t end = std::min(total, (b + 1) * block);
    for (std::uint64_t s = b * block; s < end; ++s) {
      std::uint64_t w = 0;
      for (std::uint64_t t = s; t != 0; t &= t - 1) {
        w |= std::uint64_t{1} << sweep[std::countr_zero(t)];
      }
      const int j = std::popcount(s);
      const auto& dims = engine.of(w);
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] == 0) continue;
        // dims[k] = dim H̃_{k-1}; i = j - (k - 1) - 1
        acc[{j - static_cast<int>(k), j}] += dims[k];
      }
    }
  });
  for (const auto& acc : partial) {
    for (const auto& [key, v] : acc) table.add(key.first, key.second, v);
  }
  return table;
}

}  // namespace levelcomplex
