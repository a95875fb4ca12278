#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "covset/cnf.hpp"
#include "covset/dg_format.hpp"
#include "covset/dominance_graph.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(COVSET_FIXTURE_DIR) + "/" + name; }

inline covset::DominanceGraph load(const std::string& name) { return covset::read_graph_file(fixture(name)); }

inline covset::Cnf load_cnf(const std::string& name) { return covset::read_dimacs_file(fixture(name)); }

inline covset::AlternativeSet set_of(const covset::DominanceGraph& g, const std::vector<std::string>& names) {
  return g.set_of(names);
}

/// Each unordered pair gets no edge, x ≻ y, or y ≻ x.
inline covset::DominanceGraph random_graph(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<covset::NamePair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) >= density) continue;
      if (coin(rng) < 0.5) edges.push_back({names[i], names[j]});
      else edges.push_back({names[j], names[i]});
    }
  }
  return covset::DominanceGraph::build(names, edges);
}

inline covset::DominanceGraph named(const std::vector<std::string>& names, const std::vector<covset::NamePair>& edges) {
  return covset::DominanceGraph::build(names, edges);
}

inline covset::DominanceGraph chain2() { return named({"a", "b"}, {{"a", "b"}}); }
inline covset::DominanceGraph cycle3() { return named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

}  // namespace testing

/// Definitional covering-set oracle over an adjacency matrix and boolean
/// vectors. Shares nothing with the library beyond the graph's edge list.
namespace oracle {

using Set = std::vector<bool>;

struct Graph {
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> dom;  // dom[x][y]: x ≻ y
};

inline Graph from(const covset::DominanceGraph& g) {
  Graph o;
  o.n = g.size();
  o.names = g.names();
  o.dom.assign(o.n, std::vector<bool>(o.n, false));
  for (const auto& [a, b] : g.named_edges()) {
    const auto ia = std::find(o.names.begin(), o.names.end(), a) - o.names.begin();
    const auto ib = std::find(o.names.begin(), o.names.end(), b) - o.names.begin();
    o.dom[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)] = true;
  }
  return o;
}

inline bool covers(const Graph& g, const Set& b, std::size_t x, std::size_t y, bool upward) {
  if (!g.dom[x][y]) return false;
  for (std::size_t z = 0; z < g.n; ++z) {
    if (!b[z]) continue;
    if (upward && g.dom[z][x] && !g.dom[z][y]) return false;
    if (!upward && g.dom[y][z] && !g.dom[x][z]) return false;
  }
  return true;
}

inline bool uncovered_in(const Graph& g, const Set& b, std::size_t x, bool upward) {
  for (std::size_t y = 0; y < g.n; ++y) {
    if (b[y] && y != x && covers(g, b, y, x, upward)) return false;
  }
  return true;
}

inline bool is_covering(const Graph& g, const Set& m, bool upward) {
  for (std::size_t x = 0; x < g.n; ++x) {
    if (m[x]) {
      if (!uncovered_in(g, m, x, upward)) return false;
    } else {
      Set b = m;
      b[x] = true;
      if (uncovered_in(g, b, x, upward)) return false;
    }
  }
  return true;
}

inline Set decode(std::size_t n, std::uint64_t code) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((code >> i) & 1U) != 0;
  return s;
}

inline std::vector<std::string> names_of(const Graph& g, const Set& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (s[i]) out.push_back(g.names[i]);
  }
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

struct Families {
  std::vector<Set> covering, minimal, minimum;
};

/// Plain 2^n sweep, no pruning.
inline Families families(const Graph& g, bool upward) {
  Families f;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.n); ++code) {
    Set s = decode(g.n, code);
    if (is_covering(g, s, upward)) f.covering.push_back(s);
  }
  for (const auto& m : f.covering) {
    const bool minimal = std::none_of(f.covering.begin(), f.covering.end(),
                                      [&](const Set& o) { return o != m && subset(o, m); });
    if (minimal) f.minimal.push_back(m);
  }
  std::size_t best = g.n + 1;
  for (const auto& m : f.covering) best = std::min<std::size_t>(best, std::count(m.begin(), m.end(), true));
  for (const auto& m : f.covering) {
    if (static_cast<std::size_t>(std::count(m.begin(), m.end(), true)) == best) f.minimum.push_back(m);
  }
  return f;
}

/// Sorted list of sorted name lists, for order-insensitive comparison.
inline std::vector<std::vector<std::string>> canon(const Graph& g, const std::vector<Set>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(names_of(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
