// Test-only reference implementations. Nothing here calls the code paths
// it is used to check.
#ifndef CIRCGRAPH_TESTS_ORACLES_HPP
#define CIRCGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "circgraph/graph.hpp"

namespace oracle {

using circgraph::BipartiteGraph;
using circgraph::Label;
using circgraph::SimpleGraph;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const SimpleGraph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [x, y] : g.edge_list()) a[x][y] = a[y][x] = 1;
  return a;
}

/// Floyd-Warshall; kInf marks unreachable pairs.
inline Matrix all_pairs(const SimpleGraph& g) {
  const std::size_t n = g.order();
  Matrix d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [x, y] : g.edge_list()) d[x][y] = d[y][x] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

struct Metrics {
  int diameter = 0;
  int radius = kInf;
  bool connected = true;
};

inline Metrics metrics(const SimpleGraph& g) {
  const auto d = all_pairs(g);
  Metrics m;
  for (const auto& row : d) {
    const int ecc = *std::max_element(row.begin(), row.end());
    if (ecc >= kInf) m.connected = false;
    m.diameter = std::max(m.diameter, ecc);
    m.radius = std::min(m.radius, ecc);
  }
  return m;
}

/// Isomorphism by trying every permutation; only for tiny graphs.
inline bool brute_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2, bool respect_sides) {
  const std::size_t n = g1.order();
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  const auto a = adjacency(g1);
  const auto b = adjacency(g2);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (respect_sides && g1.sides()[i] != g2.sides()[perm[i]]) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return SimpleGraph::from_indices(labels, edges);
}

inline BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t nu, std::size_t nw, double p) {
  std::vector<Label> u, w;
  for (std::size_t i = 0; i < nu; ++i) u.push_back("u" + std::to_string(i));
  for (std::size_t j = 0; j < nw; ++j) w.push_back("w" + std::to_string(j));
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nw; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return BipartiteGraph::from_parts(u, w, edges);
}

/// Fresh labels and shuffled vertex order; parts preserved.
inline SimpleGraph relabel(const SimpleGraph& g, std::mt19937& rng) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> name(n);
  std::iota(name.begin(), name.end(), std::size_t{0});
  std::shuffle(name.begin(), name.end(), rng);
  // New vertex i is old vertex perm[i].
  std::vector<std::size_t> where(n);
  for (std::size_t i = 0; i < n; ++i) where[perm[i]] = i;
  std::vector<Label> labels;
  std::vector<circgraph::Side> sides;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("r" + std::to_string(name[i]));
    if (g.has_bipartition()) sides.push_back(g.sides()[perm[i]]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : g.edge_list()) edges.emplace_back(where[a], where[b]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return SimpleGraph::from_indices(labels, edges, sides);
}

inline BipartiteGraph relabel(const BipartiteGraph& g, std::mt19937& rng) {
  return circgraph::as_bipartite(relabel(g.graph(), rng));
}

/// Number of circles containing all three points, via a label lookup.
inline std::size_t triple_cover(const BipartiteGraph& g, const Label& a, const Label& b, const Label& c) {
  std::set<std::pair<Label, Label>> inc;
  for (const auto& e : g.labeled_edges()) inc.insert(e);
  std::size_t n = 0;
  for (const auto& w : g.part_w()) {
    if (inc.count({a, w}) && inc.count({b, w}) && inc.count({c, w})) ++n;
  }
  return n;
}

/// Independent census for small u: every family of >= 3-subsets, filtered
/// by exact single coverage of all triples. Returns the families as sorted
/// block masks.
inline std::vector<std::vector<std::uint32_t>> powerset_families(int u) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << u); ++s) {
    if (__builtin_popcount(s) >= 3) subsets.push_back(s);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets.size()); ++pick) {
    std::vector<std::uint32_t> family;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (pick >> i & 1) family.push_back(subsets[i]);
    bool ok = true;
    for (int a = 0; a < u && ok; ++a)
      for (int b = a + 1; b < u && ok; ++b)
        for (int c = b + 1; c < u && ok; ++c) {
          const std::uint32_t t = (1u << a) | (1u << b) | (1u << c);
          int covers = 0;
          for (auto s : family) covers += (s & t) == t;
          ok = covers == 1;
        }
    if (ok) {
      std::sort(family.begin(), family.end());
      out.push_back(family);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // CIRCGRAPH_TESTS_ORACLES_HPP
