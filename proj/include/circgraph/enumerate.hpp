#ifndef CIRCGRAPH_ENUMERATE_HPP
#define CIRCGRAPH_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "circgraph/axioms.hpp"
#include "circgraph/graph.hpp"
#include "circgraph/isomorphism.hpp"

namespace circgraph {

/// One isomorphism class found by a census.
struct CensusEntry {
  CanonicalForm canonical;  // part-respecting
  BipartiteGraph graph;     // deterministic representative
  std::size_t u_size = 0;
  std::size_t w_size = 0;
  Verdict verdict = Verdict::NotCircular;
  Distance diameter = Distance::unreachable();
  Distance radius = Distance::unreachable();
  std::vector<std::size_t> u_degrees;  // ascending
  std::vector<std::size_t> w_degrees;  // ascending
};

/// Blocks over points 0..u_size-1, one bit per point, ascending.
using BlockFamily = std::vector<std::uint32_t>;

/// Every labelled family of distinct blocks (size >= 3) covering each point
/// triple exactly once. Exact-cover backtracking: the first uncovered triple
/// in lexicographic order picks a containing block whose triples are all
/// still uncovered. Requires 3 <= u_size <= 7.
std::vector<BlockFamily> circular_block_families(int u_size, unsigned workers = 1);

/// Levi graph of a family with points p1..pn.
BipartiteGraph family_graph(int u_size, const BlockFamily& family);

/// All circular graphs with |U| = u_size up to part-respecting isomorphism,
/// ordered by canonical form. Output does not depend on `workers`.
std::vector<CensusEntry> enumerate_circular(int u_size, unsigned workers = 1);

/// Free trees on exactly n vertices (1 <= n <= 10) up to isomorphism,
/// ordered by canonical form. Rooted trees come from level sequences and are
/// merged by canonical form.
std::vector<SimpleGraph> free_trees(int n);

/// Circular trees on at most max_n vertices (1 <= max_n <= 10), both
/// bipartition orientations of every free tree considered.
std::vector<CensusEntry> enumerate_circular_trees(int max_n);

/// Naive reference classifier sharing no code with classify(): straight
/// loops over label sets and an edge lookup table. Same verdicts and same
/// witness (kind, vertices, observed) for every input.
CircularClassification brute_force_classify(const BipartiteGraph& g);

}  // namespace circgraph

#endif  // CIRCGRAPH_ENUMERATE_HPP
