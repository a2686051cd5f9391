#ifndef CIRCGRAPH_CONSTRUCTIONS_HPP
#define CIRCGRAPH_CONSTRUCTIONS_HPP

#include <string_view>
#include <vector>

#include "circgraph/graph.hpp"

namespace circgraph {

/// Incidence structure given as points and blocks of point labels.
struct Design {
  std::vector<Label> points;
  std::vector<std::vector<Label>> blocks;
};

/// K_{1,n-1}: leaves u1..u{n-1} in U, centre "w" in W. Requires n >= 4.
BipartiteGraph star(int n);

/// Points p1..pn; one circle per 3-subset, labelled "b{i,j,k}", in
/// lexicographic order. Requires n >= 3.
BipartiteGraph triangular(int n);

/// One neighbourhood vertex "n_<v>" per original vertex v, joined to every
/// member of N(v). The result records the partition (originals in U,
/// neighbourhood vertices in W). Throws on isolated vertices.
SimpleGraph neighborhood_graph(const SimpleGraph& g);
SimpleGraph neighborhood_graph(const BipartiteGraph& g);

/// Deletes `pivot` from U and every circle not through it. Requires a
/// non-trivial circular input.
BipartiteGraph derive_linear(const BipartiteGraph& g, std::string_view pivot);

/// Levi graph of a design. Blocks are sorted by member position and
/// labelled "b{i,j,...}" with 1-based point positions, so the design of all
/// 3-subsets of p1..pn reproduces triangular(n) exactly.
///
/// Rejects blocks with fewer than three distinct points and blocks naming
/// unknown points. Whether triples are covered once is left to classify().
BipartiteGraph from_design(const Design& d);

}  // namespace circgraph

#endif  // CIRCGRAPH_CONSTRUCTIONS_HPP
