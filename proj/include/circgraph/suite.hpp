#ifndef CIRCGRAPH_SUITE_HPP
#define CIRCGRAPH_SUITE_HPP

#include <vector>

#include "circgraph/axioms.hpp"
#include "circgraph/graph.hpp"

namespace circgraph {

/// Linear axioms on derive_linear(g, u) for every point u. Non-trivial
/// circular input only.
TheoremReport verify_linear_derivations(const BipartiteGraph& g);

/// neighborhood_graph(g) is isomorphic to g disjoint-union g, with the
/// mapping replayed edge by edge. Circular input only.
TheoremReport verify_neighborhood_doubling(const BipartiteGraph& g);

/// verify_all() followed by the two checks above.
std::vector<TheoremReport> theorem_suite(const BipartiteGraph& g);

}  // namespace circgraph

#endif  // CIRCGRAPH_SUITE_HPP
