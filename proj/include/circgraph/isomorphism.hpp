#ifndef CIRCGRAPH_ISOMORPHISM_HPP
#define CIRCGRAPH_ISOMORPHISM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circgraph/graph.hpp"

namespace circgraph {

enum class IsoMode { Abstract, PartRespecting };

/// Relabeling-invariant encoding of a graph.
///
/// `adjacency` holds the upper triangle of the adjacency matrix, row by row,
/// under the canonical vertex order; `sides` is the partition in that order
/// (empty in Abstract mode). Two graphs are isomorphic iff their forms have
/// equal (n, sides, adjacency).
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<bool> adjacency;
  std::vector<Side> sides;
  /// Original label -> canonical position.
  std::map<Label, std::size_t> relabeling;

  bool same_graph(const CanonicalForm& other) const {
    return n == other.n && sides == other.sides && adjacency == other.adjacency;
  }

  /// Hex digest of (n, sides, adjacency); equal iff same_graph().
  std::string code() const;
};

/// Total order on the graph part of canonical forms.
std::strong_ordering compare_forms(const CanonicalForm& a, const CanonicalForm& b);

struct IsoCertificate {
  bool isomorphic = false;
  /// g1 label -> g2 label; present iff isomorphic.
  std::optional<std::map<Label, Label>> mapping;
};

/// Individualization-refinement canonical labeling. Colour refinement runs
/// to a stable partition, the search branches on the smallest non-singleton
/// class, and the leaf whose permuted adjacency bits are lexicographically
/// least wins. Automorphisms discovered at equal leaves prune equivalent
/// branches. PartRespecting mode starts from the recorded partition and
/// throws InputError if there is none.
CanonicalForm canonical_form(const SimpleGraph& g, IsoMode mode = IsoMode::Abstract);
CanonicalForm canonical_form(const BipartiteGraph& g, IsoMode mode = IsoMode::Abstract);

/// The returned mapping is checked edge by edge before returning.
IsoCertificate are_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                              IsoMode mode = IsoMode::Abstract);
IsoCertificate are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2,
                              IsoMode mode = IsoMode::Abstract);

/// True iff `mapping` is a bijection from g1's labels onto g2's that carries
/// edges onto edges (and, in PartRespecting mode, sides onto sides).
bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2,
                    const std::map<Label, Label>& mapping, IsoMode mode = IsoMode::Abstract);

}  // namespace circgraph

#endif  // CIRCGRAPH_ISOMORPHISM_HPP
