#ifndef CIRCGRAPH_GRAPH_HPP
#define CIRCGRAPH_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace circgraph {

/// Raised for malformed input: unknown labels, violated preconditions,
/// structurally invalid graphs. The message names the offending item.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { U = 0, W = 1 };

using Label = std::string;
using LabelEdge = std::pair<Label, Label>;

/// Undirected simple graph over opaque text labels.
///
/// Vertices keep their declaration order; index i refers to labels()[i].
/// A graph may carry a recorded two-sided partition (sides()), which is
/// what part-respecting isomorphism looks at. Values are immutable.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws InputError on duplicate labels, empty labels, loops, duplicate
  /// edges and edges naming undeclared vertices.
  SimpleGraph(std::vector<Label> vertices, const std::vector<LabelEdge>& edges);

  /// Index-based construction for derived graphs. `sides` is either empty
  /// or one entry per vertex.
  static SimpleGraph from_indices(std::vector<Label> vertices,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                  std::vector<Side> sides = {});

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t v) const { return labels_.at(v); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws InputError naming the label.
  std::size_t index(std::string_view label) const;

  /// Sorted ascending by index.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool adjacent(std::size_t a, std::size_t b) const;

  /// Every edge once as (a, b) with a < b, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

  bool has_bipartition() const { return !sides_.empty(); }
  const std::vector<Side>& sides() const { return sides_; }

  /// Same vertices and edges with the partition dropped.
  SimpleGraph without_bipartition() const;

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Side> sides_;
  std::size_t edge_count_ = 0;
};

/// Bipartite graph with declared point part U and circle part W.
///
/// The underlying SimpleGraph stores U first (indices 0..|U|-1) followed by
/// W, so `graph().index(label)` and the part-local accessors agree.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws InputError carrying every problem reported by validate_bipartite.
  static BipartiteGraph create(std::vector<Label> part_u, std::vector<Label> part_w,
                               const std::vector<LabelEdge>& edges);

  /// Internal constructor for already-checked index data. Edge (i, j) joins
  /// U-vertex i with W-vertex j.
  static BipartiteGraph from_parts(std::vector<Label> part_u, std::vector<Label> part_w,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const SimpleGraph& graph() const { return graph_; }
  std::size_t u_count() const { return u_count_; }
  std::size_t w_count() const { return graph_.order() - u_count_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  std::span<const Label> part_u() const;
  std::span<const Label> part_w() const;

  /// Vertex index (in graph()) of the j-th circle.
  std::size_t w_vertex(std::size_t j) const { return u_count_ + j; }
  bool is_u(std::size_t v) const { return v < u_count_; }

  /// Edges as (u label, w label), sorted lexicographically.
  std::vector<LabelEdge> labeled_edges() const;

 private:
  SimpleGraph graph_;
  std::size_t u_count_ = 0;
};

/// Outcome of validate_bipartite: either a graph or every problem found.
struct BipartiteValidation {
  bool ok() const { return problems.empty(); }

  std::optional<BipartiteGraph> graph;
  std::vector<std::string> problems;
};

/// Checks parts and edges, collecting every violation: empty or duplicate
/// labels within a part, labels in both parts, edges inside a part, edges
/// with undeclared endpoints, duplicate edges. Edges may be listed in
/// either orientation.
BipartiteValidation validate_bipartite(const std::vector<Label>& part_u,
                                       const std::vector<Label>& part_w,
                                       const std::vector<LabelEdge>& edges);

/// Hop count or the distinguished Unreachable value. Unreachable compares
/// greater than every finite distance.
class Distance {
 public:
  constexpr explicit Distance(unsigned hops) : hops_(hops) {}
  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool reachable() const { return hops_.has_value(); }
  /// Precondition: reachable().
  constexpr unsigned hops() const { return *hops_; }

  std::string to_string() const;

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.reachable() != b.reachable()) {
      return a.reachable() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!a.reachable()) return std::strong_ordering::equal;
    return a.hops() <=> b.hops();
  }

 private:
  constexpr Distance() = default;
  std::optional<unsigned> hops_;
};

struct MetricSummary {
  std::map<Label, Distance> eccentricities;
  Distance diameter = Distance::unreachable();
  Distance radius = Distance::unreachable();
  bool connected = false;
};

/// Vertices adjacent to every member of `members`, sorted by label.
std::vector<Label> common_neighbors(const SimpleGraph& g, const std::vector<Label>& members);
std::vector<Label> common_neighbors(const BipartiteGraph& g, const std::vector<Label>& members);

/// Index form; result ascending by index. Empty `members` is rejected.
std::vector<std::size_t> common_neighbor_indices(const SimpleGraph& g,
                                                 std::span<const std::size_t> members);

/// Breadth-first distances from one source to every vertex, by index.
std::vector<Distance> distances_from(const SimpleGraph& g, std::size_t source);

Distance distance(const SimpleGraph& g, std::string_view a, std::string_view b);
Distance distance(const BipartiteGraph& g, std::string_view a, std::string_view b);

MetricSummary metric_summary(const SimpleGraph& g);
MetricSummary metric_summary(const BipartiteGraph& g);

/// g1 followed by g2. When the label sets overlap, every label gets a copy
/// suffix ("#1" or "#2"). The partition survives only if both inputs carry one.
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);

/// Vertices in `keep`, in their original order, with all edges among them.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Label>& keep);
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<Label>& keep);

/// Reads a graph with a recorded partition as a BipartiteGraph (U = side U,
/// vertices in original order). Throws if there is no partition or an edge
/// stays inside one side.
BipartiteGraph as_bipartite(const SimpleGraph& g);

/// Number of connected components.
std::size_t component_count(const SimpleGraph& g);

}  // namespace circgraph

#endif  // CIRCGRAPH_GRAPH_HPP
