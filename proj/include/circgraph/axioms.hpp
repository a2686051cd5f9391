#ifndef CIRCGRAPH_AXIOMS_HPP
#define CIRCGRAPH_AXIOMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circgraph/graph.hpp"
#include "json.hpp"

namespace circgraph {

enum class Verdict { NotCircular, TrivialCircular, NonTrivialCircular };

enum class ViolationKind { TripleUncovered, TripleOvercovered, CircleDegreeTooSmall, PartError };

/// A concrete reason a graph is not circular. `vertices` is the offending
/// point triple, or the single offending circle; `observed` is the common
/// neighbour count or degree found there. Re-evaluating the vertices on the
/// input reproduces `observed`.
struct Violation {
  ViolationKind kind = ViolationKind::PartError;
  std::vector<Label> vertices;
  std::size_t observed = 0;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CircularClassification {
  Verdict verdict = Verdict::NotCircular;
  std::optional<Violation> witness;
  /// True iff |U| < 3, so no point triple exists.
  bool triple_axiom_vacuous = false;
  /// Orientation and edge-case remarks; informational only.
  std::vector<std::string> notes;

  bool circular() const { return verdict != Verdict::NotCircular; }
};

enum class TheoremId {
  WPairBound,
  PointDegrees,
  DistanceProfile,
  MetricBounds,
  LinearAxioms,
  LinearDerivation,
  NeighborhoodDoubling,
};

enum class Status { Pass, Fail, NotApplicable };

/// Result of checking one structural claim on a single graph. A Fail always
/// carries a counterexample that can be replayed against the input.
struct TheoremReport {
  TheoremId id = TheoremId::WPairBound;
  Status status = Status::NotApplicable;
  nlohmann::json evidence = nlohmann::json::object();
  std::vector<Label> counterexample;
  std::string reason;
};

std::string_view to_string(Verdict v);
std::string_view to_string(ViolationKind k);
std::string_view to_string(TheoremId id);
std::string_view to_string(Status s);

/// Integer hop count, or the string "unreachable".
nlohmann::json distance_json(Distance d);

/// Decides circularity: every point triple has exactly one common circle
/// and every circle has degree at least 3.
///
/// Circle degrees are checked first (circles in label order), then point
/// triples in lexicographic order of their sorted labels; the first failure
/// becomes the witness. Graphs with no circles and fewer than three points
/// are rejected with PartError. A passing graph with a single circle is the
/// trivial star; two or more circles make it non-trivial.
CircularClassification classify(const BipartiteGraph& g);

/// Max common-neighbour count over circle pairs must be at most 2.
TheoremReport verify_w_pair_bound(const BipartiteGraph& g);

/// Non-trivial circular graphs have every point degree at least 3.
TheoremReport verify_point_degrees(const BipartiteGraph& g);

/// Non-trivial circular graphs: point pairs at distance 2, circle pairs at
/// 2 or 4, point-circle pairs at 1 or 3.
TheoremReport verify_distance_profile(const BipartiteGraph& g);

/// Trivial: diameter 2 and radius 1. Non-trivial: diameter in [3, 4] and
/// radius 3.
TheoremReport verify_metric_bounds(const BipartiteGraph& g);

/// Linear-graph axioms: every pair of distinct points has exactly one
/// common neighbour, and every vertex has degree at least 2.
TheoremReport check_linear_axioms(const BipartiteGraph& g);

/// Every theorem check above except the linear axioms, in a fixed order.
std::vector<TheoremReport> verify_all(const BipartiteGraph& g);

}  // namespace circgraph

#endif  // CIRCGRAPH_AXIOMS_HPP
