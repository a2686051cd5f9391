#include "circgraph/suite.hpp"

#include "circgraph/constructions.hpp"
#include "circgraph/isomorphism.hpp"

namespace circgraph {

TheoremReport verify_linear_derivations(const BipartiteGraph& g) {
  TheoremReport r;
  r.id = TheoremId::LinearDerivation;
  const auto c = classify(g);
  if (c.verdict != Verdict::NonTrivialCircular) {
    r.reason = "input classified " + std::string(to_string(c.verdict));
    return r;
  }
  r.status = Status::Pass;
  std::size_t pivots = 0;
  for (const auto& pivot : g.part_u()) {
    ++pivots;
    const auto linear = check_linear_axioms(derive_linear(g, pivot));
    if (linear.status != Status::Pass) {
      r.status = Status::Fail;
      r.counterexample = {pivot};
      r.reason = "derived graph fails the linear axioms: " + linear.reason;
      break;
    }
  }
  r.evidence["pivots_checked"] = pivots;
  return r;
}

TheoremReport verify_neighborhood_doubling(const BipartiteGraph& g) {
  TheoremReport r;
  r.id = TheoremId::NeighborhoodDoubling;
  const auto c = classify(g);
  if (!c.circular()) {
    r.reason = "input classified " + std::string(to_string(c.verdict));
    return r;
  }
  const auto neighborhood = neighborhood_graph(g);
  const auto doubled = disjoint_union(g.graph(), g.graph());
  const auto cert = are_isomorphic(neighborhood, doubled, IsoMode::Abstract);
  r.status = cert.isomorphic ? Status::Pass : Status::Fail;
  r.evidence["neighborhood_order"] = neighborhood.order();
  r.evidence["neighborhood_edges"] = neighborhood.edge_count();
  r.evidence["components"] = component_count(neighborhood);
  r.evidence["mapping_replayed"] = cert.isomorphic;
  if (!cert.isomorphic) r.reason = "neighbourhood graph is not isomorphic to two disjoint copies";
  return r;
}

std::vector<TheoremReport> theorem_suite(const BipartiteGraph& g) {
  auto reports = verify_all(g);
  reports.push_back(verify_linear_derivations(g));
  reports.push_back(verify_neighborhood_doubling(g));
  return reports;
}

}  // namespace circgraph
