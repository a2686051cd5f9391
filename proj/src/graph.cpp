#include "circgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace circgraph {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string edge_text(std::string_view a, std::string_view b) {
  return "(" + std::string(a) + ", " + std::string(b) + ")";
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<Label> vertices, const std::vector<LabelEdge>& edges) {
  std::unordered_map<Label, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw InputError("empty vertex label");
    if (!index.emplace(vertices[i], i).second) {
      throw InputError("duplicate vertex label " + quoted(vertices[i]));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(edges.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge " + edge_text(a, b) + " names unknown vertex " + quoted(a));
    if (ib == index.end()) throw InputError("edge " + edge_text(a, b) + " names unknown vertex " + quoted(b));
    if (ia->second == ib->second) throw InputError("loop at vertex " + quoted(a));
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) throw InputError("duplicate edge " + edge_text(a, b));
    pairs.emplace_back(key);
  }
  *this = from_indices(std::move(vertices), pairs);
}

SimpleGraph SimpleGraph::from_indices(std::vector<Label> vertices,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      std::vector<Side> sides) {
  if (!sides.empty() && sides.size() != vertices.size()) {
    throw InputError("partition size does not match vertex count");
  }
  SimpleGraph g;
  g.labels_ = std::move(vertices);
  g.sides_ = std::move(sides);
  g.adj_.resize(g.labels_.size());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);
  for (auto [a, b] : edges) {
    g.adj_.at(a).push_back(b);
    g.adj_.at(b).push_back(a);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = edges.size();
  return g;
}

std::optional<std::size_t> SimpleGraph::find(std::string_view label) const {
  auto it = index_.find(Label(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimpleGraph::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown vertex " + quoted(label));
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& nbrs = adj_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edge_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (std::size_t b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::without_bipartition() const {
  SimpleGraph g = *this;
  g.sides_.clear();
  return g;
}

BipartiteGraph BipartiteGraph::create(std::vector<Label> part_u, std::vector<Label> part_w,
                                      const std::vector<LabelEdge>& edges) {
  auto result = validate_bipartite(part_u, part_w, edges);
  if (!result.ok()) {
    std::string msg = "invalid bipartite graph:";
    for (const auto& p : result.problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  return std::move(*result.graph);
}

BipartiteGraph BipartiteGraph::from_parts(std::vector<Label> part_u, std::vector<Label> part_w,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t nu = part_u.size();
  std::vector<Label> vertices = std::move(part_u);
  vertices.insert(vertices.end(), std::make_move_iterator(part_w.begin()),
                  std::make_move_iterator(part_w.end()));
  std::vector<Side> sides(vertices.size(), Side::W);
  std::fill_n(sides.begin(), nu, Side::U);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(edges.size());
  for (auto [u, w] : edges) pairs.emplace_back(u, nu + w);
  BipartiteGraph g;
  g.graph_ = SimpleGraph::from_indices(std::move(vertices), pairs, std::move(sides));
  g.u_count_ = nu;
  return g;
}

std::span<const Label> BipartiteGraph::part_u() const {
  return std::span<const Label>(graph_.labels()).first(u_count_);
}

std::span<const Label> BipartiteGraph::part_w() const {
  return std::span<const Label>(graph_.labels()).subspan(u_count_);
}

std::vector<LabelEdge> BipartiteGraph::labeled_edges() const {
  std::vector<LabelEdge> out;
  out.reserve(edge_count());
  for (auto [a, b] : graph_.edge_list()) out.emplace_back(graph_.label(a), graph_.label(b));
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteValidation validate_bipartite(const std::vector<Label>& part_u,
                                       const std::vector<Label>& part_w,
                                       const std::vector<LabelEdge>& edges) {
  BipartiteValidation result;
  auto& problems = result.problems;

  std::unordered_map<Label, std::size_t> u_index;
  std::unordered_map<Label, std::size_t> w_index;
  for (std::size_t i = 0; i < part_u.size(); ++i) {
    if (part_u[i].empty()) problems.push_back("empty label in part U");
    else if (!u_index.emplace(part_u[i], i).second) problems.push_back("duplicate label " + quoted(part_u[i]) + " in part U");
  }
  for (std::size_t j = 0; j < part_w.size(); ++j) {
    if (part_w[j].empty()) problems.push_back("empty label in part W");
    else if (!w_index.emplace(part_w[j], j).second) problems.push_back("duplicate label " + quoted(part_w[j]) + " in part W");
  }
  for (const auto& label : part_u) {
    if (w_index.count(label)) problems.push_back("label " + quoted(label) + " appears in both parts");
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : edges) {
    const bool au = u_index.count(a) > 0, aw = w_index.count(a) > 0;
    const bool bu = u_index.count(b) > 0, bw = w_index.count(b) > 0;
    if (!au && !aw) {
      problems.push_back("edge " + edge_text(a, b) + " names unknown vertex " + quoted(a));
      continue;
    }
    if (!bu && !bw) {
      problems.push_back("edge " + edge_text(a, b) + " names unknown vertex " + quoted(b));
      continue;
    }
    std::size_t u, w;
    if (au && bw) {
      u = u_index[a];
      w = w_index[b];
    } else if (aw && bu) {
      u = u_index[b];
      w = w_index[a];
    } else {
      problems.push_back("edge " + edge_text(a, b) + " lies inside part " + (au ? "U" : "W"));
      continue;
    }
    if (!seen.emplace(u, w).second) {
      problems.push_back("duplicate edge " + edge_text(a, b));
      continue;
    }
    pairs.emplace_back(u, w);
  }

  if (problems.empty()) result.graph = BipartiteGraph::from_parts(part_u, part_w, pairs);
  return result;
}

std::string Distance::to_string() const {
  return reachable() ? std::to_string(hops()) : std::string("unreachable");
}

std::vector<std::size_t> common_neighbor_indices(const SimpleGraph& g,
                                                 std::span<const std::size_t> members) {
  if (members.empty()) throw InputError("common neighbours of an empty vertex set");
  std::vector<std::size_t> acc = g.neighbors(members[0]);
  std::vector<std::size_t> next;
  for (std::size_t i = 1; i < members.size() && !acc.empty(); ++i) {
    const auto& nbrs = g.neighbors(members[i]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), nbrs.begin(), nbrs.end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

std::vector<Label> common_neighbors(const SimpleGraph& g, const std::vector<Label>& members) {
  std::vector<std::size_t> idx;
  idx.reserve(members.size());
  for (const auto& m : members) idx.push_back(g.index(m));
  std::vector<Label> out;
  for (std::size_t v : common_neighbor_indices(g, idx)) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> common_neighbors(const BipartiteGraph& g, const std::vector<Label>& members) {
  return common_neighbors(g.graph(), members);
}

std::vector<Distance> distances_from(const SimpleGraph& g, std::size_t source) {
  std::vector<Distance> dist(g.order(), Distance::unreachable());
  dist.at(source) = Distance(0);
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t x : g.neighbors(v)) {
      if (!dist[x].reachable()) {
        dist[x] = Distance(dist[v].hops() + 1);
        queue.push_back(x);
      }
    }
  }
  return dist;
}

Distance distance(const SimpleGraph& g, std::string_view a, std::string_view b) {
  const std::size_t ia = g.index(a);
  const std::size_t ib = g.index(b);
  return distances_from(g, ia)[ib];
}

Distance distance(const BipartiteGraph& g, std::string_view a, std::string_view b) {
  return distance(g.graph(), a, b);
}

MetricSummary metric_summary(const SimpleGraph& g) {
  if (g.empty()) throw InputError("metric summary of an empty graph");
  MetricSummary m;
  m.connected = true;
  Distance diameter(0);
  Distance radius = Distance::unreachable();
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto dist = distances_from(g, v);
    const Distance ecc = *std::max_element(dist.begin(), dist.end());
    if (!ecc.reachable()) m.connected = false;
    m.eccentricities.emplace(g.label(v), ecc);
    diameter = std::max(diameter, ecc);
    radius = std::min(radius, ecc);
  }
  if (m.connected) {
    m.diameter = diameter;
    m.radius = radius;
  }
  return m;
}

MetricSummary metric_summary(const BipartiteGraph& g) { return metric_summary(g.graph()); }

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  bool overlap = false;
  for (const auto& label : g2.labels()) {
    if (g1.find(label)) {
      overlap = true;
      break;
    }
  }
  std::vector<Label> labels;
  labels.reserve(g1.order() + g2.order());
  for (const auto& l : g1.labels()) labels.push_back(overlap ? l + "#1" : l);
  for (const auto& l : g2.labels()) labels.push_back(overlap ? l + "#2" : l);

  auto edges = g1.edge_list();
  const std::size_t offset = g1.order();
  for (auto [a, b] : g2.edge_list()) edges.emplace_back(a + offset, b + offset);

  std::vector<Side> sides;
  if (g1.has_bipartition() && g2.has_bipartition()) {
    sides = g1.sides();
    sides.insert(sides.end(), g2.sides().begin(), g2.sides().end());
  } else if (g1.empty() && g2.has_bipartition()) {
    sides = g2.sides();
  } else if (g2.empty() && g1.has_bipartition()) {
    sides = g1.sides();
  }
  return SimpleGraph::from_indices(std::move(labels), edges, std::move(sides));
}

namespace {

std::vector<bool> keep_mask(const SimpleGraph& g, const std::vector<Label>& keep) {
  std::vector<bool> mask(g.order(), false);
  for (const auto& label : keep) mask[g.index(label)] = true;
  return mask;
}

}  // namespace

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Label>& keep) {
  const auto mask = keep_mask(g, keep);
  std::vector<std::size_t> remap(g.order(), 0);
  std::vector<Label> labels;
  std::vector<Side> sides;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!mask[v]) continue;
    remap[v] = labels.size();
    labels.push_back(g.label(v));
    if (g.has_bipartition()) sides.push_back(g.sides()[v]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : g.edge_list()) {
    if (mask[a] && mask[b]) edges.emplace_back(remap[a], remap[b]);
  }
  return SimpleGraph::from_indices(std::move(labels), edges, std::move(sides));
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<Label>& keep) {
  const auto& sg = g.graph();
  const auto mask = keep_mask(sg, keep);
  std::vector<std::size_t> remap(sg.order(), 0);
  std::vector<Label> part_u, part_w;
  for (std::size_t v = 0; v < sg.order(); ++v) {
    if (!mask[v]) continue;
    auto& part = g.is_u(v) ? part_u : part_w;
    remap[v] = part.size();
    part.push_back(sg.label(v));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : sg.edge_list()) {
    // edge_list orders by index and U precedes W, so a is the point.
    if (mask[a] && mask[b]) edges.emplace_back(remap[a], remap[b]);
  }
  return BipartiteGraph::from_parts(std::move(part_u), std::move(part_w), edges);
}

BipartiteGraph as_bipartite(const SimpleGraph& g) {
  if (!g.has_bipartition()) throw InputError("graph has no recorded bipartition");
  std::vector<Label> part_u, part_w;
  std::vector<std::size_t> local(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto& part = g.sides()[v] == Side::U ? part_u : part_w;
    local[v] = part.size();
    part.push_back(g.label(v));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : g.edge_list()) {
    if (g.sides()[a] == g.sides()[b]) {
      throw InputError("edge (" + g.label(a) + ", " + g.label(b) + ") lies inside one side");
    }
    if (g.sides()[a] == Side::U) edges.emplace_back(local[a], local[b]);
    else edges.emplace_back(local[b], local[a]);
  }
  return BipartiteGraph::from_parts(std::move(part_u), std::move(part_w), edges);
}

std::size_t component_count(const SimpleGraph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t x : g.neighbors(v)) {
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
  }
  return count;
}

}  // namespace circgraph
