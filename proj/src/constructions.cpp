#include "circgraph/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "circgraph/axioms.hpp"

namespace circgraph {

namespace {

std::string block_label(const std::vector<std::size_t>& members) {
  std::string s = "b{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members[i] + 1);
  }
  return s + "}";
}

}  // namespace

BipartiteGraph star(int n) {
  if (n < 4) throw InputError("star(n) needs n >= 4 so the centre has degree >= 3; got " + std::to_string(n));
  std::vector<Label> leaves;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 1; i < n; ++i) {
    leaves.push_back("u" + std::to_string(i));
    edges.emplace_back(static_cast<std::size_t>(i - 1), 0);
  }
  return BipartiteGraph::from_parts(std::move(leaves), {"w"}, edges);
}

BipartiteGraph triangular(int n) {
  if (n < 3) throw InputError("triangular(n) needs n >= 3; got " + std::to_string(n));
  const auto count = static_cast<std::size_t>(n);
  std::vector<Label> points;
  for (std::size_t i = 1; i <= count; ++i) points.push_back("p" + std::to_string(i));
  std::vector<Label> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      for (std::size_t c = b + 1; c < count; ++c) {
        const std::size_t j = blocks.size();
        blocks.push_back(block_label({a, b, c}));
        edges.emplace_back(a, j);
        edges.emplace_back(b, j);
        edges.emplace_back(c, j);
      }
    }
  }
  return BipartiteGraph::from_parts(std::move(points), std::move(blocks), edges);
}

SimpleGraph neighborhood_graph(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::unordered_set<Label> used(g.labels().begin(), g.labels().end());
  std::vector<Label> labels = g.labels();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw InputError("vertex '" + g.label(v) + "' is isolated; its open neighbourhood is empty");
    }
    Label name = "n_" + g.label(v);
    while (used.count(name)) name += '\'';
    used.insert(name);
    labels.push_back(std::move(name));
  }
  // u ~ n_v iff u in N(v)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : g.neighbors(v)) edges.emplace_back(u, n + v);
  }
  std::vector<Side> sides(2 * n, Side::W);
  std::fill_n(sides.begin(), n, Side::U);
  return SimpleGraph::from_indices(std::move(labels), edges, std::move(sides));
}

SimpleGraph neighborhood_graph(const BipartiteGraph& g) { return neighborhood_graph(g.graph()); }

BipartiteGraph derive_linear(const BipartiteGraph& g, std::string_view pivot) {
  const auto& sg = g.graph();
  const auto p = sg.find(pivot);
  if (!p || !g.is_u(*p)) throw InputError("pivot '" + std::string(pivot) + "' is not a point of the graph");
  const auto c = classify(g);
  if (c.verdict != Verdict::NonTrivialCircular) {
    throw InputError("linear derivation needs a non-trivial circular graph; input is " +
                     std::string(to_string(c.verdict)));
  }
  std::vector<Label> keep;
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    if (u != *p) keep.push_back(sg.label(u));
  }
  for (std::size_t w : sg.neighbors(*p)) keep.push_back(sg.label(w));
  return induced_subgraph(g, keep);
}

BipartiteGraph from_design(const Design& d) {
  std::map<Label, std::size_t> position;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    if (d.points[i].empty()) throw InputError("empty point label");
    if (!position.emplace(d.points[i], i).second) {
      throw InputError("duplicate point label '" + d.points[i] + "'");
    }
  }

  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    std::set<std::size_t> members;
    for (const auto& label : d.blocks[b]) {
      auto it = position.find(label);
      if (it == position.end()) {
        throw InputError("block " + std::to_string(b) + " names unknown point '" + label + "'");
      }
      if (!members.insert(it->second).second) {
        throw InputError("block " + std::to_string(b) + " repeats point '" + label + "'");
      }
    }
    if (members.size() < 3) {
      throw InputError("block " + std::to_string(b) + " has " + std::to_string(members.size()) +
                       " points; every circle must contain at least three distinct points");
    }
    blocks.emplace_back(members.begin(), members.end());
  }
  std::sort(blocks.begin(), blocks.end());
  if (auto dup = std::adjacent_find(blocks.begin(), blocks.end()); dup != blocks.end()) {
    throw InputError("duplicate block " + block_label(*dup));
  }

  std::vector<Label> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    labels.push_back(block_label(blocks[j]));
    for (std::size_t p : blocks[j]) edges.emplace_back(p, j);
  }
  // Block labels use positions, so they can collide with a point label.
  for (const auto& l : labels) {
    if (position.count(l)) throw InputError("block label '" + l + "' collides with a point label");
  }
  return BipartiteGraph::from_parts(d.points, std::move(labels), edges);
}

}  // namespace circgraph
