#include "circgraph/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include "circgraph/constructions.hpp"

namespace circgraph {

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(int u_size) : u_size_(u_size) {
    std::vector<std::uint32_t> triples;
    for (int a = 0; a < u_size; ++a)
      for (int b = a + 1; b < u_size; ++b)
        for (int c = b + 1; c < u_size; ++c) triples.push_back((1u << a) | (1u << b) | (1u << c));
    all_ = triples.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << triples.size()) - 1;

    candidates_.resize(triples.size());
    for (std::uint32_t block = 1; block < (1u << u_size); ++block) {
      if (std::popcount(block) < 3) continue;
      std::uint64_t covers = 0;
      for (std::size_t t = 0; t < triples.size(); ++t) {
        if ((triples[t] & block) == triples[t]) covers |= std::uint64_t{1} << t;
      }
      for (std::size_t t = 0; t < triples.size(); ++t) {
        if (covers >> t & 1) candidates_[t].push_back({block, covers});
      }
    }
  }

  std::size_t root_choices() const { return candidates_.empty() ? 0 : candidates_[0].size(); }

  // Families whose block through the first triple is root choice `choice`.
  void run_branch(std::size_t choice, std::vector<BlockFamily>& out) const {
    const auto& [block, covers] = candidates_[0][choice];
    BlockFamily family{block};
    recurse(covers, family, out);
  }

 private:
  struct Candidate {
    std::uint32_t block;
    std::uint64_t covers;
  };

  void recurse(std::uint64_t covered, BlockFamily& family, std::vector<BlockFamily>& out) const {
    if (covered == all_) {
      BlockFamily sorted = family;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    const auto t = static_cast<std::size_t>(std::countr_one(covered));
    for (const auto& c : candidates_[t]) {
      if (c.covers & covered) continue;
      family.push_back(c.block);
      recurse(covered | c.covers, family, out);
      family.pop_back();
    }
  }

  int u_size_;
  std::uint64_t all_ = 0;
  std::vector<std::vector<Candidate>> candidates_;
};

// Runs job(i) for i in [0, count) over `workers` threads, striding.
template <typename Job>
void parallel_for(std::size_t count, unsigned workers, Job job) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) job(i, 0u);
    return;
  }
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) job(i, w);
    });
  }
}

std::vector<std::size_t> sorted_degrees(const BipartiteGraph& g, bool points) {
  std::vector<std::size_t> out;
  const std::size_t begin = points ? 0 : g.u_count();
  const std::size_t end = points ? g.u_count() : g.order();
  for (std::size_t v = begin; v < end; ++v) out.push_back(g.graph().degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

CensusEntry make_entry(BipartiteGraph g, CanonicalForm form, Verdict verdict) {
  CensusEntry e;
  const auto metrics = metric_summary(g);
  e.canonical = std::move(form);
  e.u_size = g.u_count();
  e.w_size = g.w_count();
  e.verdict = verdict;
  e.diameter = metrics.diameter;
  e.radius = metrics.radius;
  e.u_degrees = sorted_degrees(g, true);
  e.w_degrees = sorted_degrees(g, false);
  e.graph = std::move(g);
  return e;
}

}  // namespace

std::vector<BlockFamily> circular_block_families(int u_size, unsigned workers) {
  if (u_size < 3 || u_size > 7) {
    throw InputError("circular census needs 3 <= u_size <= 7; got " + std::to_string(u_size));
  }
  const CoverSearch search(u_size);
  const std::size_t roots = search.root_choices();
  std::vector<std::vector<BlockFamily>> per_root(roots);
  parallel_for(roots, workers, [&](std::size_t i, unsigned) { search.run_branch(i, per_root[i]); });

  std::vector<BlockFamily> all;
  for (auto& part : per_root) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

BipartiteGraph family_graph(int u_size, const BlockFamily& family) {
  Design d;
  for (int i = 1; i <= u_size; ++i) d.points.push_back("p" + std::to_string(i));
  for (std::uint32_t block : family) {
    std::vector<Label> members;
    for (int i = 0; i < u_size; ++i) {
      if (block >> i & 1u) members.push_back(d.points[static_cast<std::size_t>(i)]);
    }
    d.blocks.push_back(std::move(members));
  }
  return from_design(d);
}

std::vector<CensusEntry> enumerate_circular(int u_size, unsigned workers) {
  const auto families = circular_block_families(u_size, workers);

  struct Found {
    CanonicalForm form;
    const BlockFamily* family;
    Verdict verdict;
  };
  std::vector<Found> found(families.size());
  parallel_for(families.size(), workers, [&](std::size_t i, unsigned) {
    const auto g = family_graph(u_size, families[i]);
    const auto c = classify(g);
    if (!c.circular()) throw std::logic_error("census admitted a family that classify rejects");
    found[i] = Found{canonical_form(g, IsoMode::PartRespecting), &families[i], c.verdict};
  });

  // Families are sorted, so within a class the stable sort keeps the
  // smallest family first; that one becomes the representative.
  std::stable_sort(found.begin(), found.end(),
                   [](const Found& a, const Found& b) { return compare_forms(a.form, b.form) < 0; });
  std::vector<CensusEntry> census;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!census.empty() && found[i].form.same_graph(census.back().canonical)) continue;
    auto g = family_graph(u_size, *found[i].family);
    census.push_back(make_entry(std::move(g), std::move(found[i].form), found[i].verdict));
  }
  return census;
}

std::vector<SimpleGraph> free_trees(int n) {
  if (n < 1 || n > 10) throw InputError("free tree generation needs 1 <= n <= 10; got " + std::to_string(n));
  const auto size = static_cast<std::size_t>(n);
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= size; ++i) labels.push_back("v" + std::to_string(i));

  // Rooted trees as level sequences, root at level 1, starting from the path.
  std::vector<std::size_t> level(size);
  for (std::size_t i = 0; i < size; ++i) level[i] = i + 1;

  std::vector<std::pair<CanonicalForm, SimpleGraph>> classes;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < size; ++i) {
      std::size_t parent = i - 1;
      while (level[parent] != level[i] - 1) --parent;
      edges.emplace_back(parent, i);
    }
    auto g = SimpleGraph::from_indices(labels, edges);
    auto form = canonical_form(g, IsoMode::Abstract);
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const auto& c) { return c.first.same_graph(form); });
    if (!seen) classes.emplace_back(std::move(form), std::move(g));

    // Successor: last position deeper than level 2 ...
    std::size_t p = size;
    for (std::size_t i = size; i-- > 1;) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == size) break;
    // ... copies the subtree pattern starting at its previous sibling level.
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < size; ++i) level[i] = level[i - (p - q)];
  }

  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return compare_forms(a.first, b.first) < 0; });
  std::vector<SimpleGraph> out;
  for (auto& c : classes) out.push_back(std::move(c.second));
  return out;
}

std::vector<CensusEntry> enumerate_circular_trees(int max_n) {
  if (max_n < 1 || max_n > 10) throw InputError("tree census needs 1 <= max_n <= 10; got " + std::to_string(max_n));
  std::vector<CensusEntry> census;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& tree : free_trees(n)) {
      std::vector<int> colour(tree.order(), -1);
      colour[0] = 0;
      std::vector<std::size_t> stack{0};
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t x : tree.neighbors(v)) {
          if (colour[x] < 0) {
            colour[x] = 1 - colour[v];
            stack.push_back(x);
          }
        }
      }
      for (int u_colour : {0, 1}) {
        std::vector<Label> part_u, part_w;
        std::vector<std::size_t> local(tree.order());
        for (std::size_t v = 0; v < tree.order(); ++v) {
          auto& part = colour[v] == u_colour ? part_u : part_w;
          local[v] = part.size();
          part.push_back(tree.label(v));
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto [a, b] : tree.edge_list()) {
          if (colour[a] == u_colour) edges.emplace_back(local[a], local[b]);
          else edges.emplace_back(local[b], local[a]);
        }
        auto g = BipartiteGraph::from_parts(std::move(part_u), std::move(part_w), edges);
        const auto c = classify(g);
        if (!c.circular()) continue;
        auto form = canonical_form(g, IsoMode::PartRespecting);
        const bool seen = std::any_of(census.begin(), census.end(),
                                      [&](const CensusEntry& e) { return e.canonical.same_graph(form); });
        if (!seen) census.push_back(make_entry(std::move(g), std::move(form), c.verdict));
      }
    }
  }
  std::stable_sort(census.begin(), census.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return compare_forms(a.canonical, b.canonical) < 0;
  });
  return census;
}

CircularClassification brute_force_classify(const BipartiteGraph& g) {
  const auto part_u = g.part_u();
  const auto part_w = g.part_w();
  std::vector<Label> points(part_u.begin(), part_u.end());
  std::vector<Label> circles(part_w.begin(), part_w.end());
  std::sort(points.begin(), points.end());
  std::sort(circles.begin(), circles.end());
  const auto edge_list = g.labeled_edges();
  const std::set<LabelEdge> incident(edge_list.begin(), edge_list.end());

  CircularClassification c;
  c.triple_axiom_vacuous = points.size() < 3;

  for (const auto& w : circles) {
    std::size_t degree = 0;
    for (const auto& u : points) {
      if (incident.count({u, w})) ++degree;
    }
    if (degree < 3) {
      c.witness = Violation{ViolationKind::CircleDegreeTooSmall, {w}, degree, "degree below 3"};
      return c;
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        std::size_t cn = 0;
        for (const auto& w : circles) {
          if (incident.count({points[i], w}) && incident.count({points[j], w}) && incident.count({points[k], w})) {
            ++cn;
          }
        }
        if (cn != 1) {
          c.witness = Violation{cn == 0 ? ViolationKind::TripleUncovered : ViolationKind::TripleOvercovered,
                                {points[i], points[j], points[k]},
                                cn,
                                "triple not covered exactly once"};
          return c;
        }
      }
    }
  }
  if (circles.empty()) {
    c.witness = Violation{ViolationKind::PartError, {}, 0, "no circles"};
    return c;
  }
  c.verdict = circles.size() == 1 ? Verdict::TrivialCircular : Verdict::NonTrivialCircular;
  return c;
}

}  // namespace circgraph
