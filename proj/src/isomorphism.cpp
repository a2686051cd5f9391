#include "circgraph/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circgraph {

namespace {

using Colouring = std::vector<std::size_t>;

// Replaces colour values by their dense rank, keeping their order.
std::size_t compress(Colouring& colours) {
  Colouring sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& c : colours) c = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  return sorted.size();
}

// Colour refinement to the coarsest stable partition finer than the input.
// A vertex's next colour is the rank of (colour, sorted neighbour colours),
// so classes keep their relative order and never merge.
std::size_t refine(const SimpleGraph& g, Colouring& colours) {
  const std::size_t n = g.order();
  std::size_t classes = compress(colours);
  std::vector<std::vector<std::size_t>> signature(n);
  std::vector<std::size_t> order(n);
  while (classes < n) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colours[v]);
      for (std::size_t x : g.neighbors(v)) sig.push_back(colours[x]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return signature[a] < signature[b]; });
    Colouring next(n);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const std::size_t next_classes = n == 0 ? 0 : rank + 1;
    colours.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return classes;
}

struct Leaf {
  std::vector<bool> code;
  Colouring position;  // vertex -> canonical position
  std::vector<std::size_t> path;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.order()) {}

  Leaf run(Colouring initial) {
    refine(g_, initial);
    explore(initial, 0);
    return *best_;
  }

 private:
  std::vector<bool> leaf_code(const Colouring& position) const {
    std::vector<std::size_t> vertex_at(n_);
    for (std::size_t v = 0; v < n_; ++v) vertex_at[position[v]] = v;
    std::vector<bool> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) code.push_back(g_.adjacent(vertex_at[i], vertex_at[j]));
    }
    return code;
  }

  static std::size_t common_prefix(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t d = 0;
    while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
    return d;
  }

  // Maps each vertex at position p in `from` to the vertex at p in `to`.
  std::vector<std::size_t> automorphism(const Colouring& from, const Colouring& to) const {
    std::vector<std::size_t> vertex_at(n_);
    for (std::size_t v = 0; v < n_; ++v) vertex_at[to[v]] = v;
    std::vector<std::size_t> gamma(n_);
    for (std::size_t v = 0; v < n_; ++v) gamma[v] = vertex_at[from[v]];
    return gamma;
  }

  // Returns the depth at which the search resumes. A return value below the
  // caller's depth means the caller's whole subtree is equivalent to one
  // already explored.
  std::size_t explore(const Colouring& colours, std::size_t depth) {
    std::vector<std::size_t> cell_size(n_, 0);
    for (std::size_t c : colours) ++cell_size[c];

    std::size_t target = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (cell_size[c] > 1 && (target == n_ || cell_size[c] < cell_size[target])) target = c;
    }
    if (target == n_) return visit_leaf(colours, depth);

    std::vector<std::size_t> cell;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colours[v] == target) cell.push_back(v);
    }

    std::vector<std::size_t> explored;
    std::size_t orbits_from = 0;
    std::optional<UnionFind> orbits;
    for (std::size_t v : cell) {
      if (!explored.empty()) {
        if (!orbits || orbits_from != automorphisms_.size()) {
          orbits = stabilizer_orbits();
          orbits_from = automorphisms_.size();
        }
        const std::size_t root = orbits->find(v);
        const bool equivalent = std::any_of(explored.begin(), explored.end(),
                                            [&](std::size_t y) { return orbits->find(y) == root; });
        if (equivalent) continue;
      }
      Colouring child(n_);
      for (std::size_t x = 0; x < n_; ++x) child[x] = 2 * colours[x] + (x == v ? 0 : 1);
      refine(g_, child);
      path_.push_back(v);
      const std::size_t resume = explore(child, depth + 1);
      path_.pop_back();
      explored.push_back(v);
      if (resume < depth) return resume;
    }
    return depth;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise.
  UnionFind stabilizer_orbits() const {
    UnionFind uf(n_);
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::size_t v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  std::size_t visit_leaf(const Colouring& position, std::size_t depth) {
    auto code = leaf_code(position);
    if (!first_) {
      first_ = Leaf{std::move(code), position, path_};
      best_ = first_;
      return depth;
    }
    for (const Leaf* known : {&*first_, &*best_}) {
      if (code == known->code) {
        automorphisms_.push_back(automorphism(position, known->position));
        return common_prefix(path_, known->path);
      }
    }
    if (code < best_->code) best_ = Leaf{std::move(code), position, path_};
    return depth;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> path_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

}  // namespace

std::string CanonicalForm::code() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (Side s : sides) out += s == Side::U ? 'u' : 'w';
  out += ':';
  for (std::size_t i = 0; i < adjacency.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (i + b < adjacency.size() && adjacency[i + b]) nibble |= 1;
    }
    out += kHex[nibble];
  }
  return out;
}

std::strong_ordering compare_forms(const CanonicalForm& a, const CanonicalForm& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.sides <=> b.sides; c != 0) return c;
  if (a.adjacency < b.adjacency) return std::strong_ordering::less;
  if (b.adjacency < a.adjacency) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

CanonicalForm canonical_form(const SimpleGraph& g, IsoMode mode) {
  const std::size_t n = g.order();
  Colouring initial(n, 0);
  if (mode == IsoMode::PartRespecting) {
    if (!g.has_bipartition()) throw InputError("part-respecting canonical form needs a recorded bipartition");
    for (std::size_t v = 0; v < n; ++v) initial[v] = static_cast<std::size_t>(g.sides()[v]);
  }

  CanonicalForm form;
  form.n = n;
  if (n == 0) return form;

  const Leaf leaf = CanonicalSearch(g).run(std::move(initial));
  form.adjacency = leaf.code;
  for (std::size_t v = 0; v < n; ++v) form.relabeling.emplace(g.label(v), leaf.position[v]);
  if (mode == IsoMode::PartRespecting) {
    form.sides.resize(n);
    for (std::size_t v = 0; v < n; ++v) form.sides[leaf.position[v]] = g.sides()[v];
  }
  return form;
}

CanonicalForm canonical_form(const BipartiteGraph& g, IsoMode mode) { return canonical_form(g.graph(), mode); }

bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::map<Label, Label>& mapping,
                    IsoMode mode) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count() || mapping.size() != g1.order()) {
    return false;
  }
  std::vector<std::size_t> image(g1.order());
  std::vector<bool> hit(g2.order(), false);
  for (std::size_t v = 0; v < g1.order(); ++v) {
    auto it = mapping.find(g1.label(v));
    if (it == mapping.end()) return false;
    const auto target = g2.find(it->second);
    if (!target || hit[*target]) return false;
    hit[*target] = true;
    image[v] = *target;
  }
  if (mode == IsoMode::PartRespecting) {
    if (!g1.has_bipartition() || !g2.has_bipartition()) return false;
    for (std::size_t v = 0; v < g1.order(); ++v) {
      if (g1.sides()[v] != g2.sides()[image[v]]) return false;
    }
  }
  // Injective on vertices and equal edge counts, so edges onto edges is enough.
  for (auto [a, b] : g1.edge_list()) {
    if (!g2.adjacent(image[a], image[b])) return false;
  }
  return true;
}

IsoCertificate are_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2, IsoMode mode) {
  IsoCertificate cert;
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return cert;
  const auto f1 = canonical_form(g1, mode);
  const auto f2 = canonical_form(g2, mode);
  if (!f1.same_graph(f2)) return cert;

  std::vector<const Label*> at_position(g2.order());
  for (const auto& [label, pos] : f2.relabeling) at_position[pos] = &label;
  std::map<Label, Label> mapping;
  for (const auto& [label, pos] : f1.relabeling) mapping.emplace(label, *at_position[pos]);
  if (!is_isomorphism(g1, g2, mapping, mode)) {
    throw std::logic_error("canonical forms agree but the composed mapping is not an isomorphism");
  }
  cert.isomorphic = true;
  cert.mapping = std::move(mapping);
  return cert;
}

IsoCertificate are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2, IsoMode mode) {
  return are_isomorphic(g1.graph(), g2.graph(), mode);
}

}  // namespace circgraph
