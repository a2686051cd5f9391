#include "circgraph/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace circgraph {

namespace {

// Membership set over a fixed universe, packed 64 per word.
class Bitset {
 public:
  explicit Bitset(std::size_t size) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  static std::size_t count_and(const Bitset& a, const Bitset& b, const Bitset& c) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
    }
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<std::size_t> sorted_by_label(const SimpleGraph& g, std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t v = begin; v < end; ++v) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [&](std::size_t a, std::size_t b) { return g.label(a) < g.label(b); });
  return out;
}

std::vector<std::size_t> sorted_u(const BipartiteGraph& g) {
  return sorted_by_label(g.graph(), 0, g.u_count());
}

std::vector<std::size_t> sorted_w(const BipartiteGraph& g) {
  return sorted_by_label(g.graph(), g.u_count(), g.order());
}

std::size_t common_count(const SimpleGraph& g, std::size_t a, std::size_t b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::size_t n = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

TheoremReport not_applicable(TheoremId id, std::string reason) {
  TheoremReport r;
  r.id = id;
  r.status = Status::NotApplicable;
  r.reason = std::move(reason);
  return r;
}

std::string verdict_reason(const CircularClassification& c) {
  return "input classified " + std::string(to_string(c.verdict));
}

nlohmann::json distance_set_json(const std::set<Distance>& s) {
  auto out = nlohmann::json::array();
  for (Distance d : s) out.push_back(distance_json(d));
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotCircular: return "NotCircular";
    case Verdict::TrivialCircular: return "TrivialCircular";
    case Verdict::NonTrivialCircular: return "NonTrivialCircular";
  }
  return "?";
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::TripleUncovered: return "TripleUncovered";
    case ViolationKind::TripleOvercovered: return "TripleOvercovered";
    case ViolationKind::CircleDegreeTooSmall: return "CircleDegreeTooSmall";
    case ViolationKind::PartError: return "PartError";
  }
  return "?";
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::WPairBound: return "w_pair_bound";
    case TheoremId::PointDegrees: return "point_degrees";
    case TheoremId::DistanceProfile: return "distance_profile";
    case TheoremId::MetricBounds: return "metric_bounds";
    case TheoremId::LinearAxioms: return "linear_axioms";
    case TheoremId::LinearDerivation: return "linear_derivation";
    case TheoremId::NeighborhoodDoubling: return "neighborhood_doubling";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::NotApplicable: return "NotApplicable";
  }
  return "?";
}

nlohmann::json distance_json(Distance d) {
  if (d.reachable()) return d.hops();
  return "unreachable";
}

CircularClassification classify(const BipartiteGraph& g) {
  const auto& sg = g.graph();
  CircularClassification c;
  c.triple_axiom_vacuous = g.u_count() < 3;

  if (g.u_count() == 1 && g.w_count() > 0) {
    c.notes.push_back("single point: no circle can reach degree 3, so the |U| = 1 trivial case is never circular");
  }

  const auto us = sorted_u(g);
  const auto ws = sorted_w(g);

  for (std::size_t w : ws) {
    if (sg.degree(w) < 3) {
      c.witness = Violation{ViolationKind::CircleDegreeTooSmall, {sg.label(w)}, sg.degree(w),
                            "circle " + sg.label(w) + " has degree " + std::to_string(sg.degree(w)) + " < 3"};
      return c;
    }
  }

  std::vector<Bitset> circles(g.u_count(), Bitset(g.w_count()));
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    for (std::size_t w : sg.neighbors(u)) circles[u].set(w - g.u_count());
  }
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      for (std::size_t k = j + 1; k < us.size(); ++k) {
        const std::size_t cn = Bitset::count_and(circles[us[i]], circles[us[j]], circles[us[k]]);
        if (cn == 1) continue;
        const auto kind = cn == 0 ? ViolationKind::TripleUncovered : ViolationKind::TripleOvercovered;
        std::vector<Label> triple{sg.label(us[i]), sg.label(us[j]), sg.label(us[k])};
        c.witness = Violation{kind, triple, cn,
                              "points " + triple[0] + ", " + triple[1] + ", " + triple[2] + " have " +
                                  std::to_string(cn) + " common circles"};
        return c;
      }
    }
  }

  if (g.w_count() == 0) {
    c.witness = Violation{ViolationKind::PartError, {}, 0,
                          "no circles and only " + std::to_string(g.u_count()) + " points"};
    return c;
  }

  // Circle degrees >= 3 with at least one circle force |U| >= 3, so a lone
  // circle that covers every triple is adjacent to all points.
  if (g.w_count() == 1) {
    c.verdict = Verdict::TrivialCircular;
    c.notes.push_back("star K_{1," + std::to_string(g.u_count()) + "} centred at circle " + sg.label(ws[0]));
  } else {
    c.verdict = Verdict::NonTrivialCircular;
  }
  return c;
}

TheoremReport verify_w_pair_bound(const BipartiteGraph& g) {
  const auto c = classify(g);
  if (!c.circular()) return not_applicable(TheoremId::WPairBound, verdict_reason(c));

  const auto& sg = g.graph();
  const auto ws = sorted_w(g);
  TheoremReport r;
  r.id = TheoremId::WPairBound;
  r.status = Status::Pass;
  std::optional<std::size_t> max_cn;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const std::size_t cn = common_count(sg, ws[i], ws[j]);
      ++pairs;
      max_cn = std::max(max_cn.value_or(0), cn);
      if (cn > 2 && r.counterexample.empty()) {
        r.status = Status::Fail;
        r.counterexample = {sg.label(ws[i]), sg.label(ws[j])};
      }
    }
  }
  r.evidence["pairs"] = pairs;
  r.evidence["max_cn"] = max_cn ? nlohmann::json(*max_cn) : nlohmann::json(nullptr);
  r.evidence["vacuous"] = pairs == 0;
  return r;
}

TheoremReport verify_point_degrees(const BipartiteGraph& g) {
  const auto c = classify(g);
  if (c.verdict != Verdict::NonTrivialCircular) return not_applicable(TheoremId::PointDegrees, verdict_reason(c));

  const auto& sg = g.graph();
  TheoremReport r;
  r.id = TheoremId::PointDegrees;
  r.status = Status::Pass;
  std::size_t min_u = sg.order(), min_w = sg.order();
  for (std::size_t u : sorted_u(g)) {
    min_u = std::min(min_u, sg.degree(u));
    if (sg.degree(u) < 3 && r.counterexample.empty()) {
      r.status = Status::Fail;
      r.counterexample = {sg.label(u)};
    }
  }
  for (std::size_t w : sorted_w(g)) min_w = std::min(min_w, sg.degree(w));
  r.evidence["min_u_degree"] = min_u;
  r.evidence["min_w_degree"] = min_w;
  return r;
}

TheoremReport verify_distance_profile(const BipartiteGraph& g) {
  const auto c = classify(g);
  if (c.verdict != Verdict::NonTrivialCircular) {
    return not_applicable(TheoremId::DistanceProfile, verdict_reason(c));
  }

  const auto& sg = g.graph();
  const auto us = sorted_u(g);
  const auto ws = sorted_w(g);
  std::vector<std::vector<Distance>> dist(sg.order(), std::vector<Distance>{});
  for (std::size_t v = 0; v < sg.order(); ++v) dist[v] = distances_from(sg, v);

  std::set<Distance> uu, ww, uw;
  std::vector<Label> bad;
  auto record = [&](std::set<Distance>& into, std::size_t a, std::size_t b,
                    std::initializer_list<unsigned> allowed) {
    const Distance d = dist[a][b];
    into.insert(d);
    if (!bad.empty()) return;
    const bool ok = d.reachable() && std::find(allowed.begin(), allowed.end(), d.hops()) != allowed.end();
    if (!ok) bad = {sg.label(a), sg.label(b)};
  };
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) record(uu, us[i], us[j], {2});
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) record(ww, ws[i], ws[j], {2, 4});
  for (std::size_t u : us)
    for (std::size_t w : ws) record(uw, u, w, {1, 3});

  TheoremReport r;
  r.id = TheoremId::DistanceProfile;
  r.status = bad.empty() ? Status::Pass : Status::Fail;
  r.counterexample = bad;
  r.evidence["u_pair_distances"] = distance_set_json(uu);
  r.evidence["w_pair_distances"] = distance_set_json(ww);
  r.evidence["u_w_distances"] = distance_set_json(uw);
  r.evidence["connected"] = component_count(sg) == 1;
  return r;
}

TheoremReport verify_metric_bounds(const BipartiteGraph& g) {
  const auto c = classify(g);
  if (!c.circular()) return not_applicable(TheoremId::MetricBounds, verdict_reason(c));

  const auto& sg = g.graph();
  const auto m = metric_summary(sg);
  const bool trivial = c.verdict == Verdict::TrivialCircular;

  TheoremReport r;
  r.id = TheoremId::MetricBounds;
  r.evidence["case"] = trivial ? "trivial" : "non-trivial";
  r.evidence["diameter"] = distance_json(m.diameter);
  r.evidence["radius"] = distance_json(m.radius);
  r.evidence["connected"] = m.connected;

  const auto in = [](Distance d, unsigned lo, unsigned hi) {
    return d.reachable() && d.hops() >= lo && d.hops() <= hi;
  };
  const bool diameter_ok = trivial ? in(m.diameter, 2, 2) : in(m.diameter, 3, 4);
  const bool radius_ok = trivial ? in(m.radius, 1, 1) : in(m.radius, 3, 3);
  r.status = diameter_ok && radius_ok ? Status::Pass : Status::Fail;
  if (r.status == Status::Pass) return r;

  // Counterexample: a pair realizing the diameter, or the vertex realizing
  // the radius.
  std::size_t far = 0;
  for (std::size_t v = 0; v < sg.order(); ++v) {
    if (m.eccentricities.at(sg.label(v)) > m.eccentricities.at(sg.label(far))) far = v;
  }
  if (!diameter_ok) {
    const auto d = distances_from(sg, far);
    const auto other = static_cast<std::size_t>(std::max_element(d.begin(), d.end()) - d.begin());
    r.counterexample = {sg.label(far), sg.label(other)};
  } else {
    std::size_t centre = 0;
    for (std::size_t v = 0; v < sg.order(); ++v) {
      if (m.eccentricities.at(sg.label(v)) < m.eccentricities.at(sg.label(centre))) centre = v;
    }
    r.counterexample = {sg.label(centre)};
  }
  return r;
}

TheoremReport check_linear_axioms(const BipartiteGraph& g) {
  const auto& sg = g.graph();
  const auto us = sorted_u(g);
  TheoremReport r;
  r.id = TheoremId::LinearAxioms;
  r.status = Status::Pass;

  std::set<std::size_t> cn_values;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const std::size_t cn = common_count(sg, us[i], us[j]);
      cn_values.insert(cn);
      if (cn != 1 && r.counterexample.empty()) {
        r.status = Status::Fail;
        r.counterexample = {sg.label(us[i]), sg.label(us[j])};
        r.reason = "pair has " + std::to_string(cn) + " common neighbours";
      }
    }
  }

  std::optional<std::size_t> min_degree;
  auto vertices = us;
  const auto ws = sorted_w(g);
  vertices.insert(vertices.end(), ws.begin(), ws.end());
  for (std::size_t v : vertices) {
    min_degree = std::min(min_degree.value_or(sg.degree(v)), sg.degree(v));
    if (sg.degree(v) < 2 && r.counterexample.empty()) {
      r.status = Status::Fail;
      r.counterexample = {sg.label(v)};
      r.reason = "vertex has degree " + std::to_string(sg.degree(v)) + " < 2";
    }
  }

  r.evidence["pair_cn_values"] = cn_values;
  r.evidence["min_degree"] = min_degree ? nlohmann::json(*min_degree) : nlohmann::json(nullptr);
  return r;
}

std::vector<TheoremReport> verify_all(const BipartiteGraph& g) {
  return {verify_w_pair_bound(g), verify_point_degrees(g), verify_distance_profile(g),
          verify_metric_bounds(g)};
}

}  // namespace circgraph
