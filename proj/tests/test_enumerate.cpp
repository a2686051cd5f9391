#include "circgraph/constructions.hpp"
#include "circgraph/enumerate.hpp"
#include "circgraph/isomorphism.hpp"
#include "circgraph/suite.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circgraph;

namespace {

std::size_t nontrivial(const std::vector<CensusEntry>& census) {
  return static_cast<std::size_t>(std::count_if(census.begin(), census.end(), [](const CensusEntry& e) {
    return e.verdict == Verdict::NonTrivialCircular;
  }));
}

void check_agreement(const BipartiteGraph& g) {
  const auto fast = classify(g);
  const auto slow = brute_force_classify(g);
  CHECK(fast.verdict == slow.verdict);
  CHECK(fast.witness.has_value() == slow.witness.has_value());
  if (fast.witness && slow.witness) {
    CHECK(fast.witness->kind == slow.witness->kind);
    CHECK(fast.witness->observed == slow.witness->observed);
    CHECK(fast.witness->vertices == slow.witness->vertices);
  }
}

}  // namespace

TEST_CASE("circular census counts") {
  // Labelled families and classes frozen from an exhaustive family search.
  const std::vector<std::size_t> families{1, 2, 7, 83, 6150};
  const std::vector<std::size_t> classes{1, 2, 3, 6, 19};
  const std::vector<std::size_t> nontrivial_classes{0, 1, 2, 5, 18};
  for (int u = 3; u <= 7; ++u) {
    const auto i = static_cast<std::size_t>(u - 3);
    CHECK(circular_block_families(u, 2).size() == families[i]);
    const auto census = enumerate_circular(u, 2);
    CHECK(census.size() == classes[i]);
    CHECK(nontrivial(census) == nontrivial_classes[i]);
  }
}

TEST_CASE("small censuses by name") {
  const auto three = enumerate_circular(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].verdict == Verdict::TrivialCircular);
  CHECK(three[0].w_size == 1);

  const auto four = enumerate_circular(4);
  REQUIRE(four.size() == 2);
  bool saw_star = false, saw_t4 = false;
  for (const auto& e : four) {
    saw_star = saw_star || are_isomorphic(e.graph, star(5), IsoMode::PartRespecting).isomorphic;
    saw_t4 = saw_t4 || are_isomorphic(e.graph, triangular(4), IsoMode::PartRespecting).isomorphic;
  }
  CHECK(saw_star);
  CHECK(saw_t4);

  const auto five = enumerate_circular(5);
  REQUIRE(five.size() == 3);
  std::vector<std::size_t> w_sizes;
  for (const auto& e : five) w_sizes.push_back(e.w_size);
  std::sort(w_sizes.begin(), w_sizes.end());
  CHECK(w_sizes == std::vector<std::size_t>{1, 7, 10});
}

TEST_CASE("census agrees with the powerset generator") {
  for (int u = 3; u <= 5; ++u) {
    CHECK(circular_block_families(u) == oracle::powerset_families(u));
  }
}

TEST_CASE("census is independent of worker count") {
  for (int u = 5; u <= 7; ++u) {
    const auto one = enumerate_circular(u, 1);
    for (unsigned workers : {2u, 3u, 8u}) {
      const auto many = enumerate_circular(u, workers);
      REQUIRE(many.size() == one.size());
      for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(many[i].canonical.code() == one[i].canonical.code());
        CHECK(many[i].graph.labeled_edges() == one[i].graph.labeled_edges());
      }
    }
  }
}

TEST_CASE("census entries are non-isomorphic and ordered") {
  const auto census = enumerate_circular(6);
  for (std::size_t i = 1; i < census.size(); ++i) {
    CHECK(compare_forms(census[i - 1].canonical, census[i].canonical) < 0);
  }
  for (std::size_t i = 0; i < census.size(); ++i)
    for (std::size_t j = i + 1; j < census.size(); ++j)
      CHECK_FALSE(are_isomorphic(census[i].graph, census[j].graph, IsoMode::PartRespecting).isomorphic);
}

TEST_CASE("every census entry passes the theorem suite") {
  for (int u = 3; u <= 7; ++u) {
    for (const auto& e : enumerate_circular(u)) {
      CHECK(classify(e.graph).verdict == e.verdict);
      for (const auto& r : theorem_suite(e.graph)) {
        INFO("u=" << u << " check " << to_string(r.id));
        CHECK(r.status != Status::Fail);
      }
      if (e.verdict == Verdict::NonTrivialCircular) {
        CHECK(metric_summary(e.graph).connected);
        CHECK(verify_distance_profile(e.graph).status == Status::Pass);
        CHECK(verify_neighborhood_doubling(e.graph).status == Status::Pass);
      }
    }
  }
}

TEST_CASE("free trees") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    const auto trees = free_trees(n);
    CHECK(trees.size() == counts[static_cast<std::size_t>(n - 1)]);
    for (const auto& t : trees) {
      CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
      CHECK(component_count(t) == 1);
    }
  }
  CHECK_THROWS_AS(free_trees(0), InputError);
  CHECK_THROWS_AS(free_trees(11), InputError);
}

TEST_CASE("circular trees are exactly the stars") {
  const auto four = enumerate_circular_trees(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0].u_size == 3);
  CHECK(four[0].w_size == 1);
  CHECK(enumerate_circular_trees(2).empty());

  const auto nine = enumerate_circular_trees(9);
  REQUIRE(nine.size() == 6);
  std::vector<std::size_t> leaves;
  for (const auto& e : nine) {
    CHECK(e.w_size == 1);
    CHECK(e.verdict == Verdict::TrivialCircular);
    CHECK(are_isomorphic(e.graph, star(static_cast<int>(e.u_size) + 1), IsoMode::PartRespecting).isomorphic);
    leaves.push_back(e.u_size);
  }
  std::sort(leaves.begin(), leaves.end());
  CHECK(leaves == std::vector<std::size_t>{3, 4, 5, 6, 7, 8});
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_circular(2), InputError);
  CHECK_THROWS_AS(enumerate_circular(8), InputError);
  CHECK_THROWS_AS(enumerate_circular_trees(0), InputError);
  CHECK_THROWS_AS(enumerate_circular_trees(11), InputError);
}

TEST_CASE("classify agrees with the brute-force classifier") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::size_t> part(0, 6);
  std::uniform_real_distribution<double> density(0.3, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    check_agreement(oracle::random_bipartite(rng, part(rng), part(rng), density(rng)));
  }
  for (int n = 4; n <= 7; ++n) check_agreement(triangular(n));
  for (int u = 3; u <= 7; ++u)
    for (const auto& e : enumerate_circular(u)) check_agreement(e.graph);
  for (const auto& e : enumerate_circular_trees(9)) check_agreement(e.graph);
}
