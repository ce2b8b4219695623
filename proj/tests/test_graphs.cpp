#include <catch_amalgamated.hpp>

#include <random>

#include "baseset/graph_aut.hpp"
#include "baseset/graphs.hpp"
#include "baseset/groups.hpp"
#include "oracles.hpp"

using namespace baseset;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph type invariants") {
  Graph g(3);
  g.add_edge(2, 0);
  CHECK(g.has_edge(0, 2));
  CHECK(g.edges.count({0, 2}) == 1);  // normalized
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("constructions") {
  Graph c3 = cycle(3);
  CHECK(c3.vertex_count == 3);
  CHECK(c3.edges.size() == 3);
  CHECK(automorphism_group(c3).order() == 6);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);

  CHECK(automorphism_group(cycle(6)).order() == 12);
  CHECK(determining_number(cycle(5)) == 2);

  Graph p2 = path(2);
  CHECK(p2.edges.size() == 1);
  CHECK(automorphism_group(p2).order() == 2);
  CHECK(automorphism_group(path(1)).order() == 1);
  CHECK(automorphism_group(path(3)).order() == 2);
  CHECK(determining_number(path(3)) == 1);

  Graph u = disjoint_union(path(2), cycle(3));
  CHECK(u.vertex_count == 5);
  PermutationGroup aut = automorphism_group(u);
  CHECK(aut.order() == 12);
  CHECK(determining_number(u) == 3);
  std::multiset<std::size_t> orbit_sizes;
  for (const auto& block : orbits(aut)) orbit_sizes.insert(block.size());
  CHECK(orbit_sizes == std::multiset<std::size_t>{2, 3});

  CHECK(disjoint_union(u, Graph(0)) == u);
  CHECK(disjoint_union(Graph(0), u) == u);

  CHECK(determining_number(disjoint_union(path(2), cycle(5))) == 3);
  CHECK(automorphism_group(disjoint_union(path(2), cycle(5))).order() == 20);
}

TEST_CASE("spider trees are asymmetric when leg lengths differ") {
  CHECK(automorphism_group(spider({1, 2, 3})).order() == 1);
  CHECK(determining_number(spider({1, 2, 3})) == 0);
  CHECK(automorphism_group(spider({2, 2})).order() == 2);  // equal legs swap
}

TEST_CASE("automorphism group matches the all-permutations oracle") {
  std::vector<Graph> corpus;
  for (int n = 3; n <= 7; ++n) corpus.push_back(cycle(n));
  for (int n = 1; n <= 7; ++n) corpus.push_back(path(n));
  corpus.push_back(complete_graph(4));
  corpus.push_back(complete_graph(6));
  corpus.push_back(disjoint_union(path(2), cycle(3)));
  corpus.push_back(disjoint_union(path(1), cycle(5)));
  corpus.push_back(disjoint_union(path(3), path(3)));
  corpus.push_back(spider({1, 2, 3}));
  corpus.push_back(Graph(5));  // edgeless
  std::mt19937 rng(1234);
  for (int i = 0; i < 30; ++i)
    corpus.push_back(random_graph(6, 0.3 + 0.05 * (i % 8), rng));
  for (const auto& g : corpus) {
    INFO("vertices=" << g.vertex_count << " edges=" << g.edges.size());
    CHECK(automorphism_group(g).elements() ==
          oracles::all_permutation_automorphisms(g));
  }
}

TEST_CASE("every reported automorphism preserves edges and non-edges") {
  for (const Graph& g : {cycle(6), disjoint_union(path(2), cycle(4)),
                         triangle_marked_cycle(5)}) {
    PermutationGroup aut = automorphism_group(g, 64);
    for (const auto& a : aut.elements())
      for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
          CHECK(g.has_edge(u, v) == g.has_edge(a(u), a(v)));
  }
}

TEST_CASE("determining numbers of named families") {
  for (int n = 3; n <= 9; ++n) CHECK(determining_number(cycle(n)) == 2);
  CHECK(determining_number(disjoint_union(path(2), cycle(3))) == 3);
  CHECK(determining_number(disjoint_union(path(2), cycle(9))) == 3);
  CHECK(determining_number(disjoint_union(path(2), cycle(25)), 64) == 3);
  CHECK(determining_number(Graph(0)) == 0);
  CHECK(determining_number(path(1)) == 0);
}

TEST_CASE("vertex budget") {
  CHECK_THROWS_AS(automorphism_group(cycle(65)), budget_error);
  CHECK(automorphism_group(cycle(65), 65).order() == 130);
  CHECK_THROWS_AS(determining_number(cycle(65)), budget_error);
}

TEST_CASE("marked cycles realize dihedral groups with a regular orbit") {
  for (int n : {3, 4, 5, 6, 9}) {
    AbstractGroupSpec spec = AbstractGroupSpec::dihedral(n);
    Graph t = triangle_marked_cycle(n);
    PermutationGroup at = automorphism_group(t, t.vertex_count);
    CHECK(at.order() == 2 * n);
    CHECK(is_isomorphic_to(at, spec));
    CHECK(min_base_size(at) == 1);

    Graph p = pendant_marked_cycle(n);
    PermutationGroup ap = automorphism_group(p, p.vertex_count);
    CHECK(ap.order() == 2 * n);
    CHECK(is_isomorphic_to(ap, spec));
    CHECK(min_base_size(ap) == 1);
  }
}

TEST_CASE("marked cycle automorphisms against the backtracking oracle") {
  // small enough for the all-permutations oracle is impossible here, so
  // cross-check the group order against the abstract isomorphism instead,
  // and spot-check n=3 structurally: 9 vertices is brute-forceable.
  Graph t3 = triangle_marked_cycle(3);
  REQUIRE(t3.vertex_count == 9);
  CHECK(automorphism_group(t3).elements() ==
        oracles::all_permutation_automorphisms(t3));
}
