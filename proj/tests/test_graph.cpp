#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "phylo/graph.hpp"

using namespace phylo;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// direct quadratic re-check of the perfect-elimination property
bool peo_is_sound(const SimpleGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<int> later;
    for (std::size_t t = k + 1; t < order.size(); ++t)
      if (g.has_edge(order[k], order[t])) later.push_back(order[t]);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basic graph model") {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);  // idempotent
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(65), resource_limit_error);
}

TEST_CASE("hole canonical form") {
  Hole h = Hole::canonical({2, 1, 0, 3});
  CHECK(h.cycle == std::vector<int>{0, 1, 2, 3});
  // both orientations collapse to the same representative
  CHECK(Hole::canonical({0, 3, 2, 1}) == h);
  CHECK(Hole::canonical({3, 0, 1, 2}) == h);
  CHECK_THROWS_AS(Hole::canonical({0, 1, 2}), std::invalid_argument);
  CHECK(h.validates(cycle_graph(4)));
  CHECK_FALSE(h.validates(complete_graph(4)));
}

TEST_CASE("chordality certificates on fixtures") {
  auto c4 = chordal_certificate(cycle_graph(4));
  REQUIRE_FALSE(c4.chordal);
  CHECK(c4.hole->cycle == std::vector<int>{0, 1, 2, 3});

  auto k4 = chordal_certificate(complete_graph(4));
  REQUIRE(k4.chordal);
  CHECK(peo_is_sound(complete_graph(4), k4.elimination_order));

  CHECK(is_chordal(SimpleGraph(0)));
  CHECK(is_chordal(path_graph(6)));
  CHECK_FALSE(is_chordal(cycle_graph(7)));
}

TEST_CASE("chordality certificates, exhaustive and random") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      auto cert = chordal_certificate(g);
      CHECK(cert.chordal == oracle::is_chordal(g));
      if (cert.chordal)
        CHECK(peo_is_sound(g, cert.elimination_order));
      else
        CHECK(cert.hole->validates(g));
    }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(8, trial % 2 ? 0.35 : 0.6, rng);
    auto cert = chordal_certificate(g);
    CHECK(cert.chordal == oracle::is_chordal(g));
    if (cert.chordal)
      CHECK(peo_is_sound(g, cert.elimination_order));
    else
      CHECK(cert.hole->validates(g));
  }
}

TEST_CASE("hole listing") {
  CHECK(find_holes(complete_graph(4)).empty());
  auto c5 = find_holes(cycle_graph(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].cycle == std::vector<int>{0, 1, 2, 3, 4});

  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n))
      CHECK(find_holes(g) == oracle::holes(g));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(8, 0.4, rng);
    CHECK(find_holes(g) == oracle::holes(g));
  }

  auto limited = find_holes(cycle_graph(6), 0);
  CHECK(limited.empty());
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(complete_graph(3)) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(maximal_cliques(path_graph(3)) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(maximal_cliques(SimpleGraph(0)).empty());
  CHECK(clique_number(SimpleGraph(0)) == 0);
  CHECK(clique_number(SimpleGraph(3)) == 1);

  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      CHECK(maximal_cliques(g) == oracle::maximal_cliques(g));
      CHECK(clique_number(g) == oracle::clique_number(g));
    }
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_graph(8, 0.5, rng);
    CHECK(maximal_cliques(g) == oracle::maximal_cliques(g));
  }

  // every vertex of a nonempty graph is covered
  std::mt19937 rng2(17);
  auto g = random_graph(7, 0.3, rng2);
  std::uint64_t covered = 0;
  for (const auto& c : maximal_cliques(g)) covered |= to_mask(c);
  CHECK(covered == g.vertex_mask());
}

TEST_CASE("clique graph") {
  auto kg = clique_graph(path_graph(3));
  CHECK(kg.derived.vertex_count() == 2);
  CHECK(kg.derived.edge_count() == 1);

  auto star = clique_graph(star_graph(3));
  CHECK(star.derived.vertex_count() == 3);
  CHECK(star.derived.edge_count() == 3);  // triangle

  SimpleGraph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  auto kg2 = clique_graph(two_edges);
  CHECK(kg2.derived.vertex_count() == 2);
  CHECK(kg2.derived.edge_count() == 0);
}

TEST_CASE("forests, paths, components") {
  CHECK_FALSE(is_forest(cycle_graph(4)));
  CHECK(is_forest(star_graph(4)));
  CHECK(max_degree(star_graph(4)) == 4);
  CHECK_FALSE(is_disjoint_union_of_paths(star_graph(4)));
  CHECK(is_forest(path_graph(5)));
  CHECK(max_degree(path_graph(5)) == 2);
  CHECK(is_disjoint_union_of_paths(path_graph(5)));
  CHECK(components(SimpleGraph(3)).size() == 3);

  auto cyc = find_cycle(cycle_graph(5));
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 5);
  CHECK_FALSE(find_cycle(path_graph(5)).has_value());

  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      CHECK(is_forest(g) == oracle::is_forest(g));
      CHECK(max_degree(g) == oracle::max_degree(g));
      CHECK(is_triangle_free(g) == oracle::is_triangle_free(g));
      if (auto c = find_cycle(g)) {
        REQUIRE(c->size() >= 3);
        for (std::size_t k = 0; k < c->size(); ++k)
          CHECK(g.has_edge((*c)[k], (*c)[(k + 1) % c->size()]));
      }
    }
}

TEST_CASE("diamonds") {
  CHECK(is_diamond_free(complete_graph(4)));
  SimpleGraph diamond = complete_graph(4);
  diamond = SimpleGraph::from_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K4 minus 2-3
  auto w = find_diamond(diamond);
  REQUIRE(w.has_value());
  int edges = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      edges += diamond.has_edge((*w)[a], (*w)[b]) ? 1 : 0;
  CHECK(edges == 5);

  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n))
      CHECK(is_diamond_free(g) == oracle::is_diamond_free(g));
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(path_graph(6)).degeneracy == 1);
  CHECK(degeneracy(complete_graph(5)).degeneracy == 4);
  CHECK(degeneracy(SimpleGraph(0)).degeneracy == 0);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(7, 0.45, rng);
    auto r = degeneracy(g);
    CHECK(r.degeneracy == oracle::degeneracy(g));
    CHECK(r.removal_order.size() == 7);
  }
}

TEST_CASE("contraction") {
  auto t = contract_edge(complete_graph(3), 0, 1);
  CHECK(t.graph.vertex_count() == 2);
  CHECK(t.graph.edge_count() == 1);
  CHECK(t.vertex_map[0] == t.vertex_map[1]);

  auto c4 = contract_edge(cycle_graph(4), 1, 2);
  CHECK(c4.graph.vertex_count() == 3);
  CHECK(c4.graph.edge_count() == 3);

  auto c5 = contract_edge(cycle_graph(5), 0, 4);
  CHECK(find_holes(c5.graph).size() == 1);
  CHECK(find_holes(c5.graph)[0].length() == 4);

  CHECK_THROWS_AS(contract_edge(path_graph(4), 0, 2), std::invalid_argument);

  // chordality is preserved under contraction
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      if (!is_chordal(g)) continue;
      for (const auto& [u, v] : g.edges())
        CHECK(is_chordal(contract_edge(g, u, v).graph));
    }
}

TEST_CASE("minor detection") {
  CHECK(has_minor(complete_graph(5), complete_graph(5)));
  CHECK_FALSE(has_minor(path_graph(6), complete_graph(3)));
  CHECK(has_minor(cycle_graph(6), complete_graph(3)));  // contract to triangle

  auto w = find_minor(complete_graph(5), complete_graph(4));
  REQUIRE(w.has_value());
  REQUIRE(w->branch_sets.size() == 4);
  std::uint64_t used = 0;
  for (const auto& b : w->branch_sets) {
    REQUIRE_FALSE(b.empty());
    CHECK((used & to_mask(b)) == 0);
    used |= to_mask(b);
  }

  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      CHECK(has_minor(g, complete_graph(3)) ==
            oracle::has_minor(g, complete_graph(3)));
      CHECK(has_minor(g, complete_graph(4)) ==
            oracle::has_minor(g, complete_graph(4)));
      CHECK(has_minor(g, path_graph(3)) == oracle::has_minor(g, path_graph(3)));
    }

  // monotone under edge addition and under contraction
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(7, 0.4, rng);
    const auto k4 = complete_graph(4);
    if (has_minor(g, k4)) {
      for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
          if (!g.has_edge(u, v)) {
            auto g2 = g;
            g2.add_edge(u, v);
            CHECK(has_minor(g2, k4));
          }
    }
    for (const auto& [u, v] : g.edges())
      if (has_minor(contract_edge(g, u, v).graph, k4)) CHECK(has_minor(g, k4));
  }

  CHECK_THROWS_AS(find_minor(complete_graph(10), complete_graph(6), 3),
                  resource_limit_error);
}

TEST_CASE("chordal graphs have no large clique minor") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      if (!is_chordal(g)) continue;
      CHECK_FALSE(has_minor(g, complete_graph(clique_number(g) + 1)));
    }
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(7, 0.45, rng);
    if (!is_chordal(g)) continue;
    CHECK_FALSE(has_minor(g, complete_graph(clique_number(g) + 1)));
  }
}

TEST_CASE("planarity via forbidden minors") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  SimpleGraph k5e = complete_graph(5);
  k5e = SimpleGraph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
          {2, 4}});  // K5 minus 3-4
  CHECK(is_planar(k5e));

  // Euler bound: m > 3n-6 forces non-planarity
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(7, 0.85, rng);
    if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6)
      CHECK_FALSE(is_planar(g));
  }
}

TEST_CASE("join with an independent set") {
  auto k3i3 = join_with_independent_set(complete_graph(3), 3);
  CHECK(k3i3.vertex_count() == 6);
  CHECK(k3i3.edge_count() == 12);
  CHECK(join_with_independent_set(cycle_graph(4), 0) == cycle_graph(4));
  CHECK(join_with_independent_set(SimpleGraph(1), 1) == complete_graph(2));
}

TEST_CASE("induced subgraphs and restricted paths") {
  auto sub = induced_subgraph(cycle_graph(5), to_mask({0, 1, 2, 4}));
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.original_ids == std::vector<int>{0, 1, 2, 4});
  CHECK(sub.graph.edge_count() == 3);  // 0-1, 1-2, 4-0

  auto p = shortest_path_within(cycle_graph(6), 0, 3, to_mask({0, 1, 2, 3}));
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(
      shortest_path_within(cycle_graph(6), 0, 3, to_mask({0, 3})).has_value());
}
