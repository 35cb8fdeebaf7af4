#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "phylo/extremal.hpp"
#include "phylo/phylogeny.hpp"

using namespace phylo;

namespace {

Digraph fig(ConstructionName name) {
  return build_construction(name).digraph;
}

}  // namespace

TEST_CASE("phylogeny of the first worked example") {
  const auto d = fig(ConstructionName::fig1);
  const auto p = compute_phylogeny(d);

  // cared edges and their caring vertices, vertex k named v(k+1)
  const std::map<Edge, int> expected = {
      {{1, 2}, 0}, {{1, 5}, 3}, {{1, 6}, 3}, {{3, 4}, 2}, {{4, 5}, 6}};
  CHECK(p.cared == expected);

  CHECK(is_chordal(p.underlying));
  const auto holes = find_holes(p.phylogeny);
  REQUIRE(holes.size() == 1);
  CHECK(holes[0].cycle == std::vector<int>{1, 2, 4, 5});

  // union structure
  for (const auto& [u, v] : p.underlying.edges()) CHECK(p.phylogeny.has_edge(u, v));
  for (const auto& [u, v] : p.competition.edges()) CHECK(p.phylogeny.has_edge(u, v));
  CHECK(p.phylogeny.edge_count() ==
        p.underlying.edge_count() + static_cast<int>(p.cared.size()));
}

TEST_CASE("phylogeny of the tight (2,2) example") {
  const auto p = compute_phylogeny(fig(ConstructionName::fig2_right));
  CHECK(p.competition.has_edge(0, 2));  // v2-v4
  CHECK(p.competition.has_edge(1, 3));  // v3-v5
  const auto cliques = maximal_cliques(p.phylogeny);
  CHECK(std::find(cliques.begin(), cliques.end(),
                  std::vector<int>{0, 1, 2, 3}) != cliques.end());
}

TEST_CASE("single arc and error cases") {
  Digraph d(2);
  d.add_arc(0, 1);
  const auto p = compute_phylogeny(d);
  CHECK(p.phylogeny.edge_count() == 1);
  CHECK(p.competition.edge_count() == 0);
  CHECK(p.cared.empty());

  Digraph cyc(2);
  cyc.add_arc(0, 1);
  cyc.add_arc(1, 0);
  CHECK_THROWS_AS(compute_phylogeny(cyc), std::invalid_argument);
}

TEST_CASE("indegree-one digraphs collapse to their underlying graph") {
  for (int n = 1; n <= 6; ++n)
    enumerate_ij_dags(n, {1, 2}, [](const Digraph& d) {
      const auto p = compute_phylogeny(d);
      CHECK(p.phylogeny == p.underlying);
      return true;
    });
}

TEST_CASE("phylogeny respects weak components") {
  for (int n = 1; n <= 5; ++n)
    enumerate_ij_dags(n, {2, 2}, [](const Digraph& d) {
      const auto p = compute_phylogeny(d);
      for (const auto& comp : weak_components(d)) {
        const auto pc = compute_phylogeny(comp.digraph);
        for (int a = 0; a < comp.digraph.vertex_count(); ++a)
          for (int b = a + 1; b < comp.digraph.vertex_count(); ++b)
            CHECK(pc.phylogeny.has_edge(a, b) ==
                  p.phylogeny.has_edge(comp.original_ids[a],
                                       comp.original_ids[b]));
      }
      return true;
    });
}

TEST_CASE("caring vertices stay off their holes") {
  const auto d1 = fig(ConstructionName::fig1);
  CHECK(caring_check(d1, compute_phylogeny(d1)));
  // chordal phylogeny: vacuously true
  const auto d2 = fig(ConstructionName::fig2_left);
  CHECK(caring_check(d2, compute_phylogeny(d2)));
}

TEST_CASE("extending sets on the planarity counterexample") {
  const auto d = fig(ConstructionName::fig3);
  const auto p = compute_phylogeny(d);
  const auto holes = find_holes(p.phylogeny);
  REQUIRE_FALSE(holes.empty());

  const Hole target{{2, 4, 6, 7}};  // v3 v5 v7 v8
  REQUIRE(std::find(holes.begin(), holes.end(), target) != holes.end());
  const auto es = extending_set(d, p, target);
  CHECK(es.members == std::vector<int>{0});  // v1 takes care of v3-v8
  CHECK(es.edge_of.at(0) == Edge{2, 7});

  const auto cyc = cycle_from_hole(d, p, target, es);
  CHECK(cyc.size() == target.length() + 1);  // one cared edge becomes two

  const auto sub = subgraph_from_hole(d, p, target, es);
  CHECK(sub.original_ids == std::vector<int>{0, 2, 4, 6, 7});

  // w = v1 has the least label and lies in W; the mapped hole is the
  // pentagon of the underlying graph
  const auto mapped = map_hole(d, p, target);
  CHECK(mapped.cycle == std::vector<int>{0, 2, 4, 6, 7});
  CHECK(mapped.validates(p.underlying));

  for (const auto& h : holes) {
    const auto esh = extending_set(d, p, h);
    const auto m = map_hole(d, p, h);
    CHECK(m.validates(p.underlying));
    const std::uint64_t span = to_mask(h.cycle) | to_mask(esh.members);
    CHECK((to_mask(m.cycle) & ~span) == 0);
  }
}

TEST_CASE("extending-set and map preconditions") {
  const auto d1 = fig(ConstructionName::fig1);  // indegree 3 occurs
  const auto p1 = compute_phylogeny(d1);
  const auto holes = find_holes(p1.phylogeny);
  REQUIRE(holes.size() == 1);
  CHECK_THROWS_AS(extending_set(d1, p1, holes[0]), std::invalid_argument);
  CHECK_THROWS_AS(map_hole(d1, p1, holes[0]), std::invalid_argument);

  const auto d3 = fig(ConstructionName::fig3);
  const auto p3 = compute_phylogeny(d3);
  Hole fake{{0, 1, 2, 3}};
  CHECK_THROWS_AS(extending_set(d3, p3, fake), std::invalid_argument);
}

TEST_CASE("every phylogeny hole carries a cared edge") {
  // the hole's least-label vertex would otherwise chord it
  for (int n = 4; n <= 6; ++n)
    enumerate_ij_dags(n, {2, 2}, [](const Digraph& d) {
      const auto p = compute_phylogeny(d);
      for (const auto& h : find_holes(p.phylogeny))
        CHECK_FALSE(extending_set(d, p, h).members.empty());
      return true;
    });
}
