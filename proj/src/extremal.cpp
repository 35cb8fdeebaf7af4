#include "phylo/extremal.hpp"

#include <stdexcept>

#include "phylo/phylogeny.hpp"

namespace phylo {

namespace {

// Vertices named v1..vK map to ids 0..K-1; helper vertices follow in stage
// order then index order.
NamedConstruction labeled(std::string name, int n,
                          const std::vector<Arc>& arcs) {
  NamedConstruction c;
  c.name = std::move(name);
  c.digraph = Digraph::from_arcs(n, arcs);
  for (int v = 0; v < n; ++v)
    c.vertex_names[v] = "v" + std::to_string(v + 1);
  return c;
}

NamedConstruction build_fig1() {
  auto c = labeled("fig1", 7,
                   {{1, 0}, {1, 3}, {4, 2}, {4, 6}, {5, 3}, {5, 6},
                    {6, 2}, {6, 3}, {3, 0}, {3, 2}, {2, 0}});
  c.expected = {{"max_indegree", 3},        {"max_outdegree", 2},
                {"underlying_chordal", 1},  {"phylogeny_chordal", 0},
                {"phylogeny_hole_count", 1}, {"phylogeny_planar", 0}};
  return c;
}

NamedConstruction build_fig2_left() {
  // vertices v2, v3, v4 -> ids 0, 1, 2
  NamedConstruction c;
  c.name = "fig2-left";
  c.digraph = Digraph::from_arcs(3, {{0, 1}, {2, 1}});
  c.vertex_names = {{0, "v2"}, {1, "v3"}, {2, "v4"}};
  c.expected = {{"max_indegree", 2},          {"max_outdegree", 1},
                {"underlying_chordal", 1},    {"phylogeny_chordal", 1},
                {"phylogeny_clique_number", 3}, {"phylogeny_planar", 1}};
  return c;
}

NamedConstruction build_fig2_right() {
  // vertices v2..v6 -> ids 0..4
  NamedConstruction c;
  c.name = "fig2-right";
  c.digraph =
      Digraph::from_arcs(5, {{0, 1}, {0, 3}, {2, 1}, {2, 3}, {1, 4}, {3, 4}});
  c.vertex_names = {{0, "v2"}, {1, "v3"}, {2, "v4"}, {3, "v5"}, {4, "v6"}};
  c.expected = {{"max_indegree", 2},          {"max_outdegree", 2},
                {"underlying_chordal", 0},    {"phylogeny_chordal", 1},
                {"phylogeny_clique_number", 4}, {"phylogeny_planar", 1}};
  return c;
}

NamedConstruction build_fig3() {
  auto c = labeled("fig3", 9,
                   {{6, 4}, {6, 3}, {5, 4}, {5, 3}, {4, 2}, {3, 2},
                    {7, 6}, {8, 5}, {7, 0}, {8, 1}, {2, 0}, {2, 1}});
  c.expected = {{"max_indegree", 2},       {"max_outdegree", 2},
                {"underlying_chordal", 0}, {"phylogeny_has_k5_minor", 1}};
  return c;
}

// Staged construction reaching clique number j+3 within (2, j) bounds,
// j >= 3. Core vertices v1..v_{j+3} get ids 0..j+2; helpers a_{l,i} receive
// one arc from v_l and one from v_i and make those two compete.
NamedConstruction build_clique_extremal(int j) {
  if (j < 3)
    throw std::invalid_argument(
        "clique_extremal requires j >= 3 (fig2-left and fig2-right serve "
        "smaller bounds)");
  const auto v = [](int k) { return k - 1; };  // v_k -> id
  NamedConstruction c;
  c.name = "clique-extremal-j" + std::to_string(j);
  std::vector<Arc> arcs;
  int next_id = j + 3;
  std::map<int, std::string> names;
  for (int k = 1; k <= j + 3; ++k) names[v(k)] = "v" + std::to_string(k);

  auto helper = [&](int l, int i) {
    const int a = next_id++;
    names[a] = "a" + std::to_string(l) + "_" + std::to_string(i);
    arcs.push_back({v(l), a});
    arcs.push_back({v(i), a});
  };

  // stage 1
  for (int i = 2; i <= j + 1; ++i) helper(1, i);
  arcs.push_back({v(j + 2), v(1)});
  arcs.push_back({v(j + 3), v(1)});
  // stage 2 skips i = j, covered by a direct arc instead
  for (int i = 3; i <= j + 2; ++i)
    if (i != j) helper(2, i);
  arcs.push_back({v(j), v(2)});
  arcs.push_back({v(j + 3), v(2)});
  // stages 3..j-1
  for (int l = 3; l <= j - 1; ++l) {
    for (int i = l + 1; i <= j + 1; ++i) helper(l, i);
    arcs.push_back({v(j + 2), v(l)});
    arcs.push_back({v(j + 3), v(l)});
  }
  // closing arcs
  arcs.push_back({v(j + 3), v(j + 1)});
  arcs.push_back({v(j + 2), v(j)});
  arcs.push_back({v(j + 1), v(j)});

  c.digraph = Digraph::from_arcs(next_id, arcs);
  c.vertex_names = std::move(names);
  c.expected = {{"max_indegree", 2},
                {"max_outdegree", j},
                {"phylogeny_clique_number", j + 3}};
  return c;
}

}  // namespace

NamedConstruction build_construction(ConstructionName name, int j) {
  switch (name) {
    case ConstructionName::fig1: return build_fig1();
    case ConstructionName::fig2_left: return build_fig2_left();
    case ConstructionName::fig2_right: return build_fig2_right();
    case ConstructionName::fig3: return build_fig3();
    case ConstructionName::clique_extremal: return build_clique_extremal(j);
  }
  throw std::invalid_argument("unknown construction");
}

void validate_expected(const NamedConstruction& c) {
  const auto p = compute_phylogeny(c.digraph);
  DegreeBounds bounds{1, 1};
  if (auto it = c.expected.find("max_indegree"); it != c.expected.end())
    bounds.max_indegree = it->second;
  if (auto it = c.expected.find("max_outdegree"); it != c.expected.end())
    bounds.max_outdegree = it->second;
  const auto fail = [&](const std::string& key) {
    throw theorem_violation("construction " + c.name +
                            " misses expected property " + key);
  };
  for (const auto& [key, value] : c.expected) {
    if (key == "max_indegree" || key == "max_outdegree") {
      if (!is_ij(c.digraph, bounds)) fail(key);
    } else if (key == "underlying_chordal") {
      if (is_chordal(p.underlying) != (value != 0)) fail(key);
    } else if (key == "phylogeny_chordal") {
      if (is_chordal(p.phylogeny) != (value != 0)) fail(key);
    } else if (key == "phylogeny_planar") {
      if (is_planar(p.phylogeny) != (value != 0)) fail(key);
    } else if (key == "phylogeny_clique_number") {
      if (clique_number(p.phylogeny) != value) fail(key);
    } else if (key == "phylogeny_hole_count") {
      if (static_cast<int>(find_holes(p.phylogeny).size()) != value) fail(key);
    } else if (key == "phylogeny_has_k5_minor") {
      if (has_minor(p.phylogeny, complete_graph(5)) != (value != 0)) fail(key);
    } else {
      throw std::invalid_argument("unknown expected-property key " + key);
    }
  }
}

}  // namespace phylo
