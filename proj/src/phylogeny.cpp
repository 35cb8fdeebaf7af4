#include "phylo/phylogeny.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace phylo {

namespace {

int lowest(std::uint64_t m) { return std::countr_zero(m); }

void require_indegree_two(const Digraph& d) {
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.indegree(v) > 2)
      throw std::invalid_argument(
          "not a (2,j) digraph: vertex " + std::to_string(v) +
          " has indegree " + std::to_string(d.indegree(v)));
}

void require_hole_of(const PhylogenyResult& p, const Hole& h) {
  if (!h.validates(p.phylogeny))
    throw std::invalid_argument(
        "hole does not validate against the phylogeny graph");
}

}  // namespace

PhylogenyResult compute_phylogeny(const Digraph& d) {
  auto acyc = is_acyclic(d);
  if (!acyc.acyclic())
    throw std::invalid_argument("digraph has a directed cycle");
  const int n = d.vertex_count();
  PhylogenyResult r{SimpleGraph(n), SimpleGraph(n), SimpleGraph(n), {},
                    std::move(*acyc.labeling)};
  r.underlying = d.underlying();
  for (int w = 0; w < n; ++w) {
    const auto parents = d.in_neighbors(w);
    for (std::size_t i = 0; i < parents.size(); ++i)
      for (std::size_t j = i + 1; j < parents.size(); ++j)
        r.competition.add_edge(parents[i], parents[j]);
  }
  for (const auto& [u, v] : r.underlying.edges()) r.phylogeny.add_edge(u, v);
  for (const auto& [u, v] : r.competition.edges()) {
    r.phylogeny.add_edge(u, v);
    if (r.underlying.has_edge(u, v)) continue;
    const std::uint64_t common = d.out_mask(u) & d.out_mask(v);
    int caring = -1;
    for (auto m = common; m; m &= m - 1) {
      const int w = lowest(m);
      if (caring < 0 || r.labeling.label[w] < r.labeling.label[caring])
        caring = w;
    }
    r.cared.emplace(Edge{u, v}, caring);
  }
  return r;
}

bool caring_check(const Digraph& d, const PhylogenyResult& p) {
  for (const Hole& h : find_holes(p.phylogeny)) {
    const std::uint64_t on_hole = to_mask(h.cycle);
    const std::size_t k = h.cycle.size();
    for (std::size_t t = 0; t < k; ++t) {
      const int x = h.cycle[t];
      const int y = h.cycle[(t + 1) % k];
      if (!p.cared.count(make_edge(x, y))) continue;
      // every common out-neighbor takes care of the edge, not just the
      // recorded one
      if (d.out_mask(x) & d.out_mask(y) & on_hole) return false;
    }
  }
  return true;
}

ExtendingSet extending_set(const Digraph& d, const PhylogenyResult& p,
                           const Hole& h) {
  require_indegree_two(d);
  require_hole_of(p, h);
  ExtendingSet w;
  w.hole = h;
  const std::size_t k = h.cycle.size();
  for (std::size_t t = 0; t < k; ++t) {
    const Edge e = make_edge(h.cycle[t], h.cycle[(t + 1) % k]);
    auto it = p.cared.find(e);
    if (it == p.cared.end()) continue;
    w.members.push_back(it->second);
    w.edge_of[it->second] = e;
  }
  // indegree <= 2 forces distinct members; the caring vertex of a hole edge
  // cannot lie on the hole (it would chord it)
  std::set<int> distinct(w.members.begin(), w.members.end());
  if (distinct.size() != w.members.size())
    throw theorem_violation("extending set has repeated caring vertices");
  const std::uint64_t on_hole = to_mask(h.cycle);
  for (int m : w.members)
    if (on_hole & vertex_bit(m))
      throw theorem_violation("extending set meets the hole");
  return w;
}

std::vector<int> cycle_from_hole(const Digraph& d, const PhylogenyResult& p,
                                 const Hole& h, const ExtendingSet& w) {
  require_hole_of(p, h);
  std::map<Edge, int> member_of;
  for (const auto& [m, e] : w.edge_of) member_of[e] = m;
  std::vector<int> cyc;
  const std::size_t k = h.cycle.size();
  for (std::size_t t = 0; t < k; ++t) {
    cyc.push_back(h.cycle[t]);
    auto it = member_of.find(make_edge(h.cycle[t], h.cycle[(t + 1) % k]));
    if (it != member_of.end()) cyc.push_back(it->second);
  }
  for (std::size_t t = 0; t < cyc.size(); ++t)
    if (!p.underlying.has_edge(cyc[t], cyc[(t + 1) % cyc.size()]))
      throw theorem_violation(
          "cycle obtained from the hole leaves the underlying graph");
  (void)d;
  return cyc;
}

InducedSubgraph subgraph_from_hole(const Digraph& d, const PhylogenyResult& p,
                                   const Hole& h, const ExtendingSet& w) {
  (void)d;
  return induced_subgraph(p.underlying, to_mask(h.cycle) | to_mask(w.members));
}

Hole map_hole(const Digraph& d, const PhylogenyResult& p, const Hole& h) {
  require_indegree_two(d);
  require_hole_of(p, h);
  const ExtendingSet w = extending_set(d, p, h);
  if (w.members.empty()) return h;  // every edge already lies in U(D)

  const auto& label = p.labeling.label;
  int least = h.cycle.front();
  for (int v : h.cycle)
    if (label[v] < label[least]) least = v;
  for (int v : w.members)
    if (label[v] < label[least]) least = v;
  if (to_mask(h.cycle) & vertex_bit(least))
    throw theorem_violation(
        "least-label vertex of the extended hole lies on the hole");

  const Edge cared = w.edge_of.at(least);
  const auto cyc = cycle_from_hole(d, p, h, w);
  // chordless completion: shortest path between the cared edge's endpoints
  // through the cycle's vertices, avoiding N[least]
  std::uint64_t allowed =
      to_mask(cyc) &
      ~(p.underlying.adjacency_mask(least) | vertex_bit(least));
  allowed |= vertex_bit(cared.first) | vertex_bit(cared.second);
  auto path =
      shortest_path_within(p.underlying, cared.first, cared.second, allowed);
  if (!path)
    throw theorem_violation("no chordless completion for the mapped hole");
  path->push_back(least);
  Hole out = Hole::canonical(*path);
  if (!out.validates(p.underlying))
    throw theorem_violation("mapped cycle is not a hole of the underlying graph");
  return out;
}

Hole map_hole(const Digraph& d, const Hole& h) {
  return map_hole(d, compute_phylogeny(d), h);
}

}  // namespace phylo
