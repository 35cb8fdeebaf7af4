#include "phylo/realize.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "phylo/phylogeny.hpp"

namespace phylo {

namespace {

int lowest(std::uint64_t m) { return std::countr_zero(m); }
int popcount(std::uint64_t m) { return std::popcount(m); }

RealizabilityVerdict obstructed(std::string reason, std::vector<int> vertices,
                                std::vector<std::vector<int>> cliques = {}) {
  RealizabilityVerdict v;
  v.realizable = false;
  v.obstruction =
      Obstruction{std::move(reason), std::move(vertices), std::move(cliques)};
  return v;
}

// BFS from a pendant root, arcs pointing away from it.
void orient_component_from_root(const SimpleGraph& g,
                                const std::vector<int>& comp, Digraph& out) {
  if (comp.size() < 2) return;
  int root = -1;
  for (int v : comp)
    if (g.degree(v) == 1) {
      root = v;
      break;
    }
  std::uint64_t seen = vertex_bit(root);
  std::vector<int> frontier{root};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (auto m = g.adjacency_mask(v) & ~seen; m; m &= m - 1) {
        const int w = lowest(m);
        out.add_arc(v, w);
        seen |= vertex_bit(w);
        next.push_back(w);
      }
    frontier = std::move(next);
  }
}

bool is_complete_on(const SimpleGraph& g, std::uint64_t live) {
  for (auto m = live; m; m &= m - 1) {
    const int v = lowest(m);
    if ((g.adjacency_mask(v) & live) != (live & ~vertex_bit(v))) return false;
  }
  return true;
}

struct Peel {
  int v;                        // simplicial vertex removed
  std::vector<int> clique_x;    // its closed neighborhood, a pendant clique
  int shared_u;                 // the single vertex shared with the neighbor
  std::vector<int> neighbor_y;  // the neighbor clique in the clique tree
};

[[noreturn]] void broken(const std::string& what) {
  throw theorem_violation("(i,1) realization: " + what);
}

// Peels simplicial vertices off pendant cliques until the component is
// complete, then replays the removals in reverse, attaching each vertex with
// one arc chosen by the maintained labeling. `label` holds labels 1..k over
// the currently attached vertices (0 = absent).
void realize_i1_component(const SimpleGraph& g, const std::vector<int>& comp,
                          int i, Digraph& out, std::vector<int>& label) {
  std::uint64_t live = to_mask(comp);
  std::vector<Peel> peels;
  while (!is_complete_on(g, live)) {
    const auto sub = induced_subgraph(g, live);
    const auto cliques = maximal_cliques(sub.graph);
    std::vector<std::uint64_t> masks;
    masks.reserve(cliques.size());
    for (const auto& c : cliques) masks.push_back(to_mask(c));
    const int k = static_cast<int>(cliques.size());
    int best_v = -1;
    Peel best{};
    for (int a = 0; a < k; ++a) {
      int deg = 0, partner = -1;
      for (int b = 0; b < k; ++b)
        if (b != a && (masks[a] & masks[b])) {
          ++deg;
          partner = b;
        }
      if (deg != 1) continue;  // pendant cliques of the clique tree only
      const std::uint64_t shared = masks[a] & masks[partner];
      if (popcount(shared) != 1) broken("pendant cliques overlap in 2+ vertices");
      const int u = lowest(shared);
      const std::uint64_t candidates = masks[a] & ~shared;
      if (!candidates) broken("pendant clique equals its separator");
      const int v = lowest(candidates);
      if (best_v < 0 || sub.original_ids[v] < best_v) {
        best_v = sub.original_ids[v];
        best.v = sub.original_ids[v];
        best.clique_x.clear();
        for (int x : cliques[a]) best.clique_x.push_back(sub.original_ids[x]);
        best.shared_u = sub.original_ids[u];
        best.neighbor_y.clear();
        for (int y : cliques[partner])
          best.neighbor_y.push_back(sub.original_ids[y]);
      }
    }
    if (best_v < 0) broken("clique tree of a non-complete component has no leaf");
    peels.push_back(best);
    live &= ~vertex_bit(best.v);
  }

  // base: complete on `live`, all arcs into the smallest vertex
  {
    const auto vs = from_mask(live);
    label[vs.front()] = 1;
    for (std::size_t t = 1; t < vs.size(); ++t) {
      out.add_arc(vs[t], vs.front());
      label[vs[t]] = static_cast<int>(t) + 1;
    }
  }

  int attached = popcount(live);
  const std::uint64_t comp_mask = to_mask(comp);
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    const Peel& pl = *it;
    const int u = pl.shared_u;
    const int v = pl.v;
    const std::uint64_t x_rest = to_mask(pl.clique_x) & ~vertex_bit(v);

    int min_y = -1;
    for (int y : pl.neighbor_y)
      if (min_y < 0 || label[y] < label[min_y]) min_y = y;

    if (min_y == u) {
      // u closes its pendant side: either it is a sink of the partial
      // digraph, or its unique out-neighbor's closed in-neighborhood is
      // exactly the clique minus v
      const std::uint64_t outs = out.out_mask(u);
      if (outs == 0) {
        if (x_rest != vertex_bit(u)) broken("sink case: clique not reduced to the shared vertex");
        out.add_arc(u, v);
        // v is the new unique sink: give it the least label
        for (auto m = comp_mask; m; m &= m - 1) {
          const int z = lowest(m);
          if (label[z] > 0) ++label[z];
        }
        label[v] = 1;
      } else {
        if (popcount(outs) != 1) broken("outdegree above one in an (i,1) witness");
        const int w = lowest(outs);
        if ((out.in_mask(w) | vertex_bit(w)) != x_rest)
          broken("closed in-neighborhood of the out-neighbor deviates from the clique");
        if (out.indegree(w) + 1 > i) broken("indegree bound breached at re-attachment");
        out.add_arc(v, w);
        label[v] = ++attached;
        continue;
      }
      ++attached;
      continue;
    }

    // u carries the least label of the pendant clique minus v
    int min_x = -1;
    for (auto m = x_rest; m; m &= m - 1) {
      const int z = lowest(m);
      if (min_x < 0 || label[z] < label[min_x]) min_x = z;
    }
    if (min_x != u) broken("shared vertex is minimal in neither clique");
    if (out.in_mask(u) == 0) {
      if (x_rest != vertex_bit(u)) broken("source case: clique not reduced to the shared vertex");
    } else if ((out.in_mask(u) | vertex_bit(u)) != x_rest) {
      broken("closed in-neighborhood of the shared vertex deviates from the clique");
    }
    if (out.indegree(u) + 1 > i) broken("indegree bound breached at re-attachment");
    out.add_arc(v, u);
    label[v] = ++attached;
  }
}

}  // namespace

std::string to_string(PhyloClass c) {
  switch (c) {
    case PhyloClass::one_j: return "(1,j)";
    case PhyloClass::i_one: return "(i,1)";
    case PhyloClass::one_one: return "(1,1)";
  }
  return {};
}

RealizabilityVerdict decide_1j(const SimpleGraph& g, int j) {
  if (j < 1) throw std::invalid_argument("j must be positive");
  if (auto cyc = find_cycle(g)) return obstructed("not a forest", *cyc);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > j + 1)
      return obstructed("max degree exceeds j+1", {v});
  Digraph d(g.vertex_count());
  for (const auto& comp : components(g)) orient_component_from_root(g, comp, d);
  RealizabilityVerdict verdict;
  verdict.realizable = true;
  verdict.witness = RealizationWitness{std::move(d), DegreeBounds{1, j},
                                       PhyloClass::one_j};
  return verdict;
}

RealizabilityVerdict decide_i1(const SimpleGraph& g, int i) {
  if (i < 1) throw std::invalid_argument("i must be positive");
  if (auto dia = find_diamond(g)) return obstructed("diamond found", *dia);
  auto cert = chordal_certificate(g);
  if (!cert.chordal) return obstructed("hole found", cert.hole->cycle);
  const auto cliques = maximal_cliques(g);
  for (const auto& c : cliques)
    if (static_cast<int>(c.size()) > i + 1)
      return obstructed("clique number exceeds i+1", c);
  const auto kg = clique_graph(g);
  if (auto cyc = find_cycle(kg.derived)) {
    std::vector<std::vector<int>> cycle_cliques;
    for (int idx : *cyc) cycle_cliques.push_back(kg.cliques[idx]);
    return obstructed("clique graph has a cycle", *cyc,
                      std::move(cycle_cliques));
  }
  Digraph d(g.vertex_count());
  std::vector<int> label(g.vertex_count(), 0);
  for (const auto& comp : components(g))
    realize_i1_component(g, comp, i, d, label);
  RealizabilityVerdict verdict;
  verdict.realizable = true;
  verdict.witness = RealizationWitness{std::move(d), DegreeBounds{i, 1},
                                       PhyloClass::i_one};
  return verdict;
}

RealizabilityVerdict decide_11(const SimpleGraph& g) {
  auto verdict = decide_1j(g, 1);
  if (verdict.witness) verdict.witness->claimed_class = PhyloClass::one_one;
  return verdict;
}

}  // namespace phylo
