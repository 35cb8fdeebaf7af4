#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace oracle {

using phylo::Digraph;
using phylo::Edge;
using phylo::Hole;
using phylo::SimpleGraph;
using phylo::vertex_bit;

namespace {

int lowest(std::uint64_t m) { return std::countr_zero(m); }

bool connected_within(const SimpleGraph& g, std::uint64_t subset) {
  if (!subset) return false;
  std::uint64_t reach = vertex_bit(lowest(subset));
  for (;;) {
    std::uint64_t grow = 0;
    for (auto m = reach; m; m &= m - 1)
      grow |= g.adjacency_mask(lowest(m));
    grow &= subset & ~reach;
    if (!grow) break;
    reach |= grow;
  }
  return reach == subset;
}

}  // namespace

std::vector<Hole> holes(const SimpleGraph& g) {
  std::vector<Hole> out;
  const int n = g.vertex_count();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    if (std::popcount(subset) < 4) continue;
    // an induced cycle is exactly a connected 2-regular induced subgraph
    bool two_regular = true;
    for (auto m = subset; m && two_regular; m &= m - 1)
      two_regular = std::popcount(g.adjacency_mask(lowest(m)) & subset) == 2;
    if (!two_regular || !connected_within(g, subset)) continue;
    std::vector<int> cycle{lowest(subset)};
    std::uint64_t used = vertex_bit(cycle[0]);
    while (cycle.size() < static_cast<std::size_t>(std::popcount(subset))) {
      const std::uint64_t next = g.adjacency_mask(cycle.back()) & subset & ~used;
      cycle.push_back(lowest(next));
      used |= vertex_bit(cycle.back());
    }
    out.push_back(Hole::canonical(cycle));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chordal(const SimpleGraph& g) { return holes(g).empty(); }

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    bool clique = true;
    for (auto m = subset; m && clique; m &= m - 1) {
      const int v = lowest(m);
      clique = (g.adjacency_mask(v) & subset) == (subset & ~vertex_bit(v));
    }
    if (!clique) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (subset & vertex_bit(w)) continue;
      maximal = (g.adjacency_mask(w) & subset) != subset;
    }
    if (maximal) cliques.push_back(subset);
  }
  std::vector<std::vector<int>> out;
  for (auto c : cliques) out.push_back(phylo::from_mask(c));
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const SimpleGraph& g) {
  int best = 0;
  for (const auto& c : oracle::maximal_cliques(g))
    best = std::max<int>(best, static_cast<int>(c.size()));
  return best;
}

int degeneracy(const SimpleGraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    int min_deg = 64;
    for (auto m = subset; m; m &= m - 1)
      min_deg = std::min(
          min_deg, std::popcount(g.adjacency_mask(lowest(m)) & subset));
    best = std::max(best, min_deg);
  }
  return best;
}

bool is_forest(const SimpleGraph& g) {
  // peel degree-<=1 vertices; a cycle survives peeling
  std::uint64_t left = g.vertex_mask();
  for (;;) {
    std::uint64_t removable = 0;
    for (auto m = left; m; m &= m - 1) {
      const int v = lowest(m);
      if (std::popcount(g.adjacency_mask(v) & left) <= 1)
        removable |= vertex_bit(v);
    }
    if (!removable) break;
    left &= ~removable;
  }
  return left == 0;
}

int max_degree(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_triangle_free(const SimpleGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
          return false;
  return true;
}

bool is_diamond_free(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> four(4);
  for (four[0] = 0; four[0] < n; ++four[0])
    for (four[1] = four[0] + 1; four[1] < n; ++four[1])
      for (four[2] = four[1] + 1; four[2] < n; ++four[2])
        for (four[3] = four[2] + 1; four[3] < n; ++four[3]) {
          int edges = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              edges += g.has_edge(four[a], four[b]) ? 1 : 0;
          if (edges == 5) return false;
        }
  return true;
}

bool has_minor(const SimpleGraph& g, const SimpleGraph& pattern) {
  const int n = g.vertex_count();
  const int h = pattern.vertex_count();
  if (h == 0) return true;
  std::vector<int> assign(n, 0);  // 0 = unused, 1..h = branch set
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) {
      std::vector<std::uint64_t> branch(h, 0);
      for (int u = 0; u < n; ++u)
        if (assign[u] > 0) branch[assign[u] - 1] |= vertex_bit(u);
      for (int p = 0; p < h; ++p)
        if (!branch[p] || !connected_within(g, branch[p])) return false;
      for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b) {
          if (!pattern.has_edge(a, b)) continue;
          bool touched = false;
          for (auto m = branch[a]; m && !touched; m &= m - 1)
            touched = (g.adjacency_mask(lowest(m)) & branch[b]) != 0;
          if (!touched) return false;
        }
      return true;
    }
    for (assign[v] = 0; assign[v] <= h; ++assign[v])
      if (place(v + 1)) return true;
    return false;
  };
  return place(0);
}

bool is_planar(const SimpleGraph& g) {
  return !oracle::has_minor(g, phylo::complete_graph(5)) &&
         !oracle::has_minor(g, phylo::complete_bipartite(3, 3));
}

bool is_acyclic(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    std::vector<int> label(n);
    for (int k = 0; k < n; ++k) label[perm[k]] = k + 1;
    for (const auto& [u, v] : d.arcs())
      if (label[u] <= label[v]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

bool is_ij(const Digraph& d, phylo::DegreeBounds b) {
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.indegree(v) > b.max_indegree || d.outdegree(v) > b.max_outdegree)
      return false;
  return oracle::is_acyclic(d);
}

SimpleGraph underlying(const Digraph& d) {
  SimpleGraph g(d.vertex_count());
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v = 0; v < d.vertex_count(); ++v)
      if (u != v && (d.has_arc(u, v) || d.has_arc(v, u))) g.add_edge(u, v);
  return g;
}

SimpleGraph competition(const Digraph& d) {
  const int n = d.vertex_count();
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (d.has_arc(u, w) && d.has_arc(v, w)) g.add_edge(u, v);
  return g;
}

SimpleGraph phylogeny(const Digraph& d) {
  SimpleGraph g = underlying(d);
  for (const auto& [u, v] : competition(d).edges()) g.add_edge(u, v);
  return g;
}

std::vector<Digraph> all_digraphs(
    int n, const std::function<bool(const Digraph&)>& keep) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    Digraph d(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) d.add_arc(slots[s].first, slots[s].second);
    if (keep(d)) out.push_back(std::move(d));
  }
  return out;
}

std::vector<SimpleGraph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    SimpleGraph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) g.add_edge(slots[s].first, slots[s].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
