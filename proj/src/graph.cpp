#include "phylo/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <functional>

namespace phylo {

namespace {

int lowest(std::uint64_t m) { return std::countr_zero(m); }
int popcount(std::uint64_t m) { return std::popcount(m); }

}  // namespace

std::uint64_t to_mask(const std::vector<int>& vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) m |= vertex_bit(v);
  return m;
}

std::vector<int> from_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (auto m = mask; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

int SimpleGraph::degree(int v) const { return popcount(adj_[v]); }

std::vector<int> SimpleGraph::neighbors(int v) const {
  return from_mask(adj_[v]);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (auto m = adj_[u] >> u; m; m &= m - 1)
      out.emplace_back(u, u + lowest(m));
  return out;
}

// ---------------------------------------------------------------------------
// Holes

Hole Hole::canonical(std::vector<int> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) throw std::invalid_argument("hole needs at least four vertices");
  std::size_t at = 0;
  for (std::size_t i = 1; i < k; ++i)
    if (cycle[i] < cycle[at]) at = i;
  std::vector<int> fwd(k), bwd(k);
  for (std::size_t i = 0; i < k; ++i) {
    fwd[i] = cycle[(at + i) % k];
    bwd[i] = cycle[(at + k - i) % k];
  }
  Hole h;
  h.cycle = std::min(fwd, bwd);
  return h;
}

bool Hole::validates(const SimpleGraph& g) const {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::uint64_t seen = 0;
  for (int v : cycle) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (seen & vertex_bit(v)) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Chordality: Lex-BFS order, reverse it, check the perfect-elimination
// property via the classic parent test. On failure a hole is extracted with
// shortest-path shortcutting through the violated triple.

namespace {

std::vector<int> lex_bfs_order(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  // Higher bit positions correspond to earlier visits, so lexicographic
  // comparison of labels is plain integer comparison.
  std::array<std::uint64_t, 64> label{};
  std::uint64_t unvisited = g.vertex_mask();
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (auto m = unvisited; m; m &= m - 1) {
      const int v = lowest(m);
      if (best < 0 || label[v] > label[best]) best = v;
    }
    order[step] = best;
    unvisited &= ~vertex_bit(best);
    const std::uint64_t stepbit = std::uint64_t{1} << (63 - step);
    for (auto m = g.adjacency_mask(best) & unvisited; m; m &= m - 1)
      label[lowest(m)] |= stepbit;
  }
  return order;
}

// Checks that each vertex's later neighbors in `elim` form a clique. It is
// enough to test the later neighbors against the first of them: cliqueness
// then propagates backwards along the order. On failure, `bad` receives a
// triple (v, p, w) with p, w adjacent to v but not to each other.
bool peo_check(const SimpleGraph& g, const std::vector<int>& elim,
               std::array<int, 3>* bad) {
  const int n = g.vertex_count();
  std::array<int, 64> pos{};
  for (int k = 0; k < n; ++k) pos[elim[k]] = k;
  std::uint64_t remaining = g.vertex_mask();
  for (int k = 0; k < n; ++k) {
    const int v = elim[k];
    remaining &= ~vertex_bit(v);
    const std::uint64_t later = g.adjacency_mask(v) & remaining;
    if (!later) continue;
    int parent = -1;
    for (auto m = later; m; m &= m - 1) {
      const int w = lowest(m);
      if (parent < 0 || pos[w] < pos[parent]) parent = w;
    }
    const std::uint64_t missing =
        (later & ~vertex_bit(parent)) & ~g.adjacency_mask(parent);
    if (missing) {
      if (bad) *bad = {v, parent, lowest(missing)};
      return false;
    }
  }
  return true;
}

std::vector<int> reversed_lex_bfs(const SimpleGraph& g) {
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  return order;
}

// a, b are non-adjacent neighbors of v: a chordless a..b path avoiding the
// rest of N[v] closes the hole through v.
std::optional<Hole> hole_through(const SimpleGraph& g, int v, int a, int b) {
  std::uint64_t allowed =
      g.vertex_mask() & ~(g.adjacency_mask(v) | vertex_bit(v));
  allowed |= vertex_bit(a) | vertex_bit(b);
  auto path = shortest_path_within(g, a, b, allowed);
  if (!path) return std::nullopt;
  path->push_back(v);
  return Hole::canonical(*path);
}

Hole extract_hole(const SimpleGraph& g, std::array<int, 3> seed) {
  if (auto h = hole_through(g, seed[0], seed[1], seed[2])) return *h;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        if (auto h = hole_through(g, v, nb[i], nb[j])) return *h;
      }
  }
  throw theorem_violation("non-chordal graph yielded no extractable hole");
}

}  // namespace

bool is_chordal(const SimpleGraph& g) {
  return peo_check(g, reversed_lex_bfs(g), nullptr);
}

ChordalCertificate chordal_certificate(const SimpleGraph& g) {
  ChordalCertificate cert;
  auto elim = reversed_lex_bfs(g);
  std::array<int, 3> bad{};
  if (peo_check(g, elim, &bad)) {
    cert.chordal = true;
    cert.elimination_order = std::move(elim);
  } else {
    cert.chordal = false;
    cert.hole = extract_hole(g, bad);
  }
  return cert;
}

std::optional<std::vector<int>> shortest_path_within(const SimpleGraph& g,
                                                     int from, int to,
                                                     std::uint64_t allowed) {
  if (!(allowed & vertex_bit(from)) || !(allowed & vertex_bit(to)))
    return std::nullopt;
  if (from == to) return std::vector<int>{from};
  std::array<int, 64> parent{};
  parent.fill(-1);
  std::array<int, 64> queue{};
  int head = 0, tail = 0;
  queue[tail++] = from;
  std::uint64_t seen = vertex_bit(from);
  while (head < tail) {
    const int v = queue[head++];
    for (auto m = g.adjacency_mask(v) & allowed & ~seen; m; m &= m - 1) {
      const int w = lowest(m);
      parent[w] = v;
      if (w == to) {
        std::vector<int> path;
        for (int x = to; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      seen |= vertex_bit(w);
      queue[tail++] = w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hole listing: DFS over induced paths. path[0] is the minimum vertex of the
// hole and the closing vertex must exceed path[1], so each hole is produced
// exactly once, already in canonical rotation.

namespace {

struct HoleSearch {
  const SimpleGraph& g;
  std::vector<Hole> found;
  std::vector<int> path;
  std::uint64_t on_path = 0;

  void grow() {
    const int s = path.front();
    const int u = path.back();
    const std::uint64_t mid =
        on_path & ~vertex_bit(s) & ~vertex_bit(u);  // interior vertices
    for (auto m = g.adjacency_mask(u) & ~on_path; m; m &= m - 1) {
      const int x = lowest(m);
      if (x <= s) continue;
      if (g.adjacency_mask(x) & mid) continue;  // chord against the interior
      if (g.has_edge(x, s)) {
        if (path.size() >= 3 && path[1] < x) {
          path.push_back(x);
          found.push_back(Hole::canonical(path));
          path.pop_back();
        }
        continue;  // x may only close, never pass through
      }
      path.push_back(x);
      on_path |= vertex_bit(x);
      grow();
      on_path &= ~vertex_bit(x);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Hole> find_holes(const SimpleGraph& g,
                             std::optional<std::size_t> limit) {
  HoleSearch search{g, {}, {}, 0};
  const int n = g.vertex_count();
  for (int s = 0; s < n; ++s) {
    for (auto m = g.adjacency_mask(s); m; m &= m - 1) {
      const int a = lowest(m);
      if (a <= s) continue;
      search.path = {s, a};
      search.on_path = vertex_bit(s) | vertex_bit(a);
      search.grow();
    }
  }
  std::sort(search.found.begin(), search.found.end());
  if (limit && search.found.size() > *limit) search.found.resize(*limit);
  return search.found;
}

// ---------------------------------------------------------------------------
// Cliques (Bron-Kerbosch with pivoting)

namespace {

void bron_kerbosch(const SimpleGraph& g, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (auto m = p | x; m; m &= m - 1) {
    const int u = lowest(m);
    const int gain = popcount(p & g.adjacency_mask(u));
    if (gain > best) {
      best = gain;
      pivot = u;
    }
  }
  for (auto m = p & ~g.adjacency_mask(pivot); m; m &= m - 1) {
    const int v = lowest(m);
    bron_kerbosch(g, r | vertex_bit(v), p & g.adjacency_mask(v),
                  x & g.adjacency_mask(v), out);
    p &= ~vertex_bit(v);
    x |= vertex_bit(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::uint64_t> masks;
  if (g.vertex_count() > 0)
    bron_kerbosch(g, 0, g.vertex_mask(), 0, masks);
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const SimpleGraph& g) {
  int best = 0;
  for (const auto& c : maximal_cliques(g))
    best = std::max<int>(best, static_cast<int>(c.size()));
  return best;
}

CliqueGraph clique_graph(const SimpleGraph& g) {
  CliqueGraph kg;
  kg.base = g;
  kg.cliques = maximal_cliques(g);
  const int k = static_cast<int>(kg.cliques.size());
  if (k > SimpleGraph::kMaxVertices)
    throw resource_limit_error("clique graph on " + std::to_string(k) +
                               " maximal cliques exceeds the supported "
                               "maximum of 64 vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(kg.cliques.size());
  for (const auto& c : kg.cliques) masks.push_back(to_mask(c));
  kg.derived = SimpleGraph(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (masks[a] & masks[b]) kg.derived.add_edge(a, b);
  return kg;
}

// ---------------------------------------------------------------------------
// Forests, paths, components

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t left = g.vertex_mask();
  while (left) {
    std::uint64_t comp = vertex_bit(lowest(left));
    for (;;) {
      std::uint64_t grow = 0;
      for (auto m = comp; m; m &= m - 1) grow |= g.adjacency_mask(lowest(m));
      grow &= left & ~comp;
      if (!grow) break;
      comp |= grow;
    }
    out.push_back(from_mask(comp));
    left &= ~comp;
  }
  return out;
}

bool is_forest(const SimpleGraph& g) {
  return g.edge_count() ==
         g.vertex_count() - static_cast<int>(components(g).size());
}

namespace {

bool cycle_dfs(const SimpleGraph& g, int v, int parent, std::uint64_t& visited,
               std::vector<int>& stack, std::vector<int>& cycle) {
  visited |= vertex_bit(v);
  stack.push_back(v);
  for (auto m = g.adjacency_mask(v); m; m &= m - 1) {
    const int w = lowest(m);
    if (w == parent) continue;
    if (visited & vertex_bit(w)) {
      // w is an ancestor on the DFS stack; emit the stack segment from w
      auto it = std::find(stack.begin(), stack.end(), w);
      if (it != stack.end()) {
        cycle.assign(it, stack.end());
        return true;
      }
      continue;
    }
    if (cycle_dfs(g, w, v, visited, stack, cycle)) return true;
  }
  stack.pop_back();
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const SimpleGraph& g) {
  std::uint64_t visited = 0;
  std::vector<int> stack, cycle;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (visited & vertex_bit(v)) continue;
    stack.clear();
    if (cycle_dfs(g, v, -1, visited, stack, cycle)) return cycle;
  }
  return std::nullopt;
}

int max_degree(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

bool is_disjoint_union_of_paths(const SimpleGraph& g) {
  return is_forest(g) && max_degree(g) <= 2;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.adjacency_mask(u) & g.adjacency_mask(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Diamonds: an edge uv whose common neighborhood is not a clique gives an
// induced K_4 minus an edge on {u, v, a, b}.

std::optional<std::vector<int>> find_diamond(const SimpleGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t common = g.adjacency_mask(u) & g.adjacency_mask(v);
    for (auto m = common; m; m &= m - 1) {
      const int a = lowest(m);
      const std::uint64_t rest = common & ~g.adjacency_mask(a) & (m & (m - 1));
      if (rest) {
        std::vector<int> witness{u, v, a, lowest(rest)};
        std::sort(witness.begin(), witness.end());
        return witness;
      }
    }
  }
  return std::nullopt;
}

bool is_diamond_free(const SimpleGraph& g) { return !find_diamond(g); }

// ---------------------------------------------------------------------------
// Degeneracy: repeated minimum-degree removal, smallest id first on ties.

DegeneracyResult degeneracy(const SimpleGraph& g) {
  DegeneracyResult r;
  std::uint64_t rem = g.vertex_mask();
  while (rem) {
    int best = -1, bd = 65;
    for (auto m = rem; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = popcount(g.adjacency_mask(v) & rem);
      if (d < bd) {
        bd = d;
        best = v;
      }
    }
    r.degeneracy = std::max(r.degeneracy, bd);
    r.removal_order.push_back(best);
    rem &= ~vertex_bit(best);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Contraction

Contraction contract_edge(const SimpleGraph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("contract_edge: not an edge");
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  const int n = g.vertex_count();
  Contraction c;
  c.vertex_map.resize(n);
  for (int w = 0; w < n; ++w) {
    const int w2 = (w == drop) ? keep : w;
    c.vertex_map[w] = w2 < drop ? w2 : w2 - 1;
  }
  c.graph = SimpleGraph(n - 1);
  for (const auto& [a, b] : g.edges()) {
    const int a2 = c.vertex_map[a];
    const int b2 = c.vertex_map[b];
    if (a2 != b2) c.graph.add_edge(a2, b2);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Minors: backtracking over branch sets. Pattern vertices are placed in order
// of decreasing degree; candidate branch sets are connected subsets of the
// unused vertices, enumerated exactly once each (ESU-style growth where only
// exclusive neighbors extend the frontier), and must touch the neighborhood
// of every earlier adjacent branch set.

namespace {

struct MinorSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> porder;
  std::vector<std::uint64_t> branch;
  std::uint64_t used = 0;

  MinorSearch(const SimpleGraph& g_, const SimpleGraph& h_, std::uint64_t b)
      : g(g_), h(h_), budget(b), branch(h_.vertex_count(), 0) {
    porder.resize(h.vertex_count());
    for (int i = 0; i < h.vertex_count(); ++i) porder[i] = i;
    std::stable_sort(porder.begin(), porder.end(), [&](int a, int b2) {
      return h.degree(a) > h.degree(b2);
    });
  }

  void tick() {
    if (++nodes > budget)
      throw resource_limit_error(
          "minor search exceeded the node budget of " +
          std::to_string(budget) + " (instance too large)");
  }

  std::uint64_t neighborhood(std::uint64_t s) const {
    std::uint64_t r = 0;
    for (auto m = s; m; m &= m - 1) r |= g.adjacency_mask(lowest(m));
    return r & ~s;
  }

  bool place(std::size_t k) {
    tick();
    if (k == porder.size()) return true;
    const int p = porder[k];
    std::vector<std::uint64_t> required;
    for (std::size_t e = 0; e < k; ++e) {
      const int q = porder[e];
      if (!h.has_edge(p, q)) continue;
      const std::uint64_t r = neighborhood(branch[q]) & ~used;
      if (!r) return false;
      required.push_back(r);
    }
    const std::uint64_t free = g.vertex_mask() & ~used;
    const int slots_left =
        static_cast<int>(porder.size()) - static_cast<int>(k) - 1;
    const int max_size = popcount(free) - slots_left;
    if (max_size < 1) return false;
    for (auto sm = free; sm; sm &= sm - 1) {
      const int seed = lowest(sm);
      // connected subsets whose minimum vertex is `seed`
      const std::uint64_t above = ~((vertex_bit(seed) << 1) - 1);
      if (grow(k, p, required, vertex_bit(seed),
               g.adjacency_mask(seed) & free & above, free & above, max_size))
        return true;
    }
    return false;
  }

  bool grow(std::size_t k, int p, const std::vector<std::uint64_t>& required,
            std::uint64_t s, std::uint64_t ext, std::uint64_t pool,
            int max_size) {
    tick();
    bool ok = true;
    for (auto r : required)
      if (!(r & s)) {
        ok = false;
        break;
      }
    if (ok) {
      branch[p] = s;
      used |= s;
      if (place(k + 1)) return true;
      used &= ~s;
      branch[p] = 0;
    }
    if (popcount(s) >= max_size) return false;
    const std::uint64_t closed = s | neighborhood(s);
    while (ext) {
      const int w = lowest(ext);
      ext &= ext - 1;
      const std::uint64_t exclusive =
          g.adjacency_mask(w) & pool & ~closed;
      if (grow(k, p, required, s | vertex_bit(w), ext | exclusive, pool,
               max_size))
        return true;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorWitness> find_minor(const SimpleGraph& g,
                                       const SimpleGraph& pattern,
                                       std::uint64_t node_budget) {
  if (pattern.vertex_count() == 0) return MinorWitness{};
  if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > g.edge_count()) return std::nullopt;
  MinorSearch s(g, pattern, node_budget);
  if (!s.place(0)) return std::nullopt;
  MinorWitness w;
  w.branch_sets.resize(pattern.vertex_count());
  for (int p = 0; p < pattern.vertex_count(); ++p)
    w.branch_sets[p] = from_mask(s.branch[p]);
  return w;
}

bool has_minor(const SimpleGraph& g, const SimpleGraph& pattern,
               std::uint64_t node_budget) {
  return find_minor(g, pattern, node_budget).has_value();
}

bool is_planar(const SimpleGraph& g, std::uint64_t node_budget) {
  return !has_minor(g, complete_graph(5), node_budget) &&
         !has_minor(g, complete_bipartite(3, 3), node_budget);
}

// ---------------------------------------------------------------------------
// Constructions

SimpleGraph join_with_independent_set(const SimpleGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative independent set size");
  const int n = g.vertex_count();
  SimpleGraph out(n + k);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int a = 0; a < k; ++a)
    for (int v = 0; v < n; ++v) out.add_edge(n + a, v);
  return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertices) {
  InducedSubgraph sub;
  sub.original_ids = from_mask(vertices & g.vertex_mask());
  std::array<int, 64> local{};
  for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
    local[sub.original_ids[i]] = static_cast<int>(i);
  sub.graph = SimpleGraph(static_cast<int>(sub.original_ids.size()));
  for (int v : sub.original_ids)
    for (auto m = g.adjacency_mask(v) & vertices; m; m &= m - 1) {
      const int w = lowest(m);
      if (w > v) sub.graph.add_edge(local[v], local[w]);
    }
  return sub;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

}  // namespace phylo
