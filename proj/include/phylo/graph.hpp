#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phylo/errors.hpp"

namespace phylo {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t to_mask(const std::vector<int>& vertices);
std::vector<int> from_mask(std::uint64_t mask);

/// Undirected simple graph on dense vertex ids 0..n-1, at most 64 vertices.
/// Adjacency is one 64-bit mask per vertex. Values are cheap to copy and the
/// algorithms below never mutate their inputs, so graphs are safe to share
/// across threads once built.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(checked_size(n)), adj_(n, 0) {}

  static SimpleGraph from_edges(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return u != v && ((adj_[u] >> v) & 1) != 0;
  }

  // Idempotent; rejects self-loops.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) return;
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
    ++m_;
  }

  std::uint64_t adjacency_mask(int v) const { return adj_[v]; }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;  // sorted

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }
  bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

 private:
  static int checked_size(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
      throw resource_limit_error("graph on " + std::to_string(n) +
                                 " vertices exceeds the supported maximum of " +
                                 std::to_string(kMaxVertices));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Induced cycle of length >= 4, stored as the canonical cyclic sequence:
/// the lexicographically minimal rotation over both orientations.
struct Hole {
  std::vector<int> cycle;

  static Hole canonical(std::vector<int> cycle);
  bool validates(const SimpleGraph& g) const;
  std::size_t length() const { return cycle.size(); }

  bool operator==(const Hole& o) const { return cycle == o.cycle; }
  bool operator!=(const Hole& o) const { return cycle != o.cycle; }
  bool operator<(const Hole& o) const {
    if (cycle.size() != o.cycle.size()) return cycle.size() < o.cycle.size();
    return cycle < o.cycle;
  }
};

/// Either a perfect elimination ordering (chordal) or a hole witness (not).
/// Exactly one branch is populated.
struct ChordalCertificate {
  bool chordal = false;
  std::vector<int> elimination_order;  // set iff chordal
  std::optional<Hole> hole;            // set iff not chordal
};

struct CliqueGraph {
  SimpleGraph base;
  std::vector<std::vector<int>> cliques;  // sorted vertex lists, lexicographic
  SimpleGraph derived;  // vertex per clique, edge iff cliques intersect
};

struct Contraction {
  SimpleGraph graph;
  std::vector<int> vertex_map;  // old id -> new id; both endpoints map together
};

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> removal_order;
};

struct MinorWitness {
  // One connected branch set per pattern vertex, disjoint, with every pattern
  // edge realized by an edge between the two branch sets.
  std::vector<std::vector<int>> branch_sets;
};

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> original_ids;  // local id -> original id, ascending
};

inline constexpr std::uint64_t kDefaultMinorNodeBudget = 10'000'000;

bool is_chordal(const SimpleGraph& g);
ChordalCertificate chordal_certificate(const SimpleGraph& g);

/// All holes in canonical form, sorted by (length, sequence); the result list
/// is truncated at `limit` when given.
std::vector<Hole> find_holes(const SimpleGraph& g,
                             std::optional<std::size_t> limit = std::nullopt);

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
CliqueGraph clique_graph(const SimpleGraph& g);

bool is_forest(const SimpleGraph& g);
std::optional<std::vector<int>> find_cycle(const SimpleGraph& g);
int max_degree(const SimpleGraph& g);
bool is_disjoint_union_of_paths(const SimpleGraph& g);
std::vector<std::vector<int>> components(const SimpleGraph& g);
bool is_triangle_free(const SimpleGraph& g);

bool is_diamond_free(const SimpleGraph& g);
std::optional<std::vector<int>> find_diamond(const SimpleGraph& g);

DegeneracyResult degeneracy(const SimpleGraph& g);

Contraction contract_edge(const SimpleGraph& g, int u, int v);

std::optional<MinorWitness> find_minor(
    const SimpleGraph& g, const SimpleGraph& pattern,
    std::uint64_t node_budget = kDefaultMinorNodeBudget);
bool has_minor(const SimpleGraph& g, const SimpleGraph& pattern,
               std::uint64_t node_budget = kDefaultMinorNodeBudget);

/// Wagner route: planar iff neither a K_5 nor a K_{3,3} minor exists.
bool is_planar(const SimpleGraph& g,
               std::uint64_t node_budget = kDefaultMinorNodeBudget);

SimpleGraph join_with_independent_set(const SimpleGraph& g, int k);

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertices);

/// BFS shortest path from `from` to `to` using only vertices in `allowed`
/// (which must contain both endpoints). Deterministic: neighbors expand in
/// ascending id order.
std::optional<std::vector<int>> shortest_path_within(const SimpleGraph& g,
                                                     int from, int to,
                                                     std::uint64_t allowed);

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph complete_bipartite(int a, int b);

}  // namespace phylo
