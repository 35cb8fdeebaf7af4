#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phylo/errors.hpp"
#include "phylo/graph.hpp"

namespace phylo {

using Arc = std::pair<int, int>;  // ordered (tail, head)

/// Finite simple digraph on dense vertex ids 0..n-1, at most 64 vertices.
/// No self-loops, no duplicate arcs; a pair of opposite arcs is representable
/// (acyclicity checks flag it as a 2-cycle).
class Digraph {
 public:
  static constexpr int kMaxVertices = 64;

  Digraph() = default;
  explicit Digraph(int n) : n_(checked_size(n)), out_(n, 0), in_(n, 0) {}

  static Digraph from_arcs(int n, const std::vector<Arc>& arcs) {
    Digraph d(n);
    for (const auto& [u, v] : arcs) d.add_arc(u, v);
    return d;
  }

  int vertex_count() const { return n_; }
  int arc_count() const { return m_; }

  bool has_arc(int u, int v) const {
    return u != v && ((out_[u] >> v) & 1) != 0;
  }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop arc");
    if (has_arc(u, v)) return;
    out_[u] |= vertex_bit(v);
    in_[v] |= vertex_bit(u);
    ++m_;
  }

  void remove_arc(int u, int v) {
    if (!has_arc(u, v)) return;
    out_[u] &= ~vertex_bit(v);
    in_[v] &= ~vertex_bit(u);
    --m_;
  }

  std::uint64_t out_mask(int v) const { return out_[v]; }
  std::uint64_t in_mask(int v) const { return in_[v]; }
  int outdegree(int v) const;
  int indegree(int v) const;
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<Arc> arcs() const;  // sorted by (tail, head)
  SimpleGraph underlying() const;

  bool operator==(const Digraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }
  bool operator!=(const Digraph& o) const { return !(*this == o); }

 private:
  static int checked_size(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
      throw resource_limit_error(
          "digraph on " + std::to_string(n) +
          " vertices exceeds the supported maximum of " +
          std::to_string(kMaxVertices));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Bijection vertex -> 1..n with label(tail) > label(head) for every arc.
struct AcyclicLabeling {
  std::vector<int> label;
  bool validates(const Digraph& d) const;
};

struct AcyclicityResult {
  std::optional<AcyclicLabeling> labeling;  // present iff acyclic
  std::vector<int> cycle;                   // directed cycle witness otherwise
  bool acyclic() const { return labeling.has_value(); }
};

/// Deterministic: among vertices whose out-neighbors are all labeled, the
/// smallest id receives the next label. This is the labeling every other
/// module uses for tie-breaking.
AcyclicityResult is_acyclic(const Digraph& d);

struct DegreeBounds {
  int max_indegree = 1;
  int max_outdegree = 1;
};

struct IjViolation {
  enum class Kind { indegree, outdegree, cycle };
  Kind kind = Kind::cycle;
  int vertex = -1;    // degree violations
  int observed = 0;   // the offending degree
  std::vector<int> cycle;  // directed cycle, kind == cycle
  std::string describe() const;
};

struct IjReport {
  bool ok = false;
  std::optional<IjViolation> violation;
};

/// True iff d is acyclic with all indegrees <= b.max_indegree and all
/// outdegrees <= b.max_outdegree. The first violation (vertices scanned in
/// ascending id order, degrees before acyclicity) is reported.
IjReport check_ij(const Digraph& d, DegreeBounds b);
bool is_ij(const Digraph& d, DegreeBounds b);

struct ComponentDigraph {
  Digraph digraph;
  std::vector<int> original_ids;  // local id -> original id, ascending
};

std::vector<ComponentDigraph> weak_components(const Digraph& d);

struct EnumerationStats {
  std::uint64_t visited = 0;
};

/// Upper bound on the number of digraphs enumerate_ij_dags visits (product of
/// per-vertex out-set choices, ignoring indegree interaction). Saturates.
std::uint64_t projected_enumeration_bound(int n, DegreeBounds b);

namespace detail {

// Streams the canonical family of (i, j) digraphs on vertices 0..n-1: every
// arc points from the higher id to the lower, vertex u picks its out-set among
// {0..u-1} (at most j targets, each with running indegree < i), and out-sets
// are iterated in lexicographic order with shorter prefixes first. The family
// contains every digraph with decreasing arcs and degrees within bounds
// exactly once, hence a representative of every isomorphism class.
//
// Sharding splits the choice tree at `split_vertex`: subtree t goes to shard
// (t mod shard_count). The union over shards equals the serial run and the
// serial run is shard 0 of 1.
template <class Visitor>
class IjDagEnumerator {
 public:
  IjDagEnumerator(int n, DegreeBounds b, int shard, int shard_count,
                  Visitor& visit)
      : n_(n), bounds_(b), shard_(shard), shard_count_(shard_count),
        visit_(visit), d_(n) {
    if (n < 0 || n > Digraph::kMaxVertices)
      throw std::invalid_argument("enumeration size out of range");
    if (b.max_indegree < 1 || b.max_outdegree < 1)
      throw std::invalid_argument("degree bounds must be positive");
    if (shard_count < 1 || shard < 0 || shard >= shard_count)
      throw std::invalid_argument("bad shard spec");
    split_vertex_ = std::min(std::max(n_ - 1, 1), 5);
    indeg_.fill(0);
  }

  EnumerationStats run() {
    if (n_ == 0) return stats_;
    descend(1);  // vertex 0 never has candidates
    return stats_;
  }

 private:
  void descend(int u) {
    if (aborted_) return;
    if (u == split_vertex_ && shard_count_ > 1) {
      if (static_cast<int>(subtree_++ % static_cast<std::uint64_t>(
                               shard_count_)) != shard_)
        return;
    }
    if (u >= n_) {
      ++stats_.visited;
      if (!visit_(static_cast<const Digraph&>(d_))) aborted_ = true;
      return;
    }
    choose(u, 0, 0);
  }

  // Out-sets of u in lexicographic order: the current subset is emitted before
  // any extension, and extensions add strictly larger target ids.
  void choose(int u, int start, int size) {
    descend(u + 1);
    if (aborted_ || size == bounds_.max_outdegree) return;
    for (int t = start; t < u; ++t) {
      if (indeg_[t] >= bounds_.max_indegree) continue;
      d_.add_arc(u, t);
      ++indeg_[t];
      choose(u, t + 1, size + 1);
      d_.remove_arc(u, t);
      --indeg_[t];
      if (aborted_) return;
    }
  }

  int n_;
  DegreeBounds bounds_;
  int shard_;
  int shard_count_;
  Visitor& visit_;
  Digraph d_;
  std::array<int, 64> indeg_{};
  int split_vertex_ = 0;
  std::uint64_t subtree_ = 0;
  EnumerationStats stats_;
  bool aborted_ = false;
};

}  // namespace detail

/// Invokes `visit` once per digraph of the canonical (i, j) family on n
/// vertices. The visited reference is only valid during the call; copy it to
/// keep it. Returning false aborts the enumeration.
template <class Visitor>
EnumerationStats enumerate_ij_dags(int n, DegreeBounds b, Visitor&& visit) {
  detail::IjDagEnumerator<Visitor> e(n, b, 0, 1, visit);
  return e.run();
}

/// Shard `shard` of `shard_count`: a deterministic partition of the same
/// family. Merging all shards' visits reproduces the serial enumeration.
template <class Visitor>
EnumerationStats enumerate_ij_dags_shard(int n, DegreeBounds b, int shard,
                                         int shard_count, Visitor&& visit) {
  detail::IjDagEnumerator<Visitor> e(n, b, shard, shard_count, visit);
  return e.run();
}

}  // namespace phylo
