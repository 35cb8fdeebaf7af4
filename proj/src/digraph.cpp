#include "phylo/digraph.hpp"

#include <algorithm>
#include <bit>

namespace phylo {

namespace {
int lowest(std::uint64_t m) { return std::countr_zero(m); }
}  // namespace

int Digraph::outdegree(int v) const { return std::popcount(out_[v]); }
int Digraph::indegree(int v) const { return std::popcount(in_[v]); }

std::vector<int> Digraph::out_neighbors(int v) const {
  return from_mask(out_[v]);
}

std::vector<int> Digraph::in_neighbors(int v) const { return from_mask(in_[v]); }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (auto m = out_[u]; m; m &= m - 1) out.emplace_back(u, lowest(m));
  return out;
}

SimpleGraph Digraph::underlying() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u)
    for (auto m = out_[u]; m; m &= m - 1) g.add_edge(u, lowest(m));
  return g;
}

bool AcyclicLabeling::validates(const Digraph& d) const {
  if (static_cast<int>(label.size()) != d.vertex_count()) return false;
  std::uint64_t seen = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (label[v] < 1 || label[v] > d.vertex_count()) return false;
    if (seen & vertex_bit(label[v] - 1)) return false;
    seen |= vertex_bit(label[v] - 1);
  }
  for (const auto& [u, v] : d.arcs())
    if (label[u] <= label[v]) return false;
  return true;
}

AcyclicityResult is_acyclic(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> label(n, 0);
  std::uint64_t unlabeled = d.vertex_mask();
  int next = 1;
  while (unlabeled) {
    int pick = -1;
    for (auto m = unlabeled; m; m &= m - 1) {
      const int v = lowest(m);
      if ((d.out_mask(v) & unlabeled) == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;  // every remaining vertex keeps an out-arc: cycle
    label[pick] = next++;
    unlabeled &= ~vertex_bit(pick);
  }
  AcyclicityResult r;
  if (!unlabeled) {
    r.labeling = AcyclicLabeling{std::move(label)};
    return r;
  }
  // Walk out-arcs inside the stuck set until a vertex repeats.
  std::vector<int> walk;
  std::vector<int> seen_at(n, -1);
  int v = lowest(unlabeled);
  for (;;) {
    if (seen_at[v] >= 0) {
      r.cycle.assign(walk.begin() + seen_at[v], walk.end());
      return r;
    }
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = lowest(d.out_mask(v) & unlabeled);
  }
}

std::string IjViolation::describe() const {
  switch (kind) {
    case Kind::indegree:
      return "vertex " + std::to_string(vertex) + " has indegree " +
             std::to_string(observed);
    case Kind::outdegree:
      return "vertex " + std::to_string(vertex) + " has outdegree " +
             std::to_string(observed);
    case Kind::cycle: {
      std::string s = "directed cycle:";
      for (int v : cycle) s += " " + std::to_string(v);
      return s;
    }
  }
  return {};
}

IjReport check_ij(const Digraph& d, DegreeBounds b) {
  if (b.max_indegree < 1 || b.max_outdegree < 1)
    throw std::invalid_argument("degree bounds must be positive");
  IjReport r;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.indegree(v) > b.max_indegree) {
      r.violation = IjViolation{IjViolation::Kind::indegree, v, d.indegree(v), {}};
      return r;
    }
    if (d.outdegree(v) > b.max_outdegree) {
      r.violation =
          IjViolation{IjViolation::Kind::outdegree, v, d.outdegree(v), {}};
      return r;
    }
  }
  auto acyc = is_acyclic(d);
  if (!acyc.acyclic()) {
    r.violation = IjViolation{IjViolation::Kind::cycle, -1, 0, acyc.cycle};
    return r;
  }
  r.ok = true;
  return r;
}

bool is_ij(const Digraph& d, DegreeBounds b) { return check_ij(d, b).ok; }

std::vector<ComponentDigraph> weak_components(const Digraph& d) {
  std::vector<ComponentDigraph> out;
  const int n = d.vertex_count();
  std::uint64_t left = d.vertex_mask();
  while (left) {
    std::uint64_t comp = vertex_bit(lowest(left));
    for (;;) {
      std::uint64_t grow = 0;
      for (auto m = comp; m; m &= m - 1) {
        const int v = lowest(m);
        grow |= d.out_mask(v) | d.in_mask(v);
      }
      grow &= left & ~comp;
      if (!grow) break;
      comp |= grow;
    }
    ComponentDigraph c;
    c.original_ids = from_mask(comp);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < c.original_ids.size(); ++i)
      local[c.original_ids[i]] = static_cast<int>(i);
    c.digraph = Digraph(static_cast<int>(c.original_ids.size()));
    for (int v : c.original_ids)
      for (auto m = d.out_mask(v); m; m &= m - 1)
        c.digraph.add_arc(local[v], local[lowest(m)]);
    out.push_back(std::move(c));
    left &= ~comp;
  }
  return out;
}

std::uint64_t projected_enumeration_bound(int n, DegreeBounds b) {
  constexpr std::uint64_t kCap = ~std::uint64_t{0};
  std::uint64_t total = 1;
  for (int u = 1; u < n; ++u) {
    // number of out-sets of size <= j among u candidates
    std::uint64_t choices = 1, binom = 1;
    for (int s = 1; s <= std::min(u, b.max_outdegree); ++s) {
      binom = binom * static_cast<std::uint64_t>(u - s + 1) /
              static_cast<std::uint64_t>(s);
      choices += binom;
    }
    if (total > kCap / choices) return kCap;
    total *= choices;
  }
  return n >= 1 ? total : 0;
}

}  // namespace phylo
