#include "phylo/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <set>
#include <sstream>

#include <json.hpp>

namespace phylo::harness {

namespace {

std::string render_arcs(const std::vector<Arc>& arcs) {
  std::string s = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(arcs[i].first) + ">" + std::to_string(arcs[i].second);
  }
  return s + "]";
}

std::string render_edges(const std::vector<Edge>& edges) {
  std::string s = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s + "]";
}

std::string render_vertices(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(vs[i]);
  }
  return s;
}

const SimpleGraph& k5() {
  static const SimpleGraph g = complete_graph(5);
  return g;
}
const SimpleGraph& k33() {
  static const SimpleGraph g = complete_bipartite(3, 3);
  return g;
}
const SimpleGraph& k3_join_i3() {
  static const SimpleGraph g = join_with_independent_set(complete_graph(3), 3);
  return g;
}

using DagPredicate = std::optional<std::string> (*)(const Digraph&,
                                                    const PhylogenyResult&,
                                                    const CheckParams&);

// ---- digraph-domain predicates -------------------------------------------

std::optional<std::string> pred_1j_eq_underlying(const Digraph&,
                                                 const PhylogenyResult& p,
                                                 const CheckParams&) {
  if (p.phylogeny != p.underlying)
    return std::string("phylogeny graph differs from underlying graph");
  return std::nullopt;
}

std::optional<std::string> pred_1j_forest(const Digraph&,
                                          const PhylogenyResult& p,
                                          const CheckParams& prm) {
  if (!is_forest(p.phylogeny)) return std::string("phylogeny is not a forest");
  if (max_degree(p.phylogeny) > prm.max_outdegree + 1)
    return "max degree " + std::to_string(max_degree(p.phylogeny)) +
           " exceeds j+1";
  return std::nullopt;
}

std::optional<std::string> pred_triangle_free(const Digraph&,
                                              const PhylogenyResult& p,
                                              const CheckParams& prm) {
  if (!is_triangle_free(p.phylogeny)) return std::nullopt;
  if (!is_forest(p.phylogeny))
    return std::string("triangle-free phylogeny is not a forest");
  if (max_degree(p.phylogeny) > prm.max_outdegree + 1)
    return std::string("triangle-free phylogeny exceeds max degree j+1");
  return std::nullopt;
}

std::optional<std::string> pred_i1_diamond_free(const Digraph&,
                                                const PhylogenyResult& p,
                                                const CheckParams&) {
  if (auto dia = find_diamond(p.phylogeny))
    return "induced diamond on " + render_vertices(*dia);
  return std::nullopt;
}

std::optional<std::string> pred_i1_chordal(const Digraph&,
                                           const PhylogenyResult& p,
                                           const CheckParams&) {
  auto cert = chordal_certificate(p.phylogeny);
  if (!cert.chordal) return "hole " + render_vertices(cert.hole->cycle);
  return std::nullopt;
}

std::optional<std::string> pred_i1_maximal_cliques(const Digraph& d,
                                                   const PhylogenyResult&,
                                                   const CheckParams&) {
  for (const auto& comp : weak_components(d)) {
    if (comp.digraph.vertex_count() < 2) continue;
    const auto pc = compute_phylogeny(comp.digraph);
    std::vector<std::vector<int>> expected;
    for (int u = 0; u < comp.digraph.vertex_count(); ++u) {
      if (comp.digraph.indegree(u) < 1) continue;
      expected.push_back(from_mask(comp.digraph.in_mask(u) | vertex_bit(u)));
    }
    std::sort(expected.begin(), expected.end());
    if (expected != maximal_cliques(pc.phylogeny))
      return std::string(
          "maximal cliques differ from closed in-neighborhoods");
  }
  return std::nullopt;
}

std::optional<std::string> pred_i1_clique_intersection(
    const Digraph&, const PhylogenyResult& p, const CheckParams&) {
  const auto cliques = maximal_cliques(p.phylogeny);
  const auto& label = p.labeling.label;
  const auto argmin = [&](const std::vector<int>& c) {
    int best = c.front();
    for (int v : c)
      if (label[v] < label[best]) best = v;
    return best;
  };
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      const std::uint64_t shared = to_mask(cliques[a]) & to_mask(cliques[b]);
      if (!shared) continue;
      if (std::popcount(shared) != 1)
        return std::string("two maximal cliques share 2+ vertices");
      const int v = from_mask(shared).front();
      const bool min_a = argmin(cliques[a]) == v;
      const bool min_b = argmin(cliques[b]) == v;
      if (min_a == min_b)
        return std::string(
            "shared vertex is label-minimal in both or neither clique");
    }
  return std::nullopt;
}

std::optional<std::string> pred_i1_clique_graph_forest(const Digraph&,
                                                       const PhylogenyResult& p,
                                                       const CheckParams&) {
  if (!is_forest(clique_graph(p.phylogeny).derived))
    return std::string("clique graph of the phylogeny has a cycle");
  return std::nullopt;
}

std::optional<std::string> pred_2j_chordal(const Digraph&,
                                           const PhylogenyResult& p,
                                           const CheckParams&) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  auto cert = chordal_certificate(p.phylogeny);
  if (!cert.chordal)
    return "underlying chordal but phylogeny has hole " +
           render_vertices(cert.hole->cycle);
  return std::nullopt;
}

std::optional<std::string> pred_32_witness(const Digraph&,
                                           const PhylogenyResult& p,
                                           const CheckParams&) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  auto cert = chordal_certificate(p.phylogeny);
  if (cert.chordal) return std::nullopt;
  return "underlying chordal, phylogeny hole " +
         render_vertices(cert.hole->cycle);
}

std::optional<std::string> pred_caring(const Digraph& d,
                                       const PhylogenyResult& p,
                                       const CheckParams&) {
  if (!caring_check(d, p))
    return std::string("a hole vertex takes care of one of its edges");
  return std::nullopt;
}

std::optional<std::string> pred_extending_set(const Digraph& d,
                                              const PhylogenyResult& p,
                                              const CheckParams&) {
  try {
    for (const Hole& h : find_holes(p.phylogeny)) (void)extending_set(d, p, h);
  } catch (const theorem_violation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> pred_hole_map_valid(const Digraph& d,
                                               const PhylogenyResult& p,
                                               const CheckParams&) {
  try {
    for (const Hole& h : find_holes(p.phylogeny)) {
      const auto es = extending_set(d, p, h);
      const Hole mapped = map_hole(d, p, h);
      if (!mapped.validates(p.underlying))
        return std::string("mapped hole fails validation");
      const std::uint64_t span = to_mask(h.cycle) | to_mask(es.members);
      if (to_mask(mapped.cycle) & ~span)
        return std::string("mapped hole leaves V(H) plus the extending set");
    }
  } catch (const theorem_violation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> pred_hole_injective(const Digraph& d,
                                               const PhylogenyResult& p,
                                               const CheckParams&) {
  const auto holes = find_holes(p.phylogeny);
  if (holes.empty()) return std::nullopt;
  std::vector<std::set<Edge>> edge_sets;
  for (const Hole& h : holes) {
    std::set<Edge> es;
    for (std::size_t t = 0; t < h.cycle.size(); ++t)
      es.insert(make_edge(h.cycle[t], h.cycle[(t + 1) % h.cycle.size()]));
    edge_sets.push_back(std::move(es));
  }
  for (std::size_t a = 0; a < holes.size(); ++a)
    for (std::size_t b = a + 1; b < holes.size(); ++b)
      for (const Edge& e : edge_sets[a])
        if (edge_sets[b].count(e)) return std::nullopt;  // hypothesis fails
  std::set<Hole> images;
  try {
    for (const Hole& h : holes) images.insert(map_hole(d, p, h));
  } catch (const theorem_violation& e) {
    return std::string(e.what());
  }
  if (images.size() != holes.size())
    return std::string("edge-disjoint holes map to a repeated hole");
  return std::nullopt;
}

std::optional<std::string> pred_degenerate(const Digraph&,
                                           const PhylogenyResult& p,
                                           const CheckParams& prm) {
  const int k = degeneracy(p.phylogeny).degeneracy;
  if (k > prm.max_outdegree + 2)
    return "degeneracy " + std::to_string(k) + " exceeds j+2";
  return std::nullopt;
}

std::optional<std::string> pred_clique_number(const Digraph&,
                                              const PhylogenyResult& p,
                                              const CheckParams& prm) {
  const int j = prm.max_outdegree;
  const int bound = j <= 2 ? j + 2 : j + 3;
  const int w = clique_number(p.phylogeny);
  if (w > bound)
    return "clique number " + std::to_string(w) + " exceeds " +
           std::to_string(bound);
  return std::nullopt;
}

std::optional<std::string> pred_kj_minor(const Digraph&,
                                         const PhylogenyResult& p,
                                         const CheckParams& prm) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  const int j = prm.max_outdegree;
  const int k = j <= 2 ? j + 3 : j + 4;
  if (has_minor(p.phylogeny, complete_graph(k), prm.minor_node_budget))
    return "K_" + std::to_string(k) + " minor despite chordal underlying graph";
  return std::nullopt;
}

std::optional<std::string> pred_k5_minor(const Digraph&,
                                         const PhylogenyResult& p,
                                         const CheckParams& prm) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  if (has_minor(p.phylogeny, k5(), prm.minor_node_budget))
    return std::string("K_5 minor despite chordal underlying graph");
  return std::nullopt;
}

std::optional<std::string> pred_k3i3_minor(const Digraph&,
                                           const PhylogenyResult& p,
                                           const CheckParams& prm) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  if (has_minor(p.phylogeny, k3_join_i3(), prm.minor_node_budget))
    return std::string(
        "K_3 v I_3 minor despite chordal underlying graph");
  return std::nullopt;
}

std::optional<std::string> pred_k33_minor(const Digraph&,
                                          const PhylogenyResult& p,
                                          const CheckParams& prm) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  if (has_minor(p.phylogeny, k33(), prm.minor_node_budget))
    return std::string("K_3,3 minor despite chordal underlying graph");
  return std::nullopt;
}

std::optional<std::string> pred_planar(const Digraph&,
                                       const PhylogenyResult& p,
                                       const CheckParams& prm) {
  if (!is_chordal(p.underlying)) return std::nullopt;
  if (!is_planar(p.phylogeny, prm.minor_node_budget))
    return std::string("non-planar phylogeny despite chordal underlying graph");
  return std::nullopt;
}

// ---- graph-domain predicates ----------------------------------------------

std::optional<std::string> pred_contraction_chordal(const SimpleGraph& g,
                                                    const CheckParams&) {
  if (!is_chordal(g)) return std::nullopt;
  for (const auto& [u, v] : g.edges())
    if (!is_chordal(contract_edge(g, u, v).graph))
      return "contracting " + std::to_string(u) + "-" + std::to_string(v) +
             " breaks chordality";
  return std::nullopt;
}

std::optional<std::string> pred_chordal_minor_free(const SimpleGraph& g,
                                                   const CheckParams& prm) {
  if (!is_chordal(g)) return std::nullopt;
  const int w = clique_number(g);
  if (has_minor(g, complete_graph(w + 1), prm.minor_node_budget))
    return "chordal graph has a K_" + std::to_string(w + 1) + " minor";
  return std::nullopt;
}

bool applies_i1(DegreeBounds b) { return b.max_outdegree == 1; }
bool applies_1j(DegreeBounds b) { return b.max_indegree == 1; }
bool applies_2j(DegreeBounds b) { return b.max_indegree <= 2; }
bool applies_22(DegreeBounds b) {
  return b.max_indegree == 2 && b.max_outdegree == 2;
}
bool applies_any(DegreeBounds) { return true; }
bool applies_32(DegreeBounds b) {
  return b.max_indegree >= 3 && b.max_outdegree >= 2;
}

TheoremCheck dag_check(std::string id, std::string statement, Mode mode,
                       bool (*applies)(DegreeBounds), DagPredicate pred) {
  TheoremCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.domain = Domain::digraphs;
  c.mode = mode;
  c.applies = applies;
  c.dag_predicate = pred;
  return c;
}

TheoremCheck graph_check(std::string id, std::string statement,
                         std::optional<std::string> (*pred)(const SimpleGraph&,
                                                            const CheckParams&)) {
  TheoremCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.domain = Domain::graphs;
  c.mode = Mode::universal;
  c.graph_predicate = pred;
  return c;
}

std::vector<TheoremCheck> build_catalog() {
  std::vector<TheoremCheck> cat;
  cat.push_back(dag_check(
      "thm_1j_phylo_eq_underlying",
      "with indegrees at most 1 the phylogeny graph equals the underlying graph",
      Mode::universal, applies_1j, pred_1j_eq_underlying));
  cat.push_back(dag_check(
      "thm_1j_forest_maxdeg",
      "a (1,j) phylogeny graph is a forest with max degree at most j+1",
      Mode::universal, applies_1j, pred_1j_forest));
  cat.push_back(dag_check(
      "cor_triangle_free",
      "a triangle-free (i,j) phylogeny graph is a forest with max degree at "
      "most j+1",
      Mode::universal, applies_any, pred_triangle_free));
  cat.push_back(dag_check("lem_i1_diamond_free",
                          "an (i,1) phylogeny graph is diamond-free",
                          Mode::universal, applies_i1, pred_i1_diamond_free));
  cat.push_back(dag_check("lem_i1_chordal",
                          "an (i,1) phylogeny graph is chordal",
                          Mode::universal, applies_i1, pred_i1_chordal));
  cat.push_back(dag_check(
      "lem_maximal_cliques_i1",
      "on a nontrivial weakly connected (i,1) digraph the maximal cliques of "
      "the phylogeny graph are the closed in-neighborhoods of vertices with "
      "indegree at least 1",
      Mode::universal, applies_i1, pred_i1_maximal_cliques));
  cat.push_back(dag_check(
      "lem_i1_clique_intersection",
      "intersecting distinct maximal cliques of an (i,1) phylogeny graph "
      "share exactly one vertex, label-minimal in exactly one of the two",
      Mode::universal, applies_i1, pred_i1_clique_intersection));
  cat.push_back(dag_check(
      "thm_i1_clique_graph_forest",
      "the clique graph of an (i,1) phylogeny graph is a forest",
      Mode::universal, applies_i1, pred_i1_clique_graph_forest));
  cat.push_back(dag_check(
      "thm_2j_chordal",
      "with indegrees at most 2, a chordal underlying graph forces a chordal "
      "phylogeny graph",
      Mode::universal, applies_2j, pred_2j_chordal));
  cat.push_back(dag_check(
      "thm_32_nonchordal_witness",
      "search: an (i,j) digraph with i >= 3, j >= 2 whose underlying graph "
      "is chordal but whose phylogeny graph is not",
      Mode::search, applies_32, pred_32_witness));
  cat.push_back(dag_check(
      "prop_caring_vertex",
      "no vertex of a phylogeny hole takes care of an edge of that hole",
      Mode::universal, applies_2j, pred_caring));
  cat.push_back(dag_check(
      "lem_extending_set",
      "extending-set members are distinct and avoid the hole",
      Mode::universal, applies_2j, pred_extending_set));
  cat.push_back(dag_check(
      "thm_hole_map_valid",
      "every phylogeny hole maps to a hole of the underlying graph inside "
      "V(H) plus the extending set",
      Mode::universal, applies_2j, pred_hole_map_valid));
  cat.push_back(dag_check(
      "thm_hole_injective",
      "pairwise edge-disjoint phylogeny holes map to pairwise distinct "
      "underlying holes",
      Mode::universal, applies_2j, pred_hole_injective));
  cat.push_back(dag_check("lem_degenerate",
                          "a (2,j) phylogeny graph is (j+2)-degenerate",
                          Mode::universal, applies_2j, pred_degenerate));
  cat.push_back(dag_check(
      "thm_clique_number",
      "the clique number of a (2,j) phylogeny graph is at most j+2 for "
      "j <= 2 and j+3 otherwise",
      Mode::universal, applies_2j, pred_clique_number));
  cat.push_back(dag_check(
      "thm_kj_minor_free_2j",
      "a (2,j) phylogeny graph with chordal underlying graph has no "
      "K_{j+3} minor (j <= 2) resp. K_{j+4} minor (j >= 3)",
      Mode::universal, [](DegreeBounds b) { return b.max_indegree == 2; },
      pred_kj_minor));
  cat.push_back(dag_check(
      "thm_k5_minor_free_22",
      "a (2,2) phylogeny graph with chordal underlying graph has no K_5 minor",
      Mode::universal, applies_22, pred_k5_minor));
  cat.push_back(dag_check(
      "lem_k3i3_minor_free",
      "a (2,2) phylogeny graph with chordal underlying graph has no "
      "K_3 v I_3 minor",
      Mode::universal, applies_22, pred_k3i3_minor));
  cat.push_back(dag_check(
      "thm_k33_minor_free",
      "a (2,2) phylogeny graph with chordal underlying graph has no K_3,3 "
      "minor",
      Mode::universal, applies_22, pred_k33_minor));
  cat.push_back(dag_check(
      "thm_planar_22",
      "a (2,2) phylogeny graph with chordal underlying graph is planar",
      Mode::universal, applies_22, pred_planar));
  cat.push_back(graph_check(
      "lem_contraction_chordal",
      "chordality is closed under single-edge contraction",
      pred_contraction_chordal));
  cat.push_back(graph_check(
      "lem_chordal_minor_free",
      "a chordal graph has no clique minor larger than its clique number",
      pred_chordal_minor_free));
  return cat;
}

struct Partial {
  std::uint64_t instances = 0;
  std::uint64_t findings_total = 0;
  std::vector<Finding> findings;  // sorted by finding_less, capped

  void add(Finding f, std::size_t cap) {
    ++findings_total;
    auto it = std::lower_bound(findings.begin(), findings.end(), f,
                               finding_less);
    findings.insert(it, std::move(f));
    if (findings.size() > cap) findings.pop_back();
  }

  void merge(const Partial& o, std::size_t cap) {
    instances += o.instances;
    findings_total += o.findings_total;
    for (const auto& f : o.findings) {
      auto it =
          std::lower_bound(findings.begin(), findings.end(), f, finding_less);
      findings.insert(it, f);
    }
    if (findings.size() > cap) findings.resize(cap);
  }
};

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

void run_dag_shard(const TheoremCheck& check, const CheckParams& prm,
                   int shard, int shard_count, Partial& part) {
  const DegreeBounds b{prm.max_indegree, prm.max_outdegree};
  for (int n = prm.min_n; n <= prm.max_n; ++n) {
    auto stats = enumerate_ij_dags_shard(
        n, b, shard, shard_count, [&](const Digraph& d) {
          const auto p = compute_phylogeny(d);
          if (auto diag = check.dag_predicate(d, p, prm))
            part.add(Finding{n, d.arcs(), {}, *diag}, prm.finding_cap);
          return true;
        });
    part.instances += stats.visited;
  }
}

void run_graph_shard(const TheoremCheck& check, const CheckParams& prm,
                     int shard, int shard_count, Partial& part) {
  for (int n = prm.min_n; n <= prm.max_n; ++n) {
    const auto pairs = all_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (shard_count > 1 &&
          static_cast<int>(mask % static_cast<std::uint64_t>(shard_count)) !=
              shard)
        continue;
      SimpleGraph g(n);
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1) {
          g.add_edge(pairs[e].first, pairs[e].second);
          edges.push_back(pairs[e]);
        }
      ++part.instances;
      if (auto diag = check.graph_predicate(g, prm))
        part.add(Finding{n, {}, std::move(edges), *diag}, prm.finding_cap);
    }
  }
}

}  // namespace

bool finding_less(const Finding& a, const Finding& b) {
  if (a.n != b.n) return a.n < b.n;
  const std::size_t sa = a.arcs.size() + a.edges.size();
  const std::size_t sb = b.arcs.size() + b.edges.size();
  if (sa != sb) return sa < sb;
  if (a.arcs != b.arcs) {
    // per-source out-lists, matching the enumeration's subset order
    std::vector<std::vector<int>> oa(a.n), ob(b.n);
    for (const auto& [u, v] : a.arcs) oa[u].push_back(v);
    for (const auto& [u, v] : b.arcs) ob[u].push_back(v);
    return oa < ob;
  }
  return a.edges < b.edges;
}

const std::vector<TheoremCheck>& check_catalog() {
  static const std::vector<TheoremCheck> cat = build_catalog();
  return cat;
}

const TheoremCheck& find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown check id: " + id);
}

VerificationReport run_check(const TheoremCheck& check,
                             const CheckParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (params.min_n < 1 || params.max_n < params.min_n)
    throw std::invalid_argument("bad n range");

  if (check.domain == Domain::digraphs) {
    const DegreeBounds b{params.max_indegree, params.max_outdegree};
    if (b.max_indegree < 1 || b.max_outdegree < 1)
      throw std::invalid_argument("degree bounds must be positive");
    if (check.applies && !check.applies(b))
      throw std::invalid_argument("check " + check.id +
                                  " does not apply to bounds (" +
                                  std::to_string(b.max_indegree) + "," +
                                  std::to_string(b.max_outdegree) + ")");
    std::uint64_t projected = 0;
    for (int n = params.min_n; n <= params.max_n; ++n) {
      const std::uint64_t p = projected_enumeration_bound(n, b);
      projected = projected > ~p ? ~std::uint64_t{0} : projected + p;
    }
    if (projected > params.instance_budget)
      throw resource_limit_error(
          "projected instance count " + std::to_string(projected) +
          " exceeds the budget of " + std::to_string(params.instance_budget));
  } else {
    std::uint64_t projected = 0;
    for (int n = params.min_n; n <= params.max_n; ++n) {
      if (n > 7)
        throw resource_limit_error(
            "graph-domain enumeration is capped at n = 7");
      projected += std::uint64_t{1} << (n * (n - 1) / 2);
    }
    if (projected > params.instance_budget)
      throw resource_limit_error("projected instance count exceeds budget");
  }

  const int shard_count = std::max(1, params.shards);
  std::vector<Partial> parts(shard_count);
  if (shard_count == 1) {
    // serial reference path
    if (check.domain == Domain::digraphs)
      run_dag_shard(check, params, 0, 1, parts[0]);
    else
      run_graph_shard(check, params, 0, 1, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(shard_count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int s = 0; s < shard_count; ++s) {
      try {
        if (check.domain == Domain::digraphs)
          run_dag_shard(check, params, s, shard_count, parts[s]);
        else
          run_graph_shard(check, params, s, shard_count, parts[s]);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  VerificationReport rep;
  rep.check_id = check.id;
  rep.mode = check.mode;
  rep.params = params;
  Partial merged;
  for (const auto& part : parts) merged.merge(part, params.finding_cap);
  rep.instances = merged.instances;
  rep.findings_total = merged.findings_total;
  rep.findings = std::move(merged.findings);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.check_id;
  const auto& c = find_check(r.check_id);
  if (c.domain == Domain::digraphs)
    os << " i=" << r.params.max_indegree << " j=" << r.params.max_outdegree;
  os << " n=" << r.params.min_n << ".." << r.params.max_n
     << " instances=" << r.instances
     << (r.mode == Mode::search ? " witnesses=" : " violations=")
     << r.findings_total << " elapsed=" << r.elapsed_seconds << "s"
     << " shards=" << std::max(1, r.params.shards);
  if (!r.findings.empty()) {
    const auto& f = r.findings.front();
    os << " minimal: n=" << f.n << " "
       << (f.arcs.empty() && !f.edges.empty() ? render_edges(f.edges)
                                              : render_arcs(f.arcs))
       << " (" << f.diagnostic << ")";
  }
  return os.str();
}

std::string report_json(const VerificationReport& r) {
  nlohmann::json doc;
  doc["check"] = r.check_id;
  doc["mode"] = r.mode == Mode::search ? "search" : "universal";
  doc["passed"] = r.passed();
  const auto& c = find_check(r.check_id);
  if (c.domain == Domain::digraphs) {
    doc["params"]["i"] = r.params.max_indegree;
    doc["params"]["j"] = r.params.max_outdegree;
  }
  doc["params"]["min_n"] = r.params.min_n;
  doc["params"]["max_n"] = r.params.max_n;
  doc["params"]["shards"] = std::max(1, r.params.shards);
  doc["instances"] = r.instances;
  doc["findings_total"] = r.findings_total;
  doc["elapsed_seconds"] = r.elapsed_seconds;
  auto& arr = doc["findings"] = nlohmann::json::array();
  for (const auto& f : r.findings) {
    nlohmann::json jf;
    jf["n"] = f.n;
    jf["diagnostic"] = f.diagnostic;
    if (!f.arcs.empty() || f.edges.empty()) {
      auto& arcs = jf["arcs"] = nlohmann::json::array();
      for (const auto& [u, v] : f.arcs) arcs.push_back({u, v});
    }
    if (!f.edges.empty()) {
      auto& edges = jf["edges"] = nlohmann::json::array();
      for (const auto& [u, v] : f.edges) edges.push_back({u, v});
    }
    arr.push_back(std::move(jf));
  }
  return doc.dump();
}

}  // namespace phylo::harness
