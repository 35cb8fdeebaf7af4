#pragma once

#include <map>
#include <vector>

#include "phylo/digraph.hpp"
#include "phylo/graph.hpp"

namespace phylo {

/// Underlying, competition, and phylogeny graphs of an acyclic digraph, plus
/// the cared-edge map. A cared edge lies in the competition graph but not in
/// the underlying graph; its entry names the common out-neighbor of the two
/// endpoints with the least label (deterministic when several exist).
struct PhylogenyResult {
  SimpleGraph underlying;
  SimpleGraph competition;
  SimpleGraph phylogeny;  // edge union of the two above
  std::map<Edge, int> cared;
  AcyclicLabeling labeling;  // the canonical labeling, reused for tie-breaking
};

/// Throws std::invalid_argument when d has a directed cycle.
PhylogenyResult compute_phylogeny(const Digraph& d);

/// True iff for every hole of the phylogeny graph, no vertex of the hole is a
/// common out-neighbor of the endpoints of a cared edge on that hole.
bool caring_check(const Digraph& d, const PhylogenyResult& p);

/// One caring vertex per cared edge of the hole, in traversal order of the
/// canonical cycle. Members are distinct and avoid the hole; with indegree
/// at most 2 both are guaranteed, so a breach raises theorem_violation.
struct ExtendingSet {
  Hole hole;
  std::vector<int> members;
  std::map<int, Edge> edge_of;  // member -> the cared edge it takes care of
};

/// Requires max indegree <= 2 and a hole of p.phylogeny.
ExtendingSet extending_set(const Digraph& d, const PhylogenyResult& p,
                           const Hole& h);

/// The cycle of the underlying graph obtained by replacing every cared edge
/// of the hole with the length-2 path through its extending-set member.
std::vector<int> cycle_from_hole(const Digraph& d, const PhylogenyResult& p,
                                 const Hole& h, const ExtendingSet& w);

/// The underlying graph induced on the hole vertices plus the extending set.
InducedSubgraph subgraph_from_hole(const Digraph& d, const PhylogenyResult& p,
                                   const Hole& h, const ExtendingSet& w);

/// Maps a hole of the phylogeny graph of a digraph with indegrees <= 2 to a
/// hole of the underlying graph whose vertices lie in V(h) union the
/// extending set. A hole without cared edges maps to itself; otherwise the
/// least-label vertex w of V(h) union W lies in W, and the result is w plus a
/// shortest path between the endpoints of w's cared edge inside the cycle
/// obtained from h, avoiding the closed neighborhood of w.
Hole map_hole(const Digraph& d, const PhylogenyResult& p, const Hole& h);
Hole map_hole(const Digraph& d, const Hole& h);

}  // namespace phylo
