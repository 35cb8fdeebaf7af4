#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phylo/digraph.hpp"
#include "phylo/graph.hpp"

namespace phylo {

enum class PhyloClass { one_j, i_one, one_one };

std::string to_string(PhyloClass c);

/// Digraph on the same vertex ids as the decided graph; its phylogeny graph
/// equals the input edge-for-edge and check_ij holds with `bounds`.
struct RealizationWitness {
  Digraph digraph;
  DegreeBounds bounds;
  PhyloClass claimed_class = PhyloClass::one_j;
};

/// Named reason with a concrete certificate: a cycle for "not a forest", the
/// offending vertex for a degree breach, a 4-set for a diamond, a hole, a
/// too-large clique, or a cycle of clique indices (cliques attached).
struct Obstruction {
  std::string reason;
  std::vector<int> vertices;
  std::vector<std::vector<int>> cliques;
};

struct RealizabilityVerdict {
  bool realizable = false;
  std::optional<RealizationWitness> witness;
  std::optional<Obstruction> obstruction;
};

/// Realizable iff g is a forest with max degree <= j+1. The witness orients
/// each tree away from a pendant root, BFS-layer by layer.
RealizabilityVerdict decide_1j(const SimpleGraph& g, int j);

/// Realizable iff g is diamond-free, chordal, has clique number <= i+1, and
/// its clique graph is a forest. The witness is built per component by
/// peeling simplicial vertices off pendant cliques of the clique tree and
/// re-attaching each with a single arc chosen from the maintained labeling.
RealizabilityVerdict decide_i1(const SimpleGraph& g, int i);

/// Realizable iff every component of g is a path; equals decide_1j(g, 1)
/// with the claimed class adjusted.
RealizabilityVerdict decide_11(const SimpleGraph& g);

}  // namespace phylo
