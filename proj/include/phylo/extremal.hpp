#pragma once

#include <map>
#include <string>

#include "phylo/digraph.hpp"

namespace phylo {

enum class ConstructionName { fig1, fig2_left, fig2_right, fig3, clique_extremal };

/// A named digraph plus the properties it is built to exhibit. `expected`
/// maps property keys to integer values (booleans as 0/1):
///   max_indegree, max_outdegree     bounds check_ij must accept
///   underlying_chordal, phylogeny_chordal, phylogeny_planar
///   phylogeny_clique_number, phylogeny_hole_count, phylogeny_has_k5_minor
/// validate_expected recomputes every entry against the digraph.
struct NamedConstruction {
  std::string name;
  Digraph digraph;
  std::map<int, std::string> vertex_names;
  std::map<std::string, int> expected;
};

/// clique_extremal requires j >= 3 (smaller j is served by fig2_left and
/// fig2_right); the other constructions ignore j.
NamedConstruction build_construction(ConstructionName name, int j = 0);

/// Recomputes every `expected` entry; throws theorem_violation naming the
/// first mismatching key.
void validate_expected(const NamedConstruction& c);

}  // namespace phylo
