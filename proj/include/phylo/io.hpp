#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "phylo/digraph.hpp"
#include "phylo/graph.hpp"

namespace phylo {

// Text formats, shared by the library and the CLI:
//   p graph <n> <m>      followed by m lines   e <u> <v>
//   p dag <n> <m>        followed by m lines   a <u> <v>
// Ids are 0-based. Lines starting with `c` are comments; the special comment
// `c name <id> <label>` attaches a display name to a vertex and survives
// round-trips. parse(print(x)) == x for both formats.

struct NamedGraph {
  SimpleGraph graph;
  std::map<int, std::string> names;
};

struct NamedDigraph {
  Digraph digraph;
  std::map<int, std::string> names;
};

NamedGraph parse_graph(std::istream& in);      // throws parse_error
NamedDigraph parse_digraph(std::istream& in);  // throws parse_error
NamedGraph parse_graph_file(const std::string& path);
NamedDigraph parse_digraph_file(const std::string& path);

std::string print_graph(const SimpleGraph& g,
                        const std::map<int, std::string>& names = {});
std::string print_digraph(const Digraph& d,
                          const std::map<int, std::string>& names = {});

std::string to_dot(const SimpleGraph& g,
                   const std::map<int, std::string>& names = {});
std::string to_dot(const Digraph& d,
                   const std::map<int, std::string>& names = {});

/// Writes to a temporary file in the same directory, then renames onto the
/// target, so a failed command never leaves a partial output file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace phylo
