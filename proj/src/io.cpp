#include "phylo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace phylo {

namespace {

struct Header {
  std::string kind;  // "graph" or "dag"
  int n = 0;
  int m = 0;
};

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // next non-comment token list; name comments land in `names`
  bool next(std::vector<std::string>& tokens,
            std::map<int, std::string>& names) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.empty()) continue;
      if (tokens[0] == "c") {
        if (tokens.size() == 4 && tokens[1] == "name")
          names[parse_int(tokens[2])] = tokens[3];
        continue;
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(line_no, what);
  }

  int parse_int(const std::string& tok) const {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail("trailing characters in integer '" + tok + "'");
    return value;
  }

  Header read_header(const std::string& expected_kind) {
    std::vector<std::string> tokens;
    std::map<int, std::string> scratch;
    if (!next(tokens, scratch)) fail("missing header line");
    if (tokens.size() != 4 || tokens[0] != "p")
      fail("expected header 'p " + expected_kind + " <n> <m>'");
    if (tokens[1] != expected_kind)
      fail("expected a '" + expected_kind + "' file, found '" + tokens[1] +
           "'");
    Header h;
    h.kind = tokens[1];
    h.n = parse_int(tokens[2]);
    h.m = parse_int(tokens[3]);
    if (h.n < 0) fail("negative vertex count");
    if (h.m < 0) fail("negative entry count");
    return h;
  }

  std::pair<int, int> read_pair(const std::string& tag, int n,
                                std::map<int, std::string>& names) {
    std::vector<std::string> tokens;
    if (!next(tokens, names)) fail("unexpected end of file");
    if (tokens.size() != 3 || tokens[0] != tag)
      fail("expected '" + tag + " <u> <v>'");
    const int u = parse_int(tokens[1]);
    const int v = parse_int(tokens[2]);
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
    if (u == v) fail("self-loop");
    return {u, v};
  }

  void expect_end(std::map<int, std::string>& names) {
    std::vector<std::string> tokens;
    if (next(tokens, names)) fail("unexpected extra line");
  }
};

std::string name_comments(const std::map<int, std::string>& names) {
  std::string out;
  for (const auto& [id, name] : names)
    out += "c name " + std::to_string(id) + " " + name + "\n";
  return out;
}

std::string display(int v, const std::map<int, std::string>& names) {
  auto it = names.find(v);
  return it != names.end() ? it->second : "n" + std::to_string(v);
}

}  // namespace

NamedGraph parse_graph(std::istream& in) {
  LineReader r{in};
  NamedGraph out;
  const Header h = r.read_header("graph");
  try {
    out.graph = SimpleGraph(h.n);
  } catch (const resource_limit_error& e) {
    throw parse_error(r.line_no, e.what());
  }
  for (int k = 0; k < h.m; ++k) {
    const auto [u, v] = r.read_pair("e", h.n, out.names);
    if (out.graph.has_edge(u, v)) r.fail("duplicate edge");
    out.graph.add_edge(u, v);
  }
  r.expect_end(out.names);
  for (const auto& [id, name] : out.names)
    if (id < 0 || id >= h.n)
      throw parse_error(r.line_no, "name comment for vertex out of range");
  return out;
}

NamedDigraph parse_digraph(std::istream& in) {
  LineReader r{in};
  NamedDigraph out;
  const Header h = r.read_header("dag");
  try {
    out.digraph = Digraph(h.n);
  } catch (const resource_limit_error& e) {
    throw parse_error(r.line_no, e.what());
  }
  for (int k = 0; k < h.m; ++k) {
    const auto [u, v] = r.read_pair("a", h.n, out.names);
    if (out.digraph.has_arc(u, v)) r.fail("duplicate arc");
    out.digraph.add_arc(u, v);
  }
  r.expect_end(out.names);
  for (const auto& [id, name] : out.names)
    if (id < 0 || id >= h.n)
      throw parse_error(r.line_no, "name comment for vertex out of range");
  return out;
}

namespace {
template <class T>
T parse_file(const std::string& path, T (*parse)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}
}  // namespace

NamedGraph parse_graph_file(const std::string& path) {
  return parse_file(path, parse_graph);
}

NamedDigraph parse_digraph_file(const std::string& path) {
  return parse_file(path, parse_digraph);
}

std::string print_graph(const SimpleGraph& g,
                        const std::map<int, std::string>& names) {
  std::string out = "p graph " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  out += name_comments(names);
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string print_digraph(const Digraph& d,
                          const std::map<int, std::string>& names) {
  std::string out = "p dag " + std::to_string(d.vertex_count()) + " " +
                    std::to_string(d.arc_count()) + "\n";
  out += name_comments(names);
  for (const auto& [u, v] : d.arcs())
    out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_dot(const SimpleGraph& g,
                   const std::map<int, std::string>& names) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + display(v, names) +
           "\"];\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

std::string to_dot(const Digraph& d, const std::map<int, std::string>& names) {
  std::string out = "digraph {\n";
  for (int v = 0; v < d.vertex_count(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + display(v, names) +
           "\"];\n";
  for (const auto& [u, v] : d.arcs())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  return out + "}\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace phylo
