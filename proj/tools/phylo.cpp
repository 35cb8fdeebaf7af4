#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phylo/extremal.hpp"
#include "phylo/harness.hpp"
#include "phylo/io.hpp"
#include "phylo/phylogeny.hpp"
#include "phylo/realize.hpp"

namespace {

using namespace phylo;

std::string strip_extension(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return path;
  if (slash != std::string::npos && dot < slash) return path;
  return path.substr(0, dot);
}

std::string join_ints(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(vs[i]);
  }
  return out;
}

// ---- compute ----------------------------------------------------------------

int cmd_compute(const std::string& input, std::string prefix, bool dot) {
  const auto in = parse_digraph_file(input);
  const auto p = compute_phylogeny(in.digraph);
  if (prefix.empty()) prefix = strip_extension(input);

  write_file_atomic(prefix + "-underlying", print_graph(p.underlying, in.names));
  write_file_atomic(prefix + "-competition",
                    print_graph(p.competition, in.names));
  write_file_atomic(prefix + "-phylogeny", print_graph(p.phylogeny, in.names));
  std::string table = "c cared edges: <u> <v> <caring vertex>\n";
  for (const auto& [e, w] : p.cared)
    table += std::to_string(e.first) + " " + std::to_string(e.second) + " " +
             std::to_string(w) + "\n";
  write_file_atomic(prefix + "-cared", table);
  std::cout << prefix << "-underlying\n"
            << prefix << "-competition\n"
            << prefix << "-phylogeny\n"
            << prefix << "-cared\n";
  if (dot) {
    write_file_atomic(prefix + "-digraph.dot", to_dot(in.digraph, in.names));
    write_file_atomic(prefix + "-phylogeny.dot", to_dot(p.phylogeny, in.names));
    std::cout << prefix << "-digraph.dot\n" << prefix << "-phylogeny.dot\n";
  }
  return 0;
}

// ---- check ------------------------------------------------------------------

int cmd_check(const std::string& input, const std::string& cls) {
  const auto in = parse_graph_file(input);
  const auto& g = in.graph;
  if (cls == "chordal") {
    const auto cert = chordal_certificate(g);
    if (cert.chordal) {
      std::cout << "chordal\npeo: " << join_ints(cert.elimination_order)
                << "\n";
    } else {
      std::cout << "not chordal\nhole: " << join_ints(cert.hole->cycle) << "\n";
    }
  } else if (cls == "diamond-free") {
    if (auto dia = find_diamond(g))
      std::cout << "not diamond-free\ndiamond: " << join_ints(*dia) << "\n";
    else
      std::cout << "diamond-free\n";
  } else if (cls == "forest") {
    if (auto cyc = find_cycle(g))
      std::cout << "not a forest\ncycle: " << join_ints(*cyc) << "\n";
    else
      std::cout << "forest\n";
  } else if (cls == "paths") {
    if (auto cyc = find_cycle(g)) {
      std::cout << "not a disjoint union of paths\ncycle: " << join_ints(*cyc)
                << "\n";
    } else {
      int high = -1;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) {
          high = v;
          break;
        }
      if (high >= 0)
        std::cout << "not a disjoint union of paths\nvertex: " << high
                  << " degree " << g.degree(high) << "\n";
      else
        std::cout << "disjoint union of paths\n";
    }
  } else if (cls == "clique-graph-forest") {
    const auto kg = clique_graph(g);
    if (auto cyc = find_cycle(kg.derived)) {
      std::cout << "clique graph has a cycle\nclique-cycle: " << join_ints(*cyc)
                << "\n";
      for (int idx : *cyc)
        std::cout << "clique " << idx << ": " << join_ints(kg.cliques[idx])
                  << "\n";
    } else {
      std::cout << "clique graph is a forest\n";
    }
  } else if (cls == "planar") {
    if (auto w = find_minor(g, complete_graph(5))) {
      std::cout << "not planar\nk5-minor branch sets:\n";
      for (const auto& b : w->branch_sets)
        std::cout << "  " << join_ints(b) << "\n";
    } else if (auto w33 = find_minor(g, complete_bipartite(3, 3))) {
      std::cout << "not planar\nk33-minor branch sets:\n";
      for (const auto& b : w33->branch_sets)
        std::cout << "  " << join_ints(b) << "\n";
    } else {
      std::cout << "planar\n";
    }
  } else {
    throw std::invalid_argument("unknown class " + cls);
  }
  return 0;
}

// ---- realize ------------------------------------------------------------------

int cmd_realize(const std::string& input, const std::string& cls, int i, int j,
                const std::string& out_path) {
  const auto in = parse_graph_file(input);
  RealizabilityVerdict verdict;
  if (cls == "1j")
    verdict = decide_1j(in.graph, j);
  else if (cls == "i1")
    verdict = decide_i1(in.graph, i);
  else if (cls == "11")
    verdict = decide_11(in.graph);
  else
    throw std::invalid_argument("unknown class " + cls);

  if (!verdict.realizable) {
    const auto& o = *verdict.obstruction;
    std::cout << "not realizable: " << o.reason << "\n";
    if (!o.vertices.empty())
      std::cout << "certificate: " << join_ints(o.vertices) << "\n";
    for (std::size_t k = 0; k < o.cliques.size(); ++k)
      std::cout << "clique " << k << ": " << join_ints(o.cliques[k]) << "\n";
    return 1;
  }
  const auto& w = *verdict.witness;
  std::cout << "realizable as a " << to_string(w.claimed_class)
            << " phylogeny graph with bounds (" << w.bounds.max_indegree << ","
            << w.bounds.max_outdegree << ")\n";
  const std::string text = print_digraph(w.digraph, in.names);
  if (!out_path.empty()) {
    write_file_atomic(out_path, text);
    std::cout << out_path << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

// ---- holes --------------------------------------------------------------------

int cmd_holes(const std::string& input, int limit) {
  const auto in = parse_graph_file(input);
  std::optional<std::size_t> cap;
  if (limit >= 0) cap = static_cast<std::size_t>(limit);
  for (const auto& h : find_holes(in.graph, cap))
    std::cout << join_ints(h.cycle) << "\n";
  return 0;
}

// ---- map-holes ------------------------------------------------------------------

int cmd_map_holes(const std::string& input, int i, int j) {
  const auto in = parse_digraph_file(input);
  const auto rep = check_ij(in.digraph, DegreeBounds{i, j});
  if (!rep.ok) {
    std::cout << "input is not a (" << i << "," << j
              << ") digraph: " << rep.violation->describe() << "\n";
    return 1;
  }
  const auto p = compute_phylogeny(in.digraph);
  bool first = true;
  for (const auto& h : find_holes(p.phylogeny)) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "hole " << join_ints(h.cycle) << "\n";
    const auto es = extending_set(in.digraph, p, h);
    for (int m : es.members) {
      const Edge e = es.edge_of.at(m);
      std::cout << "cared " << e.first << " " << e.second << " " << m << "\n";
    }
    std::cout << "extending " << join_ints(es.members) << "\n";
    std::cout << "phi " << join_ints(map_hole(in.digraph, p, h).cycle) << "\n";
  }
  return 0;
}

// ---- extremal -------------------------------------------------------------------

int cmd_extremal(const std::string& name, int j, const std::string& out_path,
                 bool dot) {
  ConstructionName cn;
  if (name == "fig1")
    cn = ConstructionName::fig1;
  else if (name == "fig2-left")
    cn = ConstructionName::fig2_left;
  else if (name == "fig2-right")
    cn = ConstructionName::fig2_right;
  else if (name == "fig3")
    cn = ConstructionName::fig3;
  else if (name == "clique")
    cn = ConstructionName::clique_extremal;
  else
    throw std::invalid_argument("unknown construction " + name);
  const auto c = build_construction(cn, j);
  validate_expected(c);
  std::string text = print_digraph(c.digraph, c.vertex_names);
  for (const auto& [key, value] : c.expected)
    text += "c expected " + key + " " + std::to_string(value) + "\n";
  if (!out_path.empty()) {
    write_file_atomic(out_path, text);
    std::cout << out_path << "\n";
    if (dot) {
      write_file_atomic(out_path + ".dot", to_dot(c.digraph, c.vertex_names));
      std::cout << out_path << ".dot\n";
    }
  } else {
    if (dot) throw std::invalid_argument("--dot requires --out");
    std::cout << text;
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------

struct VerifyRun {
  std::string check_id;
  harness::CheckParams params;
};

std::vector<VerifyRun> runs_from_config(const std::string& path,
                                        const std::string& only_check,
                                        const harness::CheckParams& base) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument(
        "config file '" + path +
        "' not found; pass --config or --max-n (see config/verify.json)");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::runtime_error("bad config " + path + ": " + e.what());
  }
  harness::CheckParams defaults = base;
  if (doc.contains("instance_budget"))
    defaults.instance_budget = doc["instance_budget"].get<std::uint64_t>();
  if (doc.contains("minor_node_budget"))
    defaults.minor_node_budget = doc["minor_node_budget"].get<std::uint64_t>();
  if (doc.contains("finding_cap"))
    defaults.finding_cap = doc["finding_cap"].get<std::size_t>();
  std::vector<VerifyRun> runs;
  for (const auto& [id, entries] : doc.at("runs").items()) {
    if (only_check != "all" && only_check != id) continue;
    (void)harness::find_check(id);  // unknown ids fail early
    for (const auto& entry : entries) {
      VerifyRun run{id, defaults};
      if (entry.contains("i")) run.params.max_indegree = entry["i"].get<int>();
      if (entry.contains("j")) run.params.max_outdegree = entry["j"].get<int>();
      run.params.max_n = entry.at("max_n").get<int>();
      run.params.shards = base.shards;
      runs.push_back(std::move(run));
    }
  }
  if (runs.empty())
    throw std::invalid_argument("no config entry for check '" + only_check +
                                "'");
  return runs;
}

int cmd_verify(const std::string& check_id, std::optional<int> i,
               std::optional<int> j, std::optional<int> max_n, int shards,
               std::optional<std::uint64_t> budget, const std::string& config,
               const std::string& json_path) {
  harness::CheckParams base;
  base.shards = shards;
  if (budget) base.instance_budget = *budget;

  std::vector<VerifyRun> runs;
  if (max_n && check_id != "all") {
    VerifyRun run{check_id, base};
    run.params.max_n = *max_n;
    if (i) run.params.max_indegree = *i;
    if (j) run.params.max_outdegree = *j;
    runs.push_back(std::move(run));
  } else {
    runs = runs_from_config(config, check_id, base);
    for (auto& run : runs) {
      if (i) run.params.max_indegree = *i;
      if (j) run.params.max_outdegree = *j;
      if (max_n) run.params.max_n = *max_n;
      if (budget) run.params.instance_budget = *budget;
    }
  }

  bool all_passed = true;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& run : runs) {
    const auto& check = harness::find_check(run.check_id);
    const auto report = harness::run_check(check, run.params);
    std::cout << harness::report_line(report) << "\n";
    if (!json_path.empty())
      records.push_back(nlohmann::json::parse(harness::report_json(report)));
    all_passed = all_passed && report.passed();
  }
  if (!json_path.empty()) write_file_atomic(json_path, records.dump(2) + "\n");
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phylogeny (moral) graphs of degree-bounded acyclic digraphs"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand(
      "compute", "underlying, competition, and phylogeny graphs of a dag file");
  std::string compute_input, compute_prefix;
  bool compute_dot = false;
  compute->add_option("dag-file", compute_input)->required();
  compute->add_option("--out-prefix", compute_prefix);
  compute->add_flag("--dot", compute_dot);

  // check
  auto* check = app.add_subcommand("check", "graph-class verdict + certificate");
  std::string check_input, check_class;
  int check_i = 1, check_j = 1;
  check->add_option("graph-file", check_input)->required();
  check
      ->add_option("--class", check_class)
      ->required()
      ->check(CLI::IsMember({"chordal", "diamond-free", "forest", "paths",
                             "clique-graph-forest", "planar"}));
  check->add_option("--i", check_i);
  check->add_option("--j", check_j);

  // realize
  auto* realize = app.add_subcommand(
      "realize", "decide realizability and emit a witness dag or obstruction");
  std::string realize_input, realize_class, realize_out;
  int realize_i = 1, realize_j = 1;
  realize->add_option("graph-file", realize_input)->required();
  realize->add_option("--class", realize_class)
      ->required()
      ->check(CLI::IsMember({"1j", "i1", "11"}));
  realize->add_option("--i", realize_i);
  realize->add_option("--j", realize_j);
  realize->add_option("--out", realize_out);

  // holes
  auto* holes = app.add_subcommand("holes", "canonical hole list of a graph");
  std::string holes_input;
  int holes_limit = -1;
  holes->add_option("graph-file", holes_input)->required();
  holes->add_option("--limit", holes_limit);

  // map-holes
  auto* mapholes = app.add_subcommand(
      "map-holes", "map each phylogeny hole to an underlying-graph hole");
  std::string map_input;
  int map_i = 2, map_j = 2;
  mapholes->add_option("dag-file", map_input)->required();
  mapholes->add_option("--i", map_i);
  mapholes->add_option("--j", map_j);

  // extremal
  auto* extremal = app.add_subcommand(
      "extremal", "named constructions with their expected-property table");
  std::string ex_name, ex_out;
  int ex_j = 3;
  bool ex_dot = false;
  extremal->add_option("--name", ex_name)
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2-left", "fig2-right", "fig3",
                             "clique"}));
  extremal->add_option("--j", ex_j);
  extremal->add_option("--out", ex_out);
  extremal->add_flag("--dot", ex_dot);

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification harness");
  std::string verify_check = "all", verify_config = "config/verify.json",
              verify_json;
  int verify_shards = 1;
  std::optional<int> verify_i, verify_j, verify_max_n;
  std::optional<std::uint64_t> verify_budget;
  verify->add_option("--check", verify_check);
  verify->add_option("--i", verify_i);
  verify->add_option("--j", verify_j);
  verify->add_option("--max-n", verify_max_n);
  verify->add_option("--shards", verify_shards);
  verify->add_option("--budget", verify_budget);
  verify->add_option("--config", verify_config);
  verify->add_option("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(compute_input, compute_prefix, compute_dot);
    if (check->parsed()) return cmd_check(check_input, check_class);
    if (realize->parsed())
      return cmd_realize(realize_input, realize_class, realize_i, realize_j,
                         realize_out);
    if (holes->parsed()) return cmd_holes(holes_input, holes_limit);
    if (mapholes->parsed()) return cmd_map_holes(map_input, map_i, map_j);
    if (extremal->parsed()) return cmd_extremal(ex_name, ex_j, ex_out, ex_dot);
    if (verify->parsed())
      return cmd_verify(verify_check, verify_i, verify_j, verify_max_n,
                        verify_shards, verify_budget, verify_config,
                        verify_json);
  } catch (const phylo::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const phylo::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const phylo::theorem_violation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
