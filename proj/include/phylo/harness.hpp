#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phylo/digraph.hpp"
#include "phylo/graph.hpp"
#include "phylo/phylogeny.hpp"

namespace phylo::harness {

enum class Domain { digraphs, graphs };

// universal: pass iff no instance violates the predicate.
// search: pass iff at least one instance exhibits the searched shape.
enum class Mode { universal, search };

struct CheckParams {
  int max_indegree = 2;
  int max_outdegree = 2;
  int min_n = 1;
  int max_n = 6;
  std::uint64_t instance_budget = 500'000'000;  // projected-count cap
  std::uint64_t minor_node_budget = kDefaultMinorNodeBudget;
  int shards = 1;
  std::size_t finding_cap = 8;  // findings kept per report (smallest first)
};

struct TheoremCheck {
  std::string id;
  std::string statement;  // the verified property, in plain language
  Domain domain = Domain::digraphs;
  Mode mode = Mode::universal;
  // digraph-domain checks may restrict the bounds they make sense for
  std::function<bool(DegreeBounds)> applies;
  // return a diagnostic to record the instance (violation or search hit)
  std::function<std::optional<std::string>(
      const Digraph&, const PhylogenyResult&, const CheckParams&)>
      dag_predicate;
  std::function<std::optional<std::string>(const SimpleGraph&,
                                           const CheckParams&)>
      graph_predicate;
};

/// Recorded instance: the digraph (or graph) payload plus a diagnostic.
struct Finding {
  int n = 0;
  std::vector<Arc> arcs;    // digraph domain
  std::vector<Edge> edges;  // graph domain
  std::string diagnostic;
};

/// Shard-invariant order: (n, size, per-source out-lists / edge list). The
/// minimum under this order is the minimal counterexample the report keeps
/// first regardless of shard count.
bool finding_less(const Finding& a, const Finding& b);

struct VerificationReport {
  std::string check_id;
  Mode mode = Mode::universal;
  CheckParams params;
  std::uint64_t instances = 0;
  std::uint64_t findings_total = 0;
  std::vector<Finding> findings;  // capped, sorted by finding_less
  double elapsed_seconds = 0.0;

  bool passed() const {
    return mode == Mode::universal ? findings_total == 0 : findings_total > 0;
  }
};

const std::vector<TheoremCheck>& check_catalog();
const TheoremCheck& find_check(const std::string& id);  // invalid_argument

/// Streams the configured enumeration through the check's predicate. With
/// params.shards > 1 the shards run concurrently (OpenMP when available);
/// reports are identical for any shard count. Throws resource_limit_error
/// when the projected instance count exceeds params.instance_budget.
VerificationReport run_check(const TheoremCheck& check,
                             const CheckParams& params);

std::string report_line(const VerificationReport& r);
std::string report_json(const VerificationReport& r);  // one JSON object

}  // namespace phylo::harness
