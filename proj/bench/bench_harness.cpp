// Compares the serial reference path of the verification harness against the
// sharded OpenMP path on the same checks, and reports raw enumeration
// throughput. Reports must agree exactly; a mismatch is a bug.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include "phylo/harness.hpp"

using namespace phylo;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_report(const harness::VerificationReport& a,
                 const harness::VerificationReport& b) {
  if (a.instances != b.instances) return false;
  if (a.findings_total != b.findings_total) return false;
  if (a.findings.size() != b.findings.size()) return false;
  for (std::size_t k = 0; k < a.findings.size(); ++k)
    if (a.findings[k].arcs != b.findings[k].arcs ||
        a.findings[k].edges != b.findings[k].edges)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 6;
  if (argc > 1) max_n = std::atoi(argv[1]);
  const int threads =
      std::max(2u, std::thread::hardware_concurrency());

  {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t count = 0;
    for (int n = 1; n <= max_n + 1; ++n)
      count += enumerate_ij_dags(n, DegreeBounds{2, 2},
                                 [](const Digraph&) { return true; })
                   .visited;
    const double dt = seconds_since(t0);
    std::printf("enumerate (2,2) n<=%d: %llu digraphs in %.3fs (%.0f/s)\n",
                max_n + 1, static_cast<unsigned long long>(count), dt,
                count / dt);
  }

  const char* ids[] = {"lem_degenerate", "thm_2j_chordal", "thm_clique_number"};
  for (const char* id : ids) {
    const auto& check = harness::find_check(id);
    harness::CheckParams serial;
    serial.max_n = max_n;
    harness::CheckParams parallel = serial;
    parallel.shards = threads * 4;

    auto t0 = std::chrono::steady_clock::now();
    const auto rs = harness::run_check(check, serial);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto rp = harness::run_check(check, parallel);
    const double tp = seconds_since(t0);

    if (!same_report(rs, rp)) {
      std::printf("MISMATCH between serial and sharded reports for %s\n", id);
      return 1;
    }
    std::printf(
        "%-22s (2,2) n<=%d: serial %.3fs | %d shards %.3fs | speedup %.2fx | "
        "instances=%llu\n",
        id, max_n, ts, parallel.shards, tp, ts / tp,
        static_cast<unsigned long long>(rs.instances));
  }
  return 0;
}
