#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "congest/abt.hpp"
#include "congest/extpath.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"

namespace congest {

// Twice the size of the greedy maximal matching over edges in sorted order.
int estimate_mu_hat(const Graph& g);

// floor(2 mu_hat / (mu_hat - i)). Throws PreconditionError unless 0 <= i < mu_hat.
int schedule_ell(int mu_hat, int i);

// Oracle distances from the unmatched vertex f, truncated at ell.
ParityDistances mv_inject(const Graph& g, const Matching& m, Vertex f, int ell,
                          const OracleLimits& limits = {});

struct Region {
  Vertex f = kNoVertex;
  Vertex g = kNoVertex;
  int ell = 0;
  int path_length = 0;         // shortest augmenting f-g length in the reduced graph
  std::vector<Vertex> vertices;  // ascending
  std::vector<bool> member;
  Graph graph;                 // induced on `vertices`, global IDs
};

// At most one region: the free pair (f, g) with the shortest augmenting path
// of length <= ell, ties broken by (f, g). Other free vertices are removed and
// the region keeps every vertex within alternating distance ell of f.
std::vector<Region> part_regions(const Graph& g, const Matching& m, int ell,
                                 const OracleLimits& limits = {});

// Checks the region contract with the oracle; returns one message per violation.
std::vector<std::string> check_region(const Graph& g, const Matching& m, const Region& r,
                                      const OracleLimits& limits = {});

struct IterationStats {
  int i = 0;
  int ell = 0;
  bool found = false;
  int path_len = 0;
  int rounds = 0;  // precompute + extpath budget + flip
  int size_before = 0;
  int size_after = 0;
  int precompute_rounds = 0;
  int extpath_rounds = 0;
  int extpath_active_rounds = 0;
  int flip_rounds = 0;
  int tree_height = 0;
};

// Everything produced inside one iteration that found a region.
struct IterationDetail {
  const Graph* graph = nullptr;
  const Matching* before = nullptr;
  const Region* region = nullptr;
  const ParityDistances* injected = nullptr;
  const PrecomputeResult* precompute = nullptr;
  const ExtPathRun* extpath = nullptr;
  const FlipRun* flip = nullptr;
  const IterationStats* stats = nullptr;
};

using IterationObserver = std::function<void(const IterationDetail&)>;

struct IterationOptions {
  OracleLimits limits;
  IterationObserver observer;
  int index = 0;  // reported as IterationStats::i
};

struct IterationResult {
  Matching matching;
  IterationStats stats;
  RoundTrace trace;
};

IterationResult run_iteration(const Graph& g, const Matching& m, int ell,
                              const IterationOptions& options = {});

struct RunStats {
  int n = 0;
  int m = 0;
  int mu = 0;
  int mu_hat = 0;
  long long rounds_total = 0;
  std::vector<IterationStats> iterations;

  std::string to_json() const;
};

struct RunOptions {
  OracleLimits limits;
  std::optional<Matching> initial;
  bool collect_trace = false;
  IterationObserver observer;
};

struct RunResult {
  Matching matching;
  RunStats stats;
  RoundTrace trace;  // filled only with collect_trace
};

// Iterations i = 0 .. mu_hat - 1 with ell = schedule_ell(mu_hat, i).
RunResult run_to_maximum(const Graph& g, const RunOptions& options = {});

}  // namespace congest
