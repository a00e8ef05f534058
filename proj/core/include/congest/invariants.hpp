#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "congest/abt.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"

namespace congest {

// Shortest theta-alternating f-t paths P through s with level(P) < level(out(s)),
// cut to their s-t segments.
struct ExtendableSet {
  std::vector<Path> segments;      // distinct, ascending
  std::vector<EdgeLevel> levels;   // level of each segment
  EdgeLevel min_level = EdgeLevel::infinite();
  Path canonical;                  // lexicographically smallest of minimum level

  bool empty() const noexcept { return segments.empty(); }
};

using ExtendableKey = std::tuple<Vertex, Vertex, Parity>;

// Every extendable triple of the region at once, from one enumeration of the
// alternating paths out of the root.
class ExtendableIndex {
 public:
  ExtendableIndex(const Graph& region, const Matching& m, const AbtKnowledge& k,
                  const OracleLimits& limits = {});

  const std::map<ExtendableKey, ExtendableSet>& triples() const noexcept { return triples_; }
  // Shortest theta-alternating paths from the root to t.
  const std::vector<Path>& shortest(Vertex t, Parity theta) const;

 private:
  std::map<ExtendableKey, ExtendableSet> triples_;
  std::vector<std::vector<Path>> shortest_[2];
};

// Throws PreconditionError unless s is an ancestor of t (or s == t).
ExtendableSet enumerate_extendable(const Graph& region, const Matching& m, const AbtKnowledge& k,
                                   Vertex s, Vertex t, Parity theta,
                                   const OracleLimits& limits = {});

struct InvariantReport {
  std::map<std::string, long long> checked;  // instances examined per property
  std::vector<std::string> violations;       // "property: detail"
  // EXTPATH results that have minimum level but are not the lexicographically
  // smallest minimum-level segment. Reported apart from violations.
  std::vector<std::string> sequence_mismatches;

  bool ok() const noexcept { return violations.empty(); }
  void merge(const InvariantReport& other);
};

// Exhaustive structural checks on one region: tree definition, distances,
// outgoing edges and routing, level bounds, extendable-path properties, and
// the reference recursion over every extendable triple.
InvariantReport check_invariants(const Graph& region, const Matching& m, const AbtKnowledge& k,
                                 const OracleLimits& limits = {});

}  // namespace congest
