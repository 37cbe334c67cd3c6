#ifndef TPZ_RESOLVING_HPP
#define TPZ_RESOLVING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tpz/graph.hpp"

namespace tpz {

// Outcome of a resolving check. When the input fails, `collision` holds the
// lexicographically first (by 1-based label) pair with identical vectors.
struct ResolveReport {
  bool resolving = false;
  std::optional<std::pair<int, int>> collision;   // 0-based vertices, u < v
  std::vector<std::vector<int>> vectors;          // filled only on request
};

// Distance vectors over s (members in ascending label order) must be
// pairwise distinct. An empty s resolves only the one-vertex graph.
ResolveReport is_resolving_set(const Graph& g, const DistanceMatrix& dm,
                               const Bitset& s, bool with_vectors = false);

// Sum over twin classes of (size - 1): every resolving set must contain all
// but one vertex of each class, and the classes are disjoint. Equals the
// number of twin pairs when every class is a pair (a perfect matching).
int twin_lower_bound(const Graph& g);

struct DimResult {
  int value = 0;
  Bitset witness;
  std::uint64_t nodes = 0;  // candidate sets tested
};

// Exact metric dimension. Sizes are tried from twin_lower_bound upward; at
// the bound itself candidates are restricted to twin-class transversals
// (which is complete: a set of that size must omit exactly one vertex per
// class and contain nothing else). General subset search is capped at 20
// vertices, the transversal step alone extends to 32.
DimResult metric_dimension(const Graph& g, const SearchOptions& opts = {});

}  // namespace tpz

#endif
