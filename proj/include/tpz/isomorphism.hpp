#ifndef TPZ_ISOMORPHISM_HPP
#define TPZ_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "tpz/graph.hpp"

namespace tpz {

// Edge-preserving bijection g -> h, or nullopt. Backtracking over vertices
// ordered most-constrained-first, with candidate images filtered by a
// (degree, sorted distance multiset) invariant. Any returned mapping has
// been re-verified edge by edge. Intended for small instances (<= 64
// vertices); no canonical-form machinery.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// Independent check that `map` is an edge-preserving bijection g -> h.
bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace tpz

#endif
