#ifndef TPZ_GRAPH_HPP
#define TPZ_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tpz/bitset.hpp"
#include "tpz/common.hpp"

namespace tpz {

// Simple undirected graph over vertices 0..n-1 with bit-vector adjacency
// rows. Immutable once built (builders call add_edge, everything else is
// read-only), so instances are safe to share across threads.
class Graph {
public:
  explicit Graph(int n);

  int order() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  long long edge_count() const;

  // Degree if regular.
  std::optional<int> regular_degree() const;

  // Component id per vertex (0-based, by first occurrence).
  std::vector<int> components() const;
  bool is_connected() const;

  // Edges as sorted (u, v) pairs with u < v, 0-based.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_;
  std::vector<Bitset> adj_;
};

// Diagonal offsets defining a Toeplitz adjacency pattern.
struct ToeplitzSpec {
  int order = 0;              // vertex count m
  std::vector<int> jumps;     // offsets t, each in [1, m-1], duplicate-free
};

// Throws std::invalid_argument on empty/out-of-range/duplicate jumps.
Graph build_toeplitz(const ToeplitzSpec& spec);

// The 2n-vertex family: jumps = all odd t in [1, 2n-1] plus t = n.
// Requires n even, n >= 4; throws std::invalid_argument otherwise.
Graph build_family(int n);

// Jump set of build_family(n), sorted ascending.
std::vector<int> family_jumps(int n);

// Returns n if g is exactly build_family(n) (same labels), else nullopt.
std::optional<int> family_parameter(const Graph& g);

// All-pairs hop distances; defined only for connected graphs.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * n, 0) {}
  int order() const { return n_; }
  int at(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }
  int& at(int u, int v) { return d_[std::size_t(u) * n_ + v]; }
  int diameter() const;

private:
  int n_ = 0;
  std::vector<int> d_;
};

// BFS from every source; throws DisconnectedGraph naming two unreachable
// vertices. threads > 1 runs sources in parallel.
DistanceMatrix distances(const Graph& g, int threads = 1);

// Vertex pairs sharing a closed neighborhood, N[u] = N[v].
struct TwinPairs {
  std::vector<std::pair<int, int>> pairs;  // u < v, lexicographic
};

TwinPairs true_twins(const Graph& g);

// Equivalence classes of the true-twin relation; only classes of size >= 2.
std::vector<std::vector<int>> twin_classes(const Graph& g);

// Observed intersection numbers, kept as value sets per distance so a
// non-constant parameter is visible in diagnostics.
struct IntersectionProfile {
  bool regular = false;
  int degree = -1;
  int diameter = 0;
  // Indexed by r; c_values[r] collects |N(u) ∩ Γ_{r-1}(v)| over all base
  // vertices v and u at distance r, similarly b (Γ_{r+1}) and a (Γ_r).
  std::vector<std::set<int>> c_values, b_values, a_values;
  // shell_sizes[v][r] = |Γ_r(v)|
  std::vector<std::vector<int>> shell_sizes;
};

// Connected input required (throws DisconnectedGraph). Returns false
// immediately for irregular graphs.
std::pair<bool, IntersectionProfile> is_distance_regular(const Graph& g);

}  // namespace tpz

#endif
