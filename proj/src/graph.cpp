#include "tpz/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tpz {

Graph::Graph(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  adj_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (int v = 0; v < n_; v++) deg_sum += degree(v);
  return deg_sum / 2;
}

std::optional<int> Graph::regular_degree() const {
  int d = degree(0);
  for (int v = 1; v < n_; v++)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n_, -1);
  int next_id = 0;
  for (int s = 0; s < n_; s++) {
    if (comp[s] != -1) continue;
    comp[s] = next_id;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u)) {
        if (comp[u] == -1) {
          comp[u] = next_id;
          q.push(u);
        }
      }
    }
    next_id++;
  }
  return comp;
}

bool Graph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; u++)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph build_toeplitz(const ToeplitzSpec& spec) {
  if (spec.order <= 0) throw std::invalid_argument("order must be positive");
  if (spec.jumps.empty()) throw std::invalid_argument("jump set must be non-empty");
  std::vector<int> jumps = spec.jumps;
  std::sort(jumps.begin(), jumps.end());
  if (std::adjacent_find(jumps.begin(), jumps.end()) != jumps.end())
    throw std::invalid_argument("jump set contains a duplicate");
  for (int t : jumps)
    if (t < 1 || t > spec.order - 1)
      throw std::invalid_argument("jump " + std::to_string(t) +
                                  " out of range [1, " +
                                  std::to_string(spec.order - 1) + "]");
  Graph g(spec.order);
  for (int i = 0; i < spec.order; i++)
    for (int t : jumps)
      if (i + t < spec.order) g.add_edge(i, i + t);
  return g;
}

std::vector<int> family_jumps(int n) {
  std::vector<int> jumps;
  for (int t = 1; t <= 2 * n - 1; t += 2) jumps.push_back(t);
  jumps.push_back(n);
  std::sort(jumps.begin(), jumps.end());
  return jumps;
}

Graph build_family(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("n must be even and >= 4");
  return build_toeplitz({2 * n, family_jumps(n)});
}

std::optional<int> family_parameter(const Graph& g) {
  int m = g.order();
  if (m % 4 != 0 || m < 8) return std::nullopt;
  int n = m / 2;
  if (g == build_family(n)) return n;
  return std::nullopt;
}

int DistanceMatrix::diameter() const {
  int d = 0;
  for (int u = 0; u < n_; u++)
    for (int v = 0; v < n_; v++) d = std::max(d, at(u, v));
  return d;
}

namespace {

// Single-source BFS into row `out`; returns the first unreached vertex or -1.
int bfs_row(const Graph& g, int src, int* out) {
  int n = g.order();
  std::fill(out, out + n, -1);
  out[src] = 0;
  std::vector<int> frontier{src}, next;
  while (!frontier.empty()) {
    next.clear();
    for (int v : frontier) {
      const Bitset& nb = g.neighbors(v);
      for (int u = nb.first(); u >= 0; u = nb.next(u)) {
        if (out[u] == -1) {
          out[u] = out[v] + 1;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
  for (int v = 0; v < n; v++)
    if (out[v] == -1) return v;
  return -1;
}

}  // namespace

DistanceMatrix distances(const Graph& g, int threads) {
  int n = g.order();
  DistanceMatrix dm(n);
  int bad_src = -1, bad_dst = -1;
  if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int s = 0; s < n; s++) {
      int unreached = bfs_row(g, s, &dm.at(s, 0));
      if (unreached >= 0) {
#pragma omp critical
        {
          bad_src = s;
          bad_dst = unreached;
        }
      }
    }
#else
    threads = 1;
#endif
  }
  if (threads <= 1) {
    for (int s = 0; s < n; s++) {
      int unreached = bfs_row(g, s, &dm.at(s, 0));
      if (unreached >= 0) {
        bad_src = s;
        bad_dst = unreached;
        break;
      }
    }
  }
  if (bad_src >= 0)
    throw DisconnectedGraph("graph is disconnected: " + vertex_name(bad_src) +
                            " and " + vertex_name(bad_dst) +
                            " are mutually unreachable");
  return dm;
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  int n = g.order();
  std::vector<Bitset> closed;
  closed.reserve(n);
  for (int v = 0; v < n; v++) {
    Bitset row = g.neighbors(v);
    row.set(v);
    closed.push_back(std::move(row));
  }
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; v++) {
    if (seen[v]) continue;
    std::vector<int> cls{v};
    for (int u = v + 1; u < n; u++)
      if (!seen[u] && closed[u] == closed[v]) {
        cls.push_back(u);
        seen[u] = 1;
      }
    if (cls.size() >= 2) classes.push_back(std::move(cls));
  }
  return classes;
}

TwinPairs true_twins(const Graph& g) {
  TwinPairs out;
  for (const auto& cls : twin_classes(g))
    for (std::size_t i = 0; i < cls.size(); i++)
      for (std::size_t j = i + 1; j < cls.size(); j++)
        out.pairs.emplace_back(cls[i], cls[j]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::pair<bool, IntersectionProfile> is_distance_regular(const Graph& g) {
  IntersectionProfile prof;
  auto deg = g.regular_degree();
  prof.regular = deg.has_value();
  if (!prof.regular) {
    // Distance-regularity presupposes regularity; do not touch distances,
    // the connectivity contract still applies.
    if (!g.is_connected())
      throw DisconnectedGraph("distance-regularity is undefined for disconnected graphs");
    return {false, prof};
  }
  prof.degree = *deg;
  DistanceMatrix dm = distances(g);  // throws if disconnected
  int n = g.order();
  int diam = dm.diameter();
  prof.diameter = diam;
  prof.c_values.assign(diam + 1, {});
  prof.b_values.assign(diam + 1, {});
  prof.a_values.assign(diam + 1, {});
  prof.shell_sizes.assign(n, std::vector<int>(diam + 1, 0));
  for (int v = 0; v < n; v++)
    for (int u = 0; u < n; u++) prof.shell_sizes[v][dm.at(v, u)]++;
  for (int v = 0; v < n; v++) {
    for (int u = 0; u < n; u++) {
      if (u == v) continue;
      int r = dm.at(v, u);
      int c = 0, b = 0, a = 0;
      const Bitset& nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        int rw = dm.at(v, w);
        if (rw == r - 1) c++;
        else if (rw == r + 1) b++;
        else if (rw == r) a++;
      }
      prof.c_values[r].insert(c);
      prof.b_values[r].insert(b);
      prof.a_values[r].insert(a);
    }
  }
  bool ok = true;
  for (int r = 1; r <= diam; r++) {
    if (prof.c_values[r].size() > 1 || prof.b_values[r].size() > 1 ||
        prof.a_values[r].size() > 1)
      ok = false;
  }
  return {ok, prof};
}

}  // namespace tpz
