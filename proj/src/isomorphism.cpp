#include "tpz/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace tpz {

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
  int n = g.order();
  if (h.order() != n || int(map.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int v = 0; v < n; v++) {
    if (map[v] < 0 || map[v] >= n || used[map[v]]) return false;
    used[map[v]] = 1;
  }
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

namespace {

// Invariant used to partition vertices before backtracking: degree plus the
// sorted multiset of BFS distances (neighbor degrees instead when the graph
// is disconnected and distances are undefined).
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> sig(n);
  bool connected = g.is_connected();
  if (connected) {
    DistanceMatrix dm = distances(g);
    for (int v = 0; v < n; v++) {
      std::vector<int> row{g.degree(v)};
      for (int u = 0; u < n; u++) row.push_back(dm.at(v, u));
      std::sort(row.begin() + 1, row.end());
      sig[v] = std::move(row);
    }
  } else {
    for (int v = 0; v < n; v++) {
      std::vector<int> row{g.degree(v)};
      const Bitset& nb = g.neighbors(v);
      for (int u = nb.first(); u >= 0; u = nb.next(u)) row.push_back(g.degree(u));
      std::sort(row.begin() + 1, row.end());
      sig[v] = std::move(row);
    }
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  int n = g.order();
  if (h.order() != n) return std::nullopt;
  if (g.edge_count() != h.edge_count()) return std::nullopt;

  auto sig_g = vertex_signatures(g);
  auto sig_h = vertex_signatures(h);

  // Class id per signature; the two graphs must use identical class sizes.
  std::map<std::vector<int>, int> class_of;
  for (const auto& s : sig_g) class_of.emplace(s, int(class_of.size()));
  for (const auto& s : sig_h)
    if (!class_of.count(s)) return std::nullopt;
  int n_classes = int(class_of.size());

  std::vector<int> gclass(n), hclass(n);
  std::vector<int> gcount(n_classes, 0), hcount(n_classes, 0);
  std::vector<std::vector<int>> h_by_class(n_classes);
  for (int v = 0; v < n; v++) {
    gclass[v] = class_of[sig_g[v]];
    gcount[gclass[v]]++;
    hclass[v] = class_of[sig_h[v]];
    hcount[hclass[v]]++;
    h_by_class[hclass[v]].push_back(v);
  }
  if (gcount != hcount) return std::nullopt;

  // Vertex order: rarest class first, then grow along edges of the mapped
  // region so adjacency constraints bite early.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  {
    int start = 0;
    for (int v = 1; v < n; v++) {
      if (gcount[gclass[v]] < gcount[gclass[start]] ||
          (gcount[gclass[v]] == gcount[gclass[start]] && g.degree(v) > g.degree(start)))
        start = v;
    }
    order.push_back(start);
    placed[start] = 1;
    Bitset frontier = g.neighbors(start);
    while (int(order.size()) < n) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n; v++) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order)
          if (g.adjacent(u, v)) links++;
        if (links > best_links ||
            (links == best_links && gcount[gclass[v]] < gcount[gclass[best]])) {
          best = v;
          best_links = links;
        }
      }
      order.push_back(best);
      placed[best] = 1;
    }
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    for (int w : h_by_class[gclass[v]]) {
      if (used[w]) continue;
      bool ok = true;
      for (int i = 0; i < depth; i++) {
        int u = order[i];
        if (g.adjacent(u, v) != h.adjacent(map[u], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  if (!verify_isomorphism(g, h, map)) return std::nullopt;
  return map;
}

}  // namespace tpz
