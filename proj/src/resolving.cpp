#include "tpz/resolving.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tpz {

ResolveReport is_resolving_set(const Graph& g, const DistanceMatrix& dm,
                               const Bitset& s, bool with_vectors) {
  int n = g.order();
  std::vector<int> members = s.to_vector();
  std::vector<std::vector<int>> vectors(n);
  for (int v = 0; v < n; v++) {
    vectors[v].reserve(members.size());
    for (int m : members) vectors[v].push_back(dm.at(v, m));
  }
  ResolveReport rep;
  for (int u = 0; u < n && !rep.collision; u++)
    for (int v = u + 1; v < n; v++)
      if (vectors[u] == vectors[v]) {
        rep.collision = {u, v};
        break;
      }
  rep.resolving = !rep.collision.has_value();
  if (with_vectors) rep.vectors = std::move(vectors);
  return rep;
}

int twin_lower_bound(const Graph& g) {
  int bound = 0;
  for (const auto& cls : twin_classes(g)) bound += int(cls.size()) - 1;
  return bound;
}

namespace {

// Packs each vertex's distance vector over the candidate members into a
// 128-bit key and sorts; byte rows as a fallback when keys would overflow.
class DistinctnessChecker {
public:
  explicit DistinctnessChecker(const DistanceMatrix& dm) : n_(dm.order()) {
    d_.resize(std::size_t(n_) * n_);
    int diam = 0;
    for (int u = 0; u < n_; u++)
      for (int v = 0; v < n_; v++) {
        d_[std::size_t(u) * n_ + v] = std::uint8_t(dm.at(u, v));
        diam = std::max(diam, dm.at(u, v));
      }
    bits_ = std::max(1, std::bit_width(unsigned(diam)));
  }

  bool distinct(const int* s, int t) const {
    if (t == 0) return n_ <= 1;
    if (bits_ * t <= 128 && n_ <= 64) {
      unsigned __int128 keys[64];
      for (int v = 0; v < n_; v++) {
        const std::uint8_t* row = &d_[std::size_t(v) * n_];
        unsigned __int128 key = 0;
        for (int i = 0; i < t; i++) key = (key << bits_) | row[s[i]];
        keys[v] = key;
      }
      std::sort(keys, keys + n_);
      for (int v = 1; v < n_; v++)
        if (keys[v] == keys[v - 1]) return false;
      return true;
    }
    std::vector<std::vector<std::uint8_t>> rows(n_);
    for (int v = 0; v < n_; v++) {
      rows[v].resize(t);
      for (int i = 0; i < t; i++) rows[v][i] = d_[std::size_t(v) * n_ + s[i]];
    }
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
  }

private:
  int n_;
  int bits_;
  std::vector<std::uint8_t> d_;
};

int unpack_members(std::uint64_t mask, int* out) {
  int t = 0;
  while (mask) {
    out[t++] = std::countr_zero(mask);
    mask &= mask - 1;
  }
  return t;
}

struct TransversalSpace {
  std::vector<std::vector<int>> classes;
  std::uint64_t all_members = 0;  // union of class vertices
  long long total = 1;            // product of class sizes

  std::uint64_t candidate(long long idx) const {
    std::uint64_t mask = all_members;
    for (const auto& cls : classes) {
      mask &= ~(std::uint64_t{1} << cls[idx % cls.size()]);
      idx /= long long(cls.size());
    }
    return mask;
  }
};

// Size twin_sum candidates must omit exactly one vertex per twin class.
std::optional<std::uint64_t> transversal_search(const TransversalSpace& space,
                                                const DistinctnessChecker& check,
                                                const SearchOptions& opts,
                                                const Deadline& deadline,
                                                std::uint64_t& nodes) {
  long long total = space.total;
  if (opts.threads > 1) {
#ifdef _OPENMP
    std::atomic<long long> best(total);
    std::atomic<std::uint64_t> tested(0);
#pragma omp parallel num_threads(opts.threads)
    {
      std::uint64_t local_nodes = 0;
#pragma omp for schedule(dynamic, 256)
      for (long long idx = 0; idx < total; idx++) {
        if (best.load(std::memory_order_relaxed) < total) continue;
        std::uint64_t mask = space.candidate(idx);
        int members[64];
        int t = unpack_members(mask, members);
        local_nodes++;
        if (check.distinct(members, t)) {
          long long prev = best.load();
          while (idx < prev && !best.compare_exchange_weak(prev, idx)) {
          }
        }
        if ((local_nodes & 8191) == 0) deadline.check("metric dimension search");
      }
      tested += local_nodes;
    }
    nodes += tested.load();
    if (best.load() < total) return space.candidate(best.load());
    return std::nullopt;
#endif
  }
  for (long long idx = 0; idx < total; idx++) {
    std::uint64_t mask = space.candidate(idx);
    int members[64];
    int t = unpack_members(mask, members);
    nodes++;
    if ((nodes & 8191) == 0) deadline.check("metric dimension search");
    if (check.distinct(members, t)) return mask;
  }
  return std::nullopt;
}

std::uint64_t gosper_next(std::uint64_t mask) {
  std::uint64_t c = mask & (~mask + 1);
  std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

// All t-subsets of [0, n) in colexicographic (= ascending numeric) order,
// skipping sets that cannot cover the twin classes.
std::optional<std::uint64_t> general_search(int n, int t,
                                            const std::vector<std::uint64_t>& class_masks,
                                            const std::vector<int>& class_sizes,
                                            const DistinctnessChecker& check,
                                            const SearchOptions& opts,
                                            const Deadline& deadline,
                                            std::uint64_t& nodes) {
  auto admissible = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < class_masks.size(); i++)
      if (std::popcount(mask & class_masks[i]) < class_sizes[i] - 1) return false;
    return true;
  };
  auto scan_block = [&](std::uint64_t lo_bits, int lo_n, std::uint64_t high_bit,
                        std::uint64_t& local_nodes) -> std::optional<std::uint64_t> {
    // subsets = {low t-1 bits within [0, lo_n)} | high_bit, colex order
    std::uint64_t mask = lo_bits;
    std::uint64_t last = (lo_n == 0 || mask == 0)
                             ? mask
                             : mask << (lo_n - std::popcount(mask));
    while (true) {
      std::uint64_t cand = mask | high_bit;
      local_nodes++;
      if ((local_nodes & 8191) == 0) deadline.check("metric dimension search");
      if (admissible(cand)) {
        int members[64];
        int tt = unpack_members(cand, members);
        if (check.distinct(members, tt)) return cand;
      }
      if (mask == last || mask == 0) break;
      mask = gosper_next(mask);
    }
    return std::nullopt;
  };

  if (t == 0)
    return check.distinct(nullptr, 0) ? std::optional<std::uint64_t>(0) : std::nullopt;

  std::uint64_t low = (t == 1) ? 0 : (std::uint64_t{1} << (t - 1)) - 1;
  if (opts.threads > 1 && t >= 2) {
#ifdef _OPENMP
    std::atomic<bool> found(false);
    std::uint64_t results[64];
    std::fill(results, results + 64, ~std::uint64_t{0});
    std::atomic<std::uint64_t> tested(0);
#pragma omp parallel num_threads(opts.threads)
    {
      std::uint64_t local_nodes = 0;
#pragma omp for schedule(dynamic, 1)
      for (int j = t - 1; j < n; j++) {
        if (found.load(std::memory_order_relaxed)) continue;
        auto r = scan_block(low, j, std::uint64_t{1} << j, local_nodes);
        if (r) {
          results[j] = *r;
          found = true;
        }
      }
      tested += local_nodes;
    }
    nodes += tested.load();
    for (int j = t - 1; j < n; j++)
      if (results[j] != ~std::uint64_t{0}) return results[j];
    return std::nullopt;
#endif
  }
  for (int j = t - 1; j < n; j++) {
    auto r = scan_block(low, j, std::uint64_t{1} << j, nodes);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

DimResult metric_dimension(const Graph& g, const SearchOptions& opts) {
  constexpr int kGeneralCap = 20;
  constexpr int kTransversalCap = 32;
  int n = g.order();
  if (n > kTransversalCap)
    throw CapExceeded("metric dimension capped at " +
                      std::to_string(kTransversalCap) + " vertices (got " +
                      std::to_string(n) + ")");
  DistanceMatrix dm = distances(g, opts.threads);
  Deadline deadline(opts.budget_seconds);

  auto classes = twin_classes(g);
  int twin_sum = 0;
  for (const auto& cls : classes) twin_sum += int(cls.size()) - 1;
  int lower = (n == 1) ? 0 : std::max(twin_sum, 1);

  TransversalSpace space;
  space.classes = classes;
  for (const auto& cls : classes) {
    space.total *= (long long)cls.size();
    for (int v : cls) space.all_members |= std::uint64_t{1} << v;
  }

  std::vector<std::uint64_t> class_masks;
  std::vector<int> class_sizes;
  for (const auto& cls : classes) {
    std::uint64_t m = 0;
    for (int v : cls) m |= std::uint64_t{1} << v;
    class_masks.push_back(m);
    class_sizes.push_back(int(cls.size()));
  }

  DistinctnessChecker check(dm);
  std::uint64_t nodes = 0;

  for (int t = lower; t <= n; t++) {
    std::optional<std::uint64_t> found;
    if (t == twin_sum && twin_sum >= 1) {
      found = transversal_search(space, check, opts, deadline, nodes);
    } else {
      if (n > kGeneralCap)
        throw CapExceeded(
            "metric dimension beyond the twin-transversal step capped at " +
            std::to_string(kGeneralCap) + " vertices (got " +
            std::to_string(n) + ")");
      found = general_search(n, t, class_masks, class_sizes, check, opts,
                             deadline, nodes);
    }
    if (found) {
      Bitset witness(n);
      for (std::uint64_t m = *found; m; m &= m - 1)
        witness.set(std::countr_zero(m));
      if (!is_resolving_set(g, dm, witness).resolving)
        throw std::logic_error("metric dimension witness failed re-verification");
      return {t, witness, nodes};
    }
  }
  throw std::logic_error("metric dimension search fell through");
}

}  // namespace tpz
