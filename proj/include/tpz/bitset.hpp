#ifndef TPZ_BITSET_HPP
#define TPZ_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace tpz {

// Fixed-width bit vector; the width is chosen at construction and all
// binary operations require equal widths.
class Bitset {
public:
  using word = std::uint64_t;

  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int width() const { return n_; }

  void set(int i) { w_[i >> 6] |= word{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(word{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (word x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (word x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); i++)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int intersect_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); i++)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); i++)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  // First set bit, or -1.
  int first() const { return next(-1); }
  // First set bit strictly above i, or -1.
  int next(int i) const {
    int from = i + 1;
    if (from >= n_) return -1;
    std::size_t wi = from >> 6;
    word cur = w_[wi] & (~word{0} << (from & 63));
    while (true) {
      if (cur) return int(wi << 6) + std::countr_zero(cur);
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }

  // Low 64 bits; enough for every solver path (all caps are <= 64 vertices).
  word low_word() const { return w_.empty() ? 0 : w_[0]; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }
  static Bitset of(int n, const std::vector<int>& members) {
    Bitset b(n);
    for (int v : members) b.set(v);
    return b;
  }

private:
  int n_ = 0;
  std::vector<word> w_;
};

}  // namespace tpz

#endif
