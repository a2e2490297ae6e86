#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stanley {

/// Fixed-width dynamic bitset. Used both for subsets of poset points (which
/// routinely exceed 64 elements) and for variable sets.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int bits) : nbits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator|=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this &= ~o
  DynBitset& subtract(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  /// this |= (a & b), without a temporary.
  DynBitset& or_and(const DynBitset& a, const DynBitset& b) {
    assert(nbits_ == a.nbits_ && nbits_ == b.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= a.words_[i] & b.words_[i];
    return *this;
  }

  DynBitset complement() const {
    DynBitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool is_subset_of(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  static bool intersects3(const DynBitset& a, const DynBitset& b, const DynBitset& c) {
    assert(a.nbits_ == b.nbits_ && a.nbits_ == c.nbits_);
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & b.words_[i] & c.words_[i]) return true;
    return false;
  }
  static int count_and(const DynBitset& a, const DynBitset& b) {
    assert(a.nbits_ == b.nbits_);
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }
  /// (a & b) subset of s
  static bool and_subset_of(const DynBitset& a, const DynBitset& b, const DynBitset& s) {
    assert(a.nbits_ == b.nbits_ && a.nbits_ == s.nbits_);
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & b.words_[i] & ~s.words_[i]) return false;
    return true;
  }

  /// First set bit, or -1.
  int find_first() const { return find_next(-1); }
  /// First set bit strictly after i, or -1.
  int find_next(int i) const {
    int w = (i + 1) >> 6;
    if (w >= static_cast<int>(words_.size())) return -1;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << ((i + 1) & 63));
    for (;;) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w >= static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = find_first(); i != -1; i = find_next(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  struct Hash {
    std::size_t operator()(const DynBitset& b) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(b.nbits_);
      for (auto w : b.words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  void mask_tail() {
    int r = nbits_ & 63;
    if (r && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stanley
