#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace dynsep {

// Runtime-sized bitset over 64-bit words. All operations keep the padding
// bits of the last word zero, so word-level comparisons are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }
  int word_count() const { return static_cast<int>(w_.size()); }
  std::uint64_t word(int i) const { return w_[i]; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  void set_all() {
    if (w_.empty()) return;
    std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
    trim();
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // Index of the lowest set bit, -1 if empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // Lowest set bit strictly greater than i, -1 if none.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    std::size_t wi = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  int first_and(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i] & o.w_[i];
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return -1;
  }

  int first_and3(const Bitset& a, const Bitset& b) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i] & a.w_[i] & b.w_[i];
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return -1;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // True if every set bit of this is also set in o.
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& andnot_assign(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    int tail = nbits_ & 63;
    if (tail != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace dynsep
