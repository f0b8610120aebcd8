#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dynsep {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable PRNG wrapper. All randomness in the library flows through
// explicit seeds; bounded draws are implemented here (not with
// std::uniform_int_distribution) so that traces are reproducible across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t u64() { return eng_(); }

  // Uniform integer in [0, k), k >= 1.
  std::uint64_t below(std::uint64_t k) {
    std::uint64_t bound = k * (UINT64_MAX / k);
    std::uint64_t r;
    do {
      r = u64();
    } while (r >= bound);
    return r % k;
  }

  int below_int(int k) { return static_cast<int>(below(static_cast<std::uint64_t>(k))); }

  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

  // Bernoulli(2^-i) for i in [0, 63]; i == 0 always succeeds.
  bool coin_pow2(int i) {
    if (i <= 0) return true;
    return (u64() >> (64 - i)) == 0;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream; derivation depends only on (seed, tag).
  Rng derive(std::uint64_t tag) const {
    return Rng(splitmix64(seed_ ^ splitmix64(tag + 0x51a7b0d5c2f1e3ULL)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace dynsep
