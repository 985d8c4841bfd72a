#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "baxter/permutation.hpp"

namespace testutil {

// Deterministic xorshift generator for sampled property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed) {}
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  baxter::Permutation permutation(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(below(i + 1))]);
    return baxter::Permutation(std::move(w));
  }

 private:
  std::uint64_t s_;
};

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace testutil
