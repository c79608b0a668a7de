#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fuzzopt {

/// Deterministic random stream. All randomized choices of a run draw from one
/// sequential stream so a (seed, config) pair fully reproduces the run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [0, n). n must be >= 1.
  std::uint32_t below(std::uint32_t n) {
    if (n <= 1) {
      next();  // keep the stream position independent of n
      return 0;
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<std::uint32_t>(v % n);
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint32_t>(n))); }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(static_cast<std::uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fuzzopt
