#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace quizmine {

/// SplitMix64 pseudo-random generator (Steele, Lea & Flood's 64-bit finalizer
/// chain). Chosen over std::mt19937 + <random> distributions because the
/// synthetic fixtures are part of the test contract: every draw below is
/// specified arithmetic on the raw stream, so a given seed produces the same
/// data on any platform or implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n) by rejection-free scaling (n << 2^64, so the
  /// modulo bias is negligible for fixture purposes but we document it).
  std::uint64_t next_below(std::uint64_t n) {
    return n == 0 ? 0 : next_u64() % n;
  }

  bool next_bool(double p_true) { return next_unit() < p_true; }

  /// Standard normal via Box-Muller; consumes exactly two uniform draws.
  double next_normal() {
    double u1 = next_unit();
    double u2 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  /// Fisher-Yates shuffle, descending index order, one draw per swap.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = std::size_t(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace quizmine
