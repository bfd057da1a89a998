#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace crad {

// Deterministic splittable RNG used by every randomized stage of the
// toolkit. The core step is splitmix64 (Steele, Lea & Flood's public
// algorithm), chosen because it is trivial to reimplement bit-exactly in
// any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Substreams are derived from the *constructor* seed, never from the
// advancing state, so parallel consumers that split by a fixed tag get
// schedule-independent output:
//
//   stream(tag).seed = mix64(seed ^ (0x9E3779B97F4A7C15 * (tag + 1)))
//
// where mix64 is the z-transform above applied once. All derived values
// (uniform doubles, normals, index draws) are defined exactly below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  // One substream per tag; independent of how much this instance has drawn.
  Rng stream(std::uint64_t tag) const {
    return Rng(mix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (tag + 1))));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Index in [0, bound). Modulo bias is < bound / 2^64, irrelevant at the
  // sample sizes this toolkit targets; kept for cross-language simplicity.
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

  // Standard normal via Box-Muller; consumes exactly two 64-bit draws.
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // First k entries of a Fisher-Yates shuffle of 0..n-1.
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k && i < n - 1; ++i) {
      const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

  std::uint64_t seed() const { return seed_; }

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace crad
