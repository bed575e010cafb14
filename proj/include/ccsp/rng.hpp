#pragma once

// Deterministic splittable random streams.
//
// Every randomized routine draws from a stream derived from (seed, label).
// Streams with distinct labels are independent, so the order in which
// components consume randomness never affects another component's draws.
// The generator is a self-contained splitmix64 so results are identical
// across platforms and standard libraries.

#include <cstdint>
#include <string_view>

namespace ccsp {

namespace detail {

// FNV-1a, used only to fold stream labels into the seed.
inline std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view label)
      : state_(seed ^ detail::hash_label(label)) {
    // A few warm-up steps decorrelate nearby seeds.
    detail::splitmix64(state_);
    detail::splitmix64(state_);
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  // Uniform in [0, bound), bound >= 1. Rejection-free modulo bias is
  // negligible for the bounds used here but we reject anyway to keep the
  // streams exactly uniform.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_double() < p;
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  // Child stream; used when one component hands sub-streams to helpers.
  Rng split(std::string_view label) const {
    return Rng(state_ ^ 0xa5a5a5a55a5a5a5aULL, label);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ccsp
