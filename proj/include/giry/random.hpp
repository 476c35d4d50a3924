#pragma once

// Seeded case generation. Every case draws from its own engine, seeded from
// (suite seed, stream name, case index), so outcomes do not depend on the order
// or the worker on which cases run.

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace giry {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
  return splitmix64(splitmix64(seed ^ h) + index);
}

/// mt19937_64 with portable bounded draws (rejection sampling instead of the
/// implementation-defined std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index) : engine_(derive_seed(seed, stream, index)) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return x % n;
  }
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  /// k / d with d uniform in [1, max_den] and k uniform in [0, d].
  Rational unit_rational(long max_den) {
    long d = between(1, max_den);
    return Rational(between(0, d), d);
  }

  /// Nonnegative weights c_i / d summing to 1, d uniform in [1, max_den]:
  /// a uniformly random composition of d into k parts.
  std::vector<Rational> simplex_weights(std::size_t k, long max_den) {
    long d = between(1, max_den);
    std::vector<long> cuts{0, d};
    for (std::size_t i = 0; i + 1 < k; ++i) cuts.push_back(between(0, d));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> w;
    for (std::size_t i = 0; i < k; ++i) w.emplace_back(cuts[i + 1] - cuts[i], d);
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace giry
