#pragma once

#include <cmath>
#include <cstdint>

#include "orbitcone/vec.hpp"

namespace orbitcone {

/// Counter-based generator (splitmix64 core). Trial i of a run draws from
/// split(seed, i), so serial and worker-pool executions see identical
/// streams. All distributions are derived from the raw stream directly to
/// keep output byte-stable across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static RngStream split(std::uint64_t seed, std::uint64_t stream) {
    RngStream r(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    r.next_u64();
    return r;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Inclusive bounds.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Random rational p/den with p integer in [lo*den, hi*den].
  Rational rational(long lo, long hi, long den = 1) {
    Rational q(uniform_int(lo * den, hi * den), den);
    q.canonicalize();
    return q;
  }

  QVec rational_vec(std::size_t n, long lo, long hi, long den = 1) {
    QVec v(n);
    for (auto& x : v) x = rational(lo, hi, den);
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace orbitcone
