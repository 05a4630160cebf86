#pragma once

#include <array>
#include <cstdint>

#include "qens/matrix.hpp"

namespace qens {

// Deterministic random source: xoshiro256++ seeded from a (seed, stream)
// pair through SplitMix64, so independent streams for parallel workers come
// from the same user-visible seed. The integer stream is bit-identical
// across platforms; the floating-point transforms below (polar normals,
// Marsaglia-Tsang gamma) are deterministic given the platform's libm.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Standard normal via Marsaglia's polar method (second value cached).
  double normal();

  // Independent standard-normal real and imaginary parts.
  cdouble complex_normal();

  // Gamma(alpha, 1) via Marsaglia-Tsang, boosted for alpha < 1. alpha below
  // roughly 1e-3 underflows to zero with noticeable probability; callers
  // normalizing gamma draws must handle a zero sum.
  double gamma(double alpha);

  // Uniform integer in [0, bound), rejection-sampled (no modulo bias).
  std::uint32_t uniform_int(std::uint32_t bound);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace qens
