#pragma once

#include <cstdint>
#include <random>

namespace lcs {

// Portable random source shared by every stochastic routine.
//
// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
// standard. The conversions to doubles and normals below are spelled out here
// instead of using <random> distributions, whose algorithms are
// implementation-defined. Together this makes seeded patterns and ensembles
// reproducible across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1).
  double uniform_open() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  // Uniform integer on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via the Box-Muller transform (cosine branch only).
  double normal();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; derives independent child seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace lcs
