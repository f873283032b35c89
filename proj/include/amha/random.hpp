#pragma once

#include <cstdint>
#include <random>

namespace amha {

/// std::mt19937_64's output sequence is fixed by the standard; the
/// distributions are not, so draws that must replay across toolchains go
/// through these helpers.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n), by rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace amha
