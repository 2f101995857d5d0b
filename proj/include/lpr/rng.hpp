#pragma once

#include <cstdint>
#include <random>

namespace lpr {

/// 53-bit uniform draw in [0, 1). The mapping from engine output is pinned
/// here instead of going through std::uniform_real_distribution, whose
/// algorithm is implementation-defined; seeded streams stay stable across
/// standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace lpr
