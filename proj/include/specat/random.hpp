#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace specat {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined <random> distributions so seeded runs reproduce
// across standard libraries.
using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

// Inclusive range [lo, hi].
inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_index(rng, hi - lo + 1);
}

inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return uniform_unit(rng) < p; }

}  // namespace specat
