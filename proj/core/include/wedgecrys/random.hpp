#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace wedgecrys {

/// Engine for trial `index` of a campaign seeded with `seed`. Trials draw
/// from independent streams, so campaigns can be split across workers and
/// still reproduce the same counterexamples.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x5eedU};
  return std::mt19937_64(seq);
}

/// Uniform-enough integer in [0, bound); bound must be positive.
mpz_class random_below(const mpz_class& bound, std::mt19937_64& gen);

}  // namespace wedgecrys
