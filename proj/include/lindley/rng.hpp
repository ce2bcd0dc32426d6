#pragma once

#include <cstdint>

namespace lindley {

/// Deterministic 64-bit generator: xoshiro256++ (Blackman & Vigna), state
/// filled from the seed by SplitMix64. Output is identical on every platform
/// for a given seed, which is what makes simulation reports reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double strictly inside (0, 1): the 53-bit grid shifted by half
    /// a cell, so neither endpoint is ever returned.
    double uniform01();

    /// Exponential variate with the given rate, strictly positive.
    double exponential(double rate);

  private:
    std::uint64_t state_[4];
};

/// Seed for replication substream `index` under `master_seed`: the index-th
/// output of the SplitMix64 stream anchored at the master seed. Substreams
/// depend only on the index, never on scheduling.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace lindley
