#pragma once

#include <cstdint>
#include <vector>

namespace lrc {

/// Deterministic pseudo-random generator: xoshiro256** with the state
/// expanded from the seed by splitmix64. The same seed always yields the
/// same stream, on every platform; seeds are recorded in reports so that
/// sampled results can be reproduced exactly.
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next();

    /// Uniform value in [0, n), unbiased (rejection sampling). n >= 1.
    uint64_t below(uint64_t n);

    /// Uniformly random k-subset of {0,...,n-1} via a partial Fisher-Yates
    /// shuffle; returned indices are sorted ascending.
    std::vector<int> sample_subset(int n, int k);

  private:
    uint64_t s_[4];
};

} // namespace lrc
