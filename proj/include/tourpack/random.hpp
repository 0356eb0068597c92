#pragma once

// All randomness flows from one 64-bit seed through std::mt19937_64, whose
// output sequence is fixed by the C++ standard. The standard distributions
// are implementation-defined, so range reduction is done here by rejection
// to keep generated files identical across platforms.

#include "tourpack/tournament.hpp"

#include <cstdint>
#include <random>

namespace tourpack {

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent stream seeds from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Each pair reversed independently with probability p.
LinearTournament random_tournament(int n, double p, Rng& rng);

/// Backward set is a random matching of arcs spanning at least two
/// positions; roughly `density` of the vertices are covered.
LinearTournament random_sparse_tournament(int n, Rng& rng, double density = 0.7);

/// Random perfect matching with every span >= 2; n must be even and >= 4.
LinearTournament random_fully_sparse_tournament(int n, Rng& rng);

} // namespace tourpack
