#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

#include "scorematch/linalg.hpp"

namespace scorematch {

/// Deterministic xoshiro256++ stream (Blackman & Vigna 2019).
///
/// Substreams are derived by seeding SplitMix64 with
/// master_seed + stream_index * 0x9e3779b97f4a7c15 (the SplitMix64 "gamma"),
/// so stream_index r is the r-th split of the master seed and distinct
/// indices give statistically independent streams. Identical
/// (master_seed, stream_index) pairs always reproduce the same sequence.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Standard normal variate via the Marsaglia polar method.
    double next_normal();

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t master_seed_ = 0;
    std::uint64_t stream_index_ = 0;
};

/// count i.i.d. Gamma(shape, rate) variates by the Marsaglia-Tsang squeeze
/// method (shape >= 1; the boost x*u^(1/shape) handles shape < 1), scaled
/// by 1/rate. Deterministic given the stream state.
Vector sample_gamma(RngStream& rng, double shape, double rate, std::size_t count);

} // namespace scorematch
