#pragma once

#include <cstdint>

// Seedable counter-splittable generator for the Monte Carlo paths. Every
// simulated walk / sampled year gets its own sub-stream derived from
// (master_seed, stream_id), so results never depend on scheduling order
// or on how many threads ran the ensemble.

namespace trendaudit {

// SplitMix64 step; also used as the mixing function for sub-stream seeds.
std::uint64_t splitmix64_next(std::uint64_t& state);

// xoshiro256++ (Blackman & Vigna), state filled from SplitMix64.
class Xoshiro256pp {
  public:
    static constexpr const char* kName = "xoshiro256++/splitmix64-substreams";

    explicit Xoshiro256pp(std::uint64_t seed);

    // Independent stream for (master_seed, stream_id); a second id level
    // (e.g. repeat index) nests via substream(substream_seed(a,b), c).
    static Xoshiro256pp substream(std::uint64_t master_seed, std::uint64_t stream_id);
    static std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    // Uniform in [0,1), 53-bit mantissa.
    double next_double();

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi);

    // Standard normal via the Marsaglia polar method (no libm trig).
    double next_normal();

  private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace trendaudit
