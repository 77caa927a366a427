#include "trendaudit/rng.hpp"

#include <cmath>

namespace trendaudit {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    s_[0] = splitmix64_next(sm);
    s_[1] = splitmix64_next(sm);
    s_[2] = splitmix64_next(sm);
    s_[3] = splitmix64_next(sm);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Xoshiro256pp::substream_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
    std::uint64_t sm = master_seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    std::uint64_t h = splitmix64_next(sm);
    return h ^ splitmix64_next(sm);
}

Xoshiro256pp Xoshiro256pp::substream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return Xoshiro256pp(substream_seed(master_seed, stream_id));
}

std::uint64_t Xoshiro256pp::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::next_uniform(double lo, double hi) {
    return lo + next_double() * (hi - lo);
}

double Xoshiro256pp::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

}  // namespace trendaudit
