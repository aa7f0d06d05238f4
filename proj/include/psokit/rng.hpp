#pragma once

#include <cstdint>

namespace psokit {

/*!
 * Deterministic 64-bit random stream (xoshiro256++ seeded via splitmix64).
 *
 * The generator algorithm is pinned on purpose: runs are reproducible from a
 * seed alone, and two streams with the same seed produce bit-identical draw
 * sequences on every platform with IEEE-754 doubles.  Swarm updates rely on a
 * strict draw-order contract (see swarm_engine), so nothing here may consume
 * entropy behind the caller's back; every public call advances the stream by
 * a fixed, documented number of raw 64-bit outputs.
 */
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed) {
        // splitmix64 expansion of the seed into the xoshiro256++ state.
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix64(x);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1; // all-zero state is degenerate
    }

    /// Next raw 64-bit output; advances the stream by one draw.
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        ++draws_;
        return result;
    }

    /// Uniform double in [0, 1) using the top 53 bits; exactly one draw.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi); exactly one draw.
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform index in [0, n); exactly one draw.  n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) {
        auto i = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    /// Number of raw 64-bit outputs consumed so far.
    std::uint64_t draw_count() const { return draws_; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
    std::uint64_t draws_ = 0;
};

/// Seed offset for the bookkeeping stream that runs beside the velocity stream.
inline constexpr std::uint64_t aux_stream_salt = 0xD1B54A32D192ED03ULL;

} // namespace psokit
