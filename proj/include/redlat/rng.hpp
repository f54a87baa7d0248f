#pragma once

#include <cstdint>

namespace redlat {

// SplitMix64, used to expand seeds into generator state.
// https://prng.di.unimi.it/splitmix64.c
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256++ 1.0 (https://prng.di.unimi.it/xoshiro256plusplus.c)
class Xoshiro256 {
public:
    Xoshiro256() : Xoshiro256(0) {}

    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm(seed);
        s_[0] = sm();
        s_[1] = sm();
        s_[2] = sm();
        s_[3] = sm();
    }

    std::uint64_t operator()() {
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

    // Uniform on (0, 1]: zero is excluded so inverse-CDF sampling of
    // heavy-tailed laws cannot produce an infinite variate.
    double uniform() {
        return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

// Independent stream for (seed, index). Replication streams are derived
// from the pair, never advanced from one another, so a fixed seed yields
// the same per-replication draws no matter how work is scheduled.
inline Xoshiro256 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed);
    const std::uint64_t a = mix();
    SplitMix64 mix2(index ^ 0xD1B54A32D192ED03ULL);
    return Xoshiro256(a ^ mix2());
}

}  // namespace redlat
