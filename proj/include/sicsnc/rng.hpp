#pragma once

#include <cstdint>
#include <cmath>

namespace sicsnc {

// xoshiro256++ with SplitMix64 seeding. We carry our own generator instead of
// <random> distributions so that sampled point sets are bit-identical across
// standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s_) si = splitmix64(x);
    }

    std::uint64_t next_u64() {
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

    // uniform on [0,1), 53-bit mantissa
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unit-mean exponential
    double exponential() { return -std::log1p(-uniform()); }

    // Exact Poisson count via the product method, chunked so the e^{-lambda}
    // threshold never underflows. O(mean) draws.
    long poisson(double mean) {
        long total = 0;
        while (mean > 0.0) {
            const double lam = mean < 30.0 ? mean : 30.0;
            mean -= lam;
            const double threshold = std::exp(-lam);
            double prod = uniform();
            long k = 0;
            while (prod >= threshold) {
                prod *= uniform();
                ++k;
            }
            total += k;
        }
        return total;
    }

    static std::uint64_t splitmix64(std::uint64_t& state) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Counter scheme for per-realization seeds: realization k of stream t under
// master seed M uses SplitMix64(M + (k+1)*GOLDEN + (t+1)*LCG_MULT). Every
// realization is reproducible in isolation from (M, k, t).
inline std::uint64_t derived_seed(std::uint64_t master, std::uint64_t realization,
                                  std::uint64_t stream = 0) {
    std::uint64_t state = master
        + (realization + 1) * 0x9E3779B97F4A7C15ull
        + (stream + 1) * 0xD1B54A32D192ED03ull;
    return Rng::splitmix64(state);
}

} // namespace sicsnc
