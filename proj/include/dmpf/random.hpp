/* random.hpp */

#ifndef DMPF_RANDOM_HPP
#define DMPF_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

namespace dmpf {

inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/* Derives an independent stream seed from a base seed and a stream tag */
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream)
{
    std::uint64_t s = base ^ (stream * 0xD1B54A32D192ED03ULL);
    splitmix64(s);
    return splitmix64(s);
}

/*
 * Rng is the one random source used everywhere: std::mt19937_64 (whose
 * output sequence is fixed by the C++ standard) seeded through splitmix64,
 * with hand-written uniform and Box-Muller Gaussian transforms. The standard
 * library distributions are implementation-defined and therefore avoided.
 * Stream version: 1.
 */
class Rng
{
public:
    static constexpr int kVersion = 1;

    explicit Rng(std::uint64_t seed = 0)
    {
        std::uint64_t s = seed;
        std::seed_seq seq { static_cast<std::uint32_t>(splitmix64(s)),
                            static_cast<std::uint32_t>(splitmix64(s)),
                            static_cast<std::uint32_t>(splitmix64(s)),
                            static_cast<std::uint32_t>(splitmix64(s)) };
        mEngine.seed(seq);
    }

    std::uint64_t next_u64() { return mEngine(); }

    /* Uniform in [0, 1) with 53 random bits */
    double uniform() { return static_cast<double>(mEngine() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /* Uniform integer in [0, n) */
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    /* Standard normal via Box-Muller; the second variate is cached */
    double standard_normal()
    {
        if (mSpare) {
            const double v = *mSpare;
            mSpare.reset();
            return v;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        mSpare = radius * std::sin(angle);
        return radius * std::cos(angle);
    }

    double normal(double mean, double stddev) { return mean + stddev * standard_normal(); }

private:
    std::mt19937_64 mEngine;
    std::optional<double> mSpare;
};

} /* namespace dmpf */

#endif /* DMPF_RANDOM_HPP */
