/* noise.hpp */

#ifndef DMPF_NOISE_HPP
#define DMPF_NOISE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dmpf/errors.hpp"
#include "dmpf/random.hpp"

namespace dmpf {

inline void check_noise_color(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw ParameterError("noise color alpha must lie in [0, 2], got " + std::to_string(alpha));
}

/* h_k by the recursion h_0 = 1, h_k = (alpha/2 + k - 1) h_{k-1} / k */
inline double pulse_response(double alpha, std::int64_t k)
{
    check_noise_color(alpha);
    if (k < 0)
        throw ParameterError("pulse response index must be >= 0");
    double h = 1.0;
    for (std::int64_t j = 1; j <= k; ++j)
        h = (alpha / 2.0 + static_cast<double>(j) - 1.0) * h / static_cast<double>(j);
    return h;
}

/*
 * Colored (1/f^alpha) noise by the FIR construction
 *
 *   dchi_k = w_{k+1} + (alpha/2) * sum_{m=0}^{k-1} h_m / (m+1) * w_{k-m}
 *
 * with w ~ N(0, sigma_d), sigma_d being the VARIANCE of the white samples.
 * The generator keeps the full white-sample history, so sample k costs O(k).
 * An optional window limits the sum to the most recent samples.
 */
class ColoredNoiseGen
{
public:
    ColoredNoiseGen(double alpha, double sigma_d, std::uint64_t seed,
                    std::size_t history_window = 0) :
        mAlpha(alpha), mSigmaD(sigma_d), mSeed(seed), mWindow(history_window), mRng(seed)
    {
        check_noise_color(alpha);
        if (!(sigma_d > 0.0))
            throw ParameterError("noise variance sigma_d must be positive");
        mH.push_back(1.0);
        mHd.push_back(1.0);
    }

    double alpha() const { return mAlpha; }
    double sigma_d() const { return mSigmaD; }
    std::uint64_t seed() const { return mSeed; }
    std::size_t k() const { return mW.size(); }
    double chi() const { return mChi; }
    double last_delta() const { return mLastDelta; }
    const std::vector<double>& w_history() const { return mW; }
    const std::vector<double>& h_cache() const { return mH; }

    /* Draws w_{k+1} and returns dchi_k; chi accumulates the increment */
    double next_sample()
    {
        return advance(mRng.standard_normal() * std::sqrt(mSigmaD));
    }

    /* Advances with a caller-provided white sample instead of drawing one */
    double advance(double w_next)
    {
        const std::size_t k = mW.size();
        while (mH.size() < k) {
            mH.push_back((mAlpha / 2.0 + static_cast<double>(mH.size()) - 1.0) * mH.back()
                         / static_cast<double>(mH.size()));
            mHd.push_back(mH.back() / static_cast<double>(mH.size()));
        }

        double acc = 0.0;
        const std::size_t terms = (mWindow == 0) ? k : std::min(k, mWindow);
        for (std::size_t m = 0; m < terms; ++m)
            acc += mHd[m] * mW[k - 1 - m];

        const double delta = w_next + (mAlpha / 2.0) * acc;
        mW.push_back(w_next);
        mChi += delta;
        mLastDelta = delta;
        return delta;
    }

private:
    double mAlpha;
    double mSigmaD;
    std::uint64_t mSeed;
    std::size_t mWindow;
    Rng mRng;
    std::vector<double> mW;    /* w_1 .. w_k */
    std::vector<double> mH;    /* h_0 .. */
    std::vector<double> mHd;   /* h_m / (m + 1), same rounding as dividing inline */
    double mChi = 0.0;
    double mLastDelta = 0.0;
};

} /* namespace dmpf */

#endif /* DMPF_NOISE_HPP */
