#ifndef BBSUBORD_TESTS_SUPPORT_HPP
#define BBSUBORD_TESTS_SUPPORT_HPP

#include "bbsubord/theorems.hpp"

#include <complex>
#include <optional>
#include <random>

namespace bbtest {

using bbsubord::BBParams;
using cplx = std::complex<double>;

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx random_disc_point(std::mt19937_64& rng, double r_max)
{
    const double r = r_max * std::sqrt(uniform(rng, 0.0, 1.0));
    return std::polar(r, uniform(rng, -3.14159265358979, 3.14159265358979));
}

inline double rel_err(double got, double want)
{
    const double scale = std::max({std::abs(got), std::abs(want), 1e-30});
    return std::abs(got - want) / scale;
}

// T1 feasible draws are constructive: any gamma < 0 leaves a nonempty beta range.
inline BBParams draw_t1(std::mt19937_64& rng)
{
    const double e = std::exp(1.0);
    const double gamma = uniform(rng, -2.5, -0.02);
    const double lo = std::max(-gamma / e, -gamma * e + e / (1.0 - std::sqrt(2.0) * e));
    const double hi = -e * gamma;
    BBParams p;
    p.beta = uniform(rng, lo, hi);
    p.gamma = gamma;
    return p;
}

inline std::optional<BBParams> draw_rejection(std::mt19937_64& rng, const std::string& theorem,
                                              int max_tries, double k_max = 16.0)
{
    const double b_min = theorem == "t2" ? -0.97 : -1.0;
    for (int i = 0; i < max_tries; ++i) {
        BBParams p;
        p.A = uniform(rng, -0.9, 1.0);
        p.B = uniform(rng, b_min, p.A - 1e-3);
        p.beta = uniform(rng, -1.5, 1.5);
        p.gamma = uniform(rng, -1.5, 1.5);
        try {
            if (bbsubord::hypothesis(theorem, p, k_max).satisfied)
                return p;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

inline std::optional<BBParams> draw_feasible(std::mt19937_64& rng, const std::string& theorem,
                                             int max_tries = 40000, double k_max = 16.0)
{
    if (theorem == "t1")
        return draw_t1(rng);
    return draw_rejection(rng, theorem, max_tries, k_max);
}

// Draws satisfying only T5's condition (i), which is what makes the vertex
// x0 and F''(x0) well defined.
inline BBParams draw_t5_condition_i(std::mt19937_64& rng)
{
    for (;;) {
        BBParams p;
        p.A = uniform(rng, -0.9, 1.0);
        p.B = uniform(rng, -1.0, p.A - 1e-3);
        p.beta = uniform(rng, -1.5, 1.5);
        p.gamma = uniform(rng, -1.5, 1.5);
        const double G = p.A * p.beta + p.B * p.gamma;
        if (p.B * G * (p.beta + p.gamma) > 1e-6)
            return p;
    }
}

} // namespace bbtest

#endif
