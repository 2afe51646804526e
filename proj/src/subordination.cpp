#include "bbsubord/subordination.hpp"
#include "bbsubord/errors.hpp"
#include "bbsubord/parallel.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

namespace bbsubord {

std::string verdict_name(SubordReport::Verdict v)
{
    switch (v) {
    case SubordReport::Verdict::Contained: return "contained";
    case SubordReport::Verdict::Violated: return "violated";
    case SubordReport::Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

cplx bb_transform(const AnalyticFn& p, double beta, double gamma, cplx z)
{
    const cplx pz = p.eval(z);
    const cplx den = beta * pz + gamma;
    if (std::abs(den) <= 1e-12)
        throw pole_error("bb_transform: beta*p+gamma vanished", z, std::abs(den));
    if (z == cplx(0.0))
        return pz;
    return pz + z * p.deriv(z) / den;
}

SubordReport is_subordinate(const AnalyticFn& p, const Region& target, double r_max,
                            int n_radii, int n_samples, double tol)
{
    if (!(r_max > 0.0 && r_max < 1.0))
        throw parameter_error("is_subordinate: need 0 < r_max < 1");
    if (n_radii < 1 || n_samples < 1)
        throw parameter_error("is_subordinate: need n_radii >= 1, n_samples >= 1");

    SubordReport rep;
    rep.samples_per_circle = n_samples;
    rep.tol = tol;

    // normalization gate: subordination to these targets requires p(0) = 1
    cplx p0;
    try {
        p0 = p.eval(0.0);
    } catch (const std::exception&) {
        rep.verdict = SubordReport::Verdict::Inconclusive;
        return rep;
    }
    if (std::abs(p0 - 1.0) > 1e-9) {
        rep.verdict = SubordReport::Verdict::Violated;
        rep.min_gap = -std::abs(p0 - 1.0);
        return rep;
    }

    const double r0 = std::min(0.3, r_max);
    for (int i = 0; i < n_radii; ++i) {
        const double f = n_radii == 1 ? 1.0 : static_cast<double>(i) / (n_radii - 1);
        rep.radii.push_back(r0 * std::pow(r_max / r0, f));
    }

    const std::size_t total = static_cast<std::size_t>(n_radii) * n_samples;
    rep.total_samples = total;

    std::mutex merge;
    double best = std::numeric_limits<double>::infinity();
    double best_r = 0.0, best_theta = 0.0;
    std::atomic<std::size_t> failures{0};

    parallel_chunks(total, [&](std::size_t lo, std::size_t hi) {
        double loc_best = std::numeric_limits<double>::infinity();
        double loc_r = 0.0, loc_theta = 0.0;
        std::size_t loc_fail = 0;
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const double r = rep.radii[idx / n_samples];
            const double theta =
                -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(idx % n_samples) / n_samples;
            try {
                const double g = gap(target, p.eval(std::polar(r, theta)));
                if (g < loc_best) {
                    loc_best = g;
                    loc_r = r;
                    loc_theta = theta;
                }
            } catch (const std::exception&) {
                ++loc_fail;
            }
        }
        failures += loc_fail;
        std::lock_guard<std::mutex> lock(merge);
        if (loc_best < best) {
            best = loc_best;
            best_r = loc_r;
            best_theta = loc_theta;
        }
    });

    rep.failures = failures.load();
    rep.min_gap = best;
    rep.argmin_r = best_r;
    rep.argmin_theta = best_theta;

    if (rep.failures * 100 > total || !std::isfinite(best))
        rep.verdict = SubordReport::Verdict::Inconclusive;
    else if (best > tol)
        rep.verdict = SubordReport::Verdict::Contained;
    else if (best < -tol)
        rep.verdict = SubordReport::Verdict::Violated;
    else
        rep.verdict = SubordReport::Verdict::Inconclusive;
    return rep;
}

double ode_residual(const AnalyticFn& p, const AnalyticFn& h, double beta, double gamma,
                    double r, int n_samples)
{
    if (!(r > 0.0 && r < 1.0))
        throw parameter_error("ode_residual: need 0 < r < 1");
    double worst = 0.0;
    for (int j = 0; j < n_samples; ++j) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * j / n_samples;
        const cplx z = std::polar(r, theta);
        worst = std::max(worst, std::abs(bb_transform(p, beta, gamma, z) - h.eval(z)));
    }
    return worst;
}

} // namespace bbsubord
