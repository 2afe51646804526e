#ifndef BBSUBORD_SUBORDINATION_HPP
#define BBSUBORD_SUBORDINATION_HPP

#include "bbsubord/analytic_fn.hpp"
#include "bbsubord/regions.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bbsubord {

/// Result of sampling p over circles |z| = r and testing containment.
struct SubordReport {
    enum class Verdict { Contained, Violated, Inconclusive };

    double min_gap = 0.0;
    double argmin_r = 0.0;
    double argmin_theta = 0.0;
    std::vector<double> radii;
    int samples_per_circle = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::size_t failures = 0;      // samples that threw and were skipped
    std::size_t total_samples = 0;
    double tol = 1e-9;
};

std::string verdict_name(SubordReport::Verdict v);

/// The Briot-Bouquet transform p(z) + z p'(z) / (beta p(z) + gamma).
/// Throws pole_error when |beta p + gamma| <= 1e-12.
cplx bb_transform(const AnalyticFn& p, double beta, double gamma, cplx z);

/// Image-containment subordination test for the univalent targets: samples
/// gap(target, p(r e^{i theta})) on n_radii circles (geometric from 0.3 to
/// r_max) with n_samples points each. p(0) must be 1 to 1e-9, else the
/// verdict is Violated immediately. More than 1% failed samples makes the
/// verdict Inconclusive.
SubordReport is_subordinate(const AnalyticFn& p, const Region& target, double r_max,
                            int n_radii = 12, int n_samples = 1024, double tol = 1e-9);

/// max over n_samples points of |z| = r of |bb_transform(p,beta,gamma,z) - h(z)|.
double ode_residual(const AnalyticFn& p, const AnalyticFn& h, double beta, double gamma,
                    double r, int n_samples);

} // namespace bbsubord

#endif
