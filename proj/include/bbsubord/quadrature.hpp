#ifndef BBSUBORD_QUADRATURE_HPP
#define BBSUBORD_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace bbsubord {

struct QuadResult {
    std::complex<double> value;
    double error;       // achieved absolute error estimate
    int evaluations;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of a complex-valued integrand
/// over the real interval [a, b]. Bisects intervals whose K15-G7 error
/// estimate exceeds their share of abs_tol, down to max_levels. Throws
/// numeric_error carrying the achieved residual if the budget is exhausted
/// while the total estimate still exceeds abs_tol.
QuadResult integrate(const std::function<std::complex<double>(double)>& f,
                     double a, double b,
                     double abs_tol = 1e-11, int max_levels = 15);

/// Same, but a failure to converge returns the best estimate instead of
/// throwing. Callers inspect .error.
QuadResult integrate_lenient(const std::function<std::complex<double>(double)>& f,
                             double a, double b,
                             double abs_tol = 1e-11, int max_levels = 15);

} // namespace bbsubord

#endif
