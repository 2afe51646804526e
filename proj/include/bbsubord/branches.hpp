#ifndef BBSUBORD_BRANCHES_HPP
#define BBSUBORD_BRANCHES_HPP

#include <complex>

namespace bbsubord {

using cplx = std::complex<double>;

// Euler-Mascheroni constant, 21 digits.
inline constexpr double euler_gamma = 0.577215664901532860607;

/// Square root with Re >= 0; on the negative real axis takes the limit from
/// above (purely imaginary, Im >= 0).
cplx principal_sqrt(cplx w);

/// Square root with Im >= 0 (the branch entering the parabolic map).
cplx sqrt_upper(cplx w);

/// Logarithm with Im in (-pi, pi]. Throws domain_error at w = 0.
cplx principal_log(cplx w);

/// Hyperbolic cosine integral Chi(z) = eta + log z + sum z^{2k}/(2k (2k)!).
/// Throws domain_error at z = 0 (logarithmic singularity).
cplx chi(cplx z);

/// Hyperbolic sine integral Shi(z) = sum z^{2k+1}/((2k+1) (2k+1)!).
cplx shi(cplx z);

/// Entire part of Chi: chi(z) - eta - log z = sum_{k>=1} z^{2k}/(2k (2k)!).
/// Used wherever the log must cancel exactly.
cplx chi_entire(cplx z);

/// e^z - 1 and log(1+z) without small-argument cancellation.
cplx expm1c(cplx z);
cplx log1pc(cplx z);

} // namespace bbsubord

#endif
