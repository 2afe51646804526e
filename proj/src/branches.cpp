#include "bbsubord/branches.hpp"
#include "bbsubord/errors.hpp"

#include <cmath>
#include <numbers>

namespace bbsubord {

cplx principal_sqrt(cplx w)
{
    if (w.imag() == 0.0) {
        // pin the cut: limit from above, so -x maps to +i sqrt(x)
        if (w.real() < 0.0)
            return cplx(0.0, std::sqrt(-w.real()));
        return cplx(std::sqrt(w.real()), 0.0);
    }
    return std::sqrt(w); // std principal branch, Re >= 0
}

cplx sqrt_upper(cplx w)
{
    cplx s = principal_sqrt(w);
    if (s.imag() < 0.0)
        return -s;
    return s;
}

cplx principal_log(cplx w)
{
    if (w.real() == 0.0 && w.imag() == 0.0)
        throw domain_error("principal_log: zero input");
    if (w.imag() == 0.0 && w.real() < 0.0)
        return cplx(std::log(-w.real()), std::numbers::pi); // cut approached from above
    return std::log(w);
}

namespace {

constexpr int kSeriesCap = 60;         // factorial decay makes this exact on |z| <= 4
constexpr double kSeriesRelTol = 1e-15;

} // namespace

cplx chi_entire(cplx z)
{
    const cplx z2 = z * z;
    cplx term = z2 / 4.0; // z^2 / (2 * 2!)
    cplx sum = term;
    for (int k = 2; k <= kSeriesCap; ++k) {
        // z^{2k}/(2k (2k)!) from the previous term
        term *= z2 * (2.0 * k - 2.0) / (2.0 * k * (2.0 * k) * (2.0 * k - 1.0));
        sum += term;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum))
            break;
    }
    return sum;
}

cplx chi(cplx z)
{
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw domain_error("chi: logarithmic singularity at z = 0");
    return euler_gamma + principal_log(z) + chi_entire(z);
}

cplx expm1c(cplx z)
{
    if (std::abs(z) < 1e-3) {
        // z (1 + z/2 (1 + z/3 (1 + z/4 (1 + z/5)))), error ~ |z|^6/720
        return z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0))));
    }
    return std::exp(z) - 1.0;
}

cplx log1pc(cplx z)
{
    if (std::abs(z) < 1e-3) {
        cplx acc = 0.0;
        for (int n = 6; n >= 1; --n)
            acc = z * (1.0 / n - acc);
        return acc;
    }
    return principal_log(1.0 + z);
}

cplx shi(cplx z)
{
    cplx term = z;
    cplx sum = term;
    const cplx z2 = z * z;
    for (int k = 1; k <= kSeriesCap; ++k) {
        // z^{2k+1}/((2k+1) (2k+1)!) from the previous term
        term *= z2 * (2.0 * k - 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 1.0) * (2.0 * k));
        sum += term;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace bbsubord
