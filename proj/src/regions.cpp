#include "bbsubord/regions.hpp"
#include "bbsubord/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace bbsubord {

namespace {
constexpr double kParabolaVMax = 50.0; // covers u up to 1250.5, beyond any corpus value
}

Region Region::janowski(double A, double B)
{
    if (!(-1.0 <= B && B < A && A <= 1.0))
        throw parameter_error("Region::janowski: need -1 <= B < A <= 1");
    return Region{Variant::Janowski, A, B};
}

double gap(const Region& region, cplx w)
{
    switch (region.variant) {
    case Region::Variant::Janowski: {
        const cplx den = region.A - region.B * w;
        if (std::abs(den) < 1e-14 * (1.0 + std::abs(w)))
            throw domain_error("gap(janowski): w at the pole A/B of the Moebius inverse");
        return 1.0 - std::abs((w - 1.0) / den);
    }
    case Region::Variant::Lemniscate:
        return 1.0 - std::abs(w * w - 1.0);
    case Region::Variant::ExpDisc:
        if (w.imag() == 0.0 && w.real() <= 0.0)
            throw domain_error("gap(expdisc): w on the branch cut (-inf, 0]");
        return 1.0 - std::abs(principal_log(w));
    case Region::Variant::Parabola:
        return w.real() - std::abs(w - 1.0);
    }
    throw parameter_error("gap: bad region variant");
}

cplx boundary_point(const Region& region, double theta)
{
    const cplx u = std::polar(1.0, theta);
    switch (region.variant) {
    case Region::Variant::Janowski:
        return (1.0 + region.A * u) / (1.0 + region.B * u);
    case Region::Variant::Lemniscate:
        return principal_sqrt(1.0 + u);
    case Region::Variant::ExpDisc:
        return std::exp(u);
    case Region::Variant::Parabola: {
        const double v = theta / std::numbers::pi * kParabolaVMax;
        return cplx(0.5 * (1.0 + v * v), v);
    }
    }
    throw parameter_error("boundary_point: bad region variant");
}

cplx phi_par(cplx z)
{
    if (std::abs(1.0 - z) < 1e-14)
        throw domain_error("phi_par: boundary singularity at z = 1");
    const cplx s = sqrt_upper(z);
    const cplx L = principal_log((1.0 + s) / (1.0 - s));
    return 1.0 + (2.0 / (std::numbers::pi * std::numbers::pi)) * L * L;
}

std::string region_name(const Region& region)
{
    switch (region.variant) {
    case Region::Variant::Janowski: {
        std::ostringstream os;
        os << "janowski:" << region.A << ":" << region.B;
        return os.str();
    }
    case Region::Variant::Lemniscate:
        return "lemniscate";
    case Region::Variant::ExpDisc:
        return "expdisc";
    case Region::Variant::Parabola:
        return "parabola";
    }
    return "?";
}

Region parse_region(const std::string& text)
{
    if (text == "lemniscate")
        return Region::lemniscate();
    if (text == "expdisc")
        return Region::expdisc();
    if (text == "parabola")
        return Region::parabola();
    if (text.rfind("janowski", 0) == 0) {
        double A = 1.0, B = -1.0;
        if (text.size() > 8) {
            if (std::sscanf(text.c_str(), "janowski:%lf:%lf", &A, &B) != 2)
                throw parameter_error("parse_region: expected janowski:A:B, got " + text);
        }
        return Region::janowski(A, B);
    }
    throw parameter_error("parse_region: unknown region " + text);
}

std::string boundary_csv(const Region& region, int points)
{
    std::ostringstream os;
    os.precision(17);
    os << "theta,re,im\n";
    for (int i = 0; i < points; ++i) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * i / (points - 1);
        const cplx w = boundary_point(region, theta);
        os << theta << "," << w.real() << "," << w.imag() << "\n";
    }
    return os.str();
}

} // namespace bbsubord
