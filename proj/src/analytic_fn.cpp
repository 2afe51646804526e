#include "bbsubord/analytic_fn.hpp"
#include "bbsubord/errors.hpp"
#include "bbsubord/regions.hpp"

#include <cmath>
#include <numbers>

namespace bbsubord {

cplx cauchy_deriv(const std::function<cplx(cplx)>& f, cplx z,
                  double domain_radius, int samples)
{
    const double rho = std::min(0.05, (domain_radius - std::abs(z)) / 2.0);
    if (!(rho > 0.0))
        throw domain_error("cauchy_deriv: point too close to the domain boundary");
    cplx sum = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / samples;
        const cplx w = std::polar(1.0, theta);
        sum += f(z + rho * w) / w;
    }
    return sum / (static_cast<double>(samples) * rho);
}

AnalyticFn AnalyticFn::closed_form(std::string name, cplx at_zero, Fn eval, Fn deriv, Fn deriv2)
{
    AnalyticFn fn;
    fn.kind_ = Kind::ClosedForm;
    fn.name_ = std::move(name);
    fn.at_zero_ = at_zero;
    fn.eval_ = std::move(eval);
    fn.deriv_ = std::move(deriv);
    fn.deriv2_ = std::move(deriv2);
    return fn;
}

AnalyticFn AnalyticFn::power_series(std::string name, std::vector<cplx> coeffs, double radius)
{
    AnalyticFn fn;
    fn.kind_ = Kind::PowerSeries;
    fn.name_ = std::move(name);
    fn.at_zero_ = coeffs.empty() ? cplx(0.0) : coeffs.front();
    fn.radius_ = std::min(1.0, radius);
    fn.coeffs_ = std::move(coeffs);
    const std::vector<cplx>& a = fn.coeffs_;
    fn.eval_ = [a](cplx z) {
        cplx acc = 0.0;
        for (std::size_t i = a.size(); i-- > 0;)
            acc = acc * z + a[i];
        return acc;
    };
    fn.deriv_ = [a](cplx z) {
        cplx acc = 0.0;
        for (std::size_t i = a.size(); i-- > 1;)
            acc = acc * z + static_cast<double>(i) * a[i];
        return acc;
    };
    fn.deriv2_ = [a](cplx z) {
        cplx acc = 0.0;
        for (std::size_t i = a.size(); i-- > 2;)
            acc = acc * z + static_cast<double>(i * (i - 1)) * a[i];
        return acc;
    };
    return fn;
}

AnalyticFn AnalyticFn::parametric_integral(std::string name, cplx at_zero, Fn eval, Fn deriv,
                                           Fn deriv2)
{
    AnalyticFn fn;
    fn.kind_ = Kind::ParametricIntegral;
    fn.name_ = std::move(name);
    fn.at_zero_ = at_zero;
    fn.eval_ = std::move(eval);
    fn.deriv_ = std::move(deriv);
    fn.deriv2_ = std::move(deriv2);
    return fn;
}

cplx AnalyticFn::eval(cplx z) const
{
    if (std::abs(z) >= radius_)
        throw domain_error(name_ + ": evaluation outside the disc, |z| = " +
                           std::to_string(std::abs(z)));
    return eval_(z);
}

cplx AnalyticFn::deriv(cplx z) const
{
    if (std::abs(z) >= radius_)
        throw domain_error(name_ + ": derivative outside the disc");
    if (deriv_)
        return deriv_(z);
    return cauchy_deriv(eval_, z, radius_);
}

cplx AnalyticFn::deriv2(cplx z) const
{
    if (std::abs(z) >= radius_)
        throw domain_error(name_ + ": derivative outside the disc");
    if (deriv2_)
        return deriv2_(z);
    if (deriv_)
        return cauchy_deriv(deriv_, z, radius_);
    // second Cauchy pass over the first-derivative estimate
    const Fn& e = eval_;
    const double r = radius_;
    return cauchy_deriv([&e, r](cplx w) { return cauchy_deriv(e, w, r); }, z, radius_);
}

AnalyticFn& AnalyticFn::with_param(const std::string& key, double value)
{
    params_.emplace_back(key, value);
    return *this;
}

// --- library ----------------------------------------------------------------

AnalyticFn fn_const_one()
{
    return AnalyticFn::closed_form(
        "one", 1.0, [](cplx) { return cplx(1.0); }, [](cplx) { return cplx(0.0); },
        [](cplx) { return cplx(0.0); });
}

AnalyticFn fn_one_plus_z()
{
    return AnalyticFn::power_series("one_plus_z", {1.0, 1.0});
}

AnalyticFn fn_halfplane()
{
    return AnalyticFn::closed_form(
        "halfplane", 1.0,
        [](cplx z) { return (1.0 + z) / (1.0 - z); },
        [](cplx z) { cplx d = 1.0 - z; return 2.0 / (d * d); },
        [](cplx z) { cplx d = 1.0 - z; return 4.0 / (d * d * d); });
}

AnalyticFn fn_identity()
{
    return AnalyticFn::closed_form(
        "identity", 0.0, [](cplx z) { return z; }, [](cplx) { return cplx(1.0); },
        [](cplx) { return cplx(0.0); });
}

AnalyticFn fn_koebe_like()
{
    return AnalyticFn::closed_form(
        "koebe_like", 0.0,
        [](cplx z) { return z / (1.0 - z); },
        [](cplx z) { cplx d = 1.0 - z; return 1.0 / (d * d); },
        [](cplx z) { cplx d = 1.0 - z; return 2.0 / (d * d * d); });
}

AnalyticFn fn_monomial(int n)
{
    std::vector<cplx> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs.back() = 1.0;
    return AnalyticFn::power_series("z^" + std::to_string(n), std::move(coeffs));
}

AnalyticFn target_sqrt1p()
{
    return AnalyticFn::closed_form(
        "sqrt1p", 1.0,
        [](cplx z) { return principal_sqrt(1.0 + z); },
        [](cplx z) { return 0.5 / principal_sqrt(1.0 + z); },
        [](cplx z) { cplx s = principal_sqrt(1.0 + z); return -0.25 / (s * s * s); });
}

AnalyticFn target_exp()
{
    return AnalyticFn::closed_form(
        "exp", 1.0, [](cplx z) { return std::exp(z); }, [](cplx z) { return std::exp(z); },
        [](cplx z) { return std::exp(z); });
}

AnalyticFn target_janowski(double A, double B)
{
    if (!(-1.0 <= B && B < A && A <= 1.0))
        throw parameter_error("target_janowski: need -1 <= B < A <= 1");
    AnalyticFn fn = AnalyticFn::closed_form(
        "janowski", 1.0,
        [A, B](cplx z) { return (1.0 + A * z) / (1.0 + B * z); },
        [A, B](cplx z) { cplx d = 1.0 + B * z; return (A - B) / (d * d); },
        [A, B](cplx z) { cplx d = 1.0 + B * z; return -2.0 * B * (A - B) / (d * d * d); });
    fn.with_param("A", A).with_param("B", B);
    return fn;
}

AnalyticFn target_phi_par()
{
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return AnalyticFn::closed_form(
        "phi_par", 1.0,
        [](cplx z) { return phi_par(z); },
        [pi2](cplx z) {
            if (std::abs(z) < 1e-4) {
                // series head; the closed form is 0/0 at the origin
                return (8.0 / pi2) * (1.0 + (4.0 / 3.0) * z + (23.0 / 15.0) * z * z);
            }
            const cplx s = sqrt_upper(z);
            const cplx L = principal_log((1.0 + s) / (1.0 - s));
            return (4.0 / pi2) * L / (s * (1.0 - z));
        });
}

AnalyticFn target_by_name(const std::string& name, double A, double B)
{
    if (name == "one")
        return fn_const_one();
    if (name == "sqrt1p")
        return target_sqrt1p();
    if (name == "exp")
        return target_exp();
    if (name == "janowski")
        return target_janowski(A, B);
    if (name == "phi_par")
        return target_phi_par();
    if (name == "halfplane")
        return fn_halfplane();
    throw parameter_error("unknown target function: " + name);
}

} // namespace bbsubord
