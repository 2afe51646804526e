#ifndef BBSUBORD_ANALYTIC_FN_HPP
#define BBSUBORD_ANALYTIC_FN_HPP

#include "bbsubord/branches.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bbsubord {

/// Derivative by the Cauchy integral formula, trapezoid rule on a circle of
/// radius rho = min(0.05, (domain_radius - |z|)/2) around z.
cplx cauchy_deriv(const std::function<cplx(cplx)>& f, cplx z,
                  double domain_radius = 1.0, int samples = 64);

/// An analytic function on the unit disc: value plus derivative(s).
/// Closed-form derivatives are used when the kind provides them, otherwise
/// the Cauchy formula. Immutable after construction.
class AnalyticFn {
public:
    enum class Kind { ClosedForm, PowerSeries, ParametricIntegral };
    using Fn = std::function<cplx(cplx)>;

    AnalyticFn() = default;

    static AnalyticFn closed_form(std::string name, cplx at_zero,
                                  Fn eval, Fn deriv = {}, Fn deriv2 = {});
    static AnalyticFn power_series(std::string name, std::vector<cplx> coeffs,
                                   double radius = 1.0);
    static AnalyticFn parametric_integral(std::string name, cplx at_zero,
                                          Fn eval, Fn deriv = {}, Fn deriv2 = {});

    /// Throws domain_error when |z| >= domain radius (the open disc).
    cplx eval(cplx z) const;
    cplx deriv(cplx z) const;
    cplx deriv2(cplx z) const;

    bool valid() const { return static_cast<bool>(eval_); }
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    cplx at_zero() const { return at_zero_; }
    double domain_radius() const { return radius_; }
    bool has_closed_deriv() const { return static_cast<bool>(deriv_); }

    /// Power-series coefficients; empty unless kind() == PowerSeries.
    const std::vector<cplx>& series_coefficients() const { return coeffs_; }

    AnalyticFn& with_param(const std::string& key, double value);
    const std::vector<std::pair<std::string, double>>& params() const { return params_; }

private:
    Kind kind_ = Kind::ClosedForm;
    std::string name_;
    cplx at_zero_ = 0.0;
    double radius_ = 1.0;
    Fn eval_, deriv_, deriv2_;
    std::vector<cplx> coeffs_;
    std::vector<std::pair<std::string, double>> params_;
};

// --- the exemplar/target library -------------------------------------------

AnalyticFn fn_const_one();
AnalyticFn fn_one_plus_z();
AnalyticFn fn_halfplane();          // (1+z)/(1-z)
AnalyticFn fn_identity();           // f(z) = z
AnalyticFn fn_koebe_like();         // z/(1-z)
AnalyticFn fn_monomial(int n);      // z^n

AnalyticFn target_sqrt1p();         // sqrt(1+z), principal branch
AnalyticFn target_exp();            // e^z
AnalyticFn target_janowski(double A, double B);  // (1+Az)/(1+Bz)
AnalyticFn target_phi_par();        // the parabolic map

/// Lookup by name: "one", "sqrt1p", "exp", "janowski" (takes A, B), "phi_par",
/// "halfplane". Throws parameter_error for unknown names.
AnalyticFn target_by_name(const std::string& name, double A = 1.0, double B = -1.0);

} // namespace bbsubord

#endif
