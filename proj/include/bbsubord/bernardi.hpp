#ifndef BBSUBORD_BERNARDI_HPP
#define BBSUBORD_BERNARDI_HPP

#include "bbsubord/analytic_fn.hpp"
#include "bbsubord/regions.hpp"
#include "bbsubord/subordination.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bbsubord {

/// F(z) = (c+1) integral_0^1 s^{c-1} f(zs) ds, c > -1, f(0) = 0.
cplx bernardi(const AnalyticFn& f, double c, cplx z);

/// F as a function object; F' is differentiated under the integral sign.
AnalyticFn bernardi_fn(const AnalyticFn& f, double c);

/// F' as a function object (for the derivative transform mode); its own
/// derivative F'' is also taken under the integral sign.
AnalyticFn bernardi_deriv_fn(const AnalyticFn& f, double c);

/// z f'(z)/f(z); returns the limit 1 at z = 0 for normalized f. A zero of f
/// inside the punctured disc raises pole_error.
cplx star_ratio(const AnalyticFn& f, cplx z);

/// z f'/f packaged as an AnalyticFn with a closed-form derivative.
AnalyticFn ratio_fn(const AnalyticFn& f);

/// The exemplar with z f'/f = phi exactly: f(z) = z exp(int_0^z (phi(u)-1)/u du).
AnalyticFn make_starlike_from_target(const AnalyticFn& phi);

/// f with f' = target exactly and f(0) = 0 (closed antiderivatives for the
/// library targets).
AnalyticFn antiderivative_fn(const AnalyticFn& target);

/// The Briot-Bouquet solution p with p + z p'/(beta p + gamma) = h and
/// p(0) = 1, via p = (1/beta)(1/w - gamma),
/// w(z) = integral_0^1 t^{beta+gamma-1} exp(beta (Phi(tz) - Phi(z))) dt,
/// Phi(z) = integral_0^z (h(u)-1)/u du. Requires beta != 0 and
/// beta + gamma > 0 (the open-door solvability constraint at h(0) = 1).
AnalyticFn solve_bb(const AnalyticFn& h, double beta, double gamma);

/// The two exemplar solutions: h = sqrt(1+z) (gamma in the T1 feasible range)
/// and h = e^z with Chi/Shi in the kernel (gamma in the T2 feasible range).
/// Out-of-range gamma still evaluates (sharpness probing).
cplx example_p1(double gamma, cplx z);
cplx example_p2(double gamma, cplx z);
AnalyticFn example_p1_fn(double gamma);
AnalyticFn example_p2_fn(double gamma);

/// Open door mapping R_{d,f}(z) = d(1+z)/(1-z) + 2 f z/(1-z^2).
cplx open_door(cplx d, cplx f, cplx z);

enum class TransformMode { Ratio, Derivative, Raw };
TransformMode parse_mode(const std::string& text);
std::string mode_name(TransformMode mode);

/// An exemplar analytic function plus the class-membership claim it carries.
struct CorpusEntry {
    std::string name;
    AnalyticFn f;
    TransformMode mode = TransformMode::Raw;
    Region claimed;
    std::string note; // which result it instantiates
};

/// The built-in corpus (one instantiation per corollary plus smoke entries).
std::vector<CorpusEntry> builtin_corpus();

/// Rebuild a built-in entry with overridden parameters (gamma, c, A, B, eps,
/// beta as applicable). Unknown names throw parameter_error.
CorpusEntry corpus_entry(const std::string& name,
                         const std::map<std::string, double>& overrides = {});

/// Applies the entry's transform mode and runs the containment test against
/// its claimed region.
SubordReport class_membership(const CorpusEntry& entry, double r_max, int n_radii = 12,
                              int n_samples = 1024, double tol = 1e-9);

/// Text-configuration form of the corpus (one entry per line, key=value).
std::string corpus_manifest();
std::vector<CorpusEntry> parse_manifest(std::istream& in);

} // namespace bbsubord

#endif
