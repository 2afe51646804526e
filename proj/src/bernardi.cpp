#include "bbsubord/bernardi.hpp"
#include "bbsubord/errors.hpp"
#include "bbsubord/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bbsubord {

namespace {

// Parametric kernels are integrated a bit below the module-wide 1e-11 budget
// so that finite-difference probes of the results stay well inside 1e-5.
constexpr double kKernelTol = 5e-13;

// Substitution power for endpoint-singular kernels t^{sigma-1}: t = u^m with
// even m chosen so the transformed exponent m*sigma - 1 is at least 1.
int sub_power(double sigma)
{
    if (!(sigma > 0.0))
        throw parameter_error("integrand exponent must be positive (got sigma = " +
                              std::to_string(sigma) + ")");
    int m = std::max(8, static_cast<int>(std::ceil(2.0 / sigma)));
    if (m % 2 == 1)
        ++m;
    return std::min(m, 64);
}

// Primitive of (h(u)-1)/u from 0 to z, closed for the library targets.
std::function<cplx(cplx)> log_derivative_primitive(const AnalyticFn& h)
{
    if (h.name() == "sqrt1p") {
        return [](cplx z) {
            const cplx s = principal_sqrt(1.0 + z);
            return 2.0 * s - 2.0 - 2.0 * principal_log((1.0 + s) / 2.0);
        };
    }
    if (h.name() == "exp") {
        return [](cplx z) { return chi_entire(z) + shi(z); };
    }
    if (h.name() == "janowski") {
        double A = 1.0, B = -1.0;
        for (const auto& [key, value] : h.params()) {
            if (key == "A")
                A = value;
            else if (key == "B")
                B = value;
        }
        if (B == 0.0)
            return [A](cplx z) { return A * z; };
        return [A, B](cplx z) { return (A - B) / B * principal_log(1.0 + B * z); };
    }
    return [h](cplx z) {
        if (z == cplx(0.0))
            return cplx(0.0);
        return integrate([&h, z](double u) {
                   if (u < 1e-300)
                       return z * h.deriv(0.0);
                   return (h.eval(z * u) - 1.0) / u;
               },
                         0.0, 1.0, kKernelTol)
            .value;
    };
}

} // namespace

cplx bernardi(const AnalyticFn& f, double c, cplx z)
{
    return bernardi_fn(f, c).eval(z);
}

AnalyticFn bernardi_fn(const AnalyticFn& f, double c)
{
    if (!(c > -1.0))
        throw parameter_error("bernardi: need c > -1");
    if (std::abs(f.at_zero()) > 1e-12)
        throw parameter_error("bernardi: requires f(0) = 0");

    const int m = sub_power(c + 1.0);
    const double md = m;

    // F(z) = (c+1) int_0^1 s^{c-1} f(zs) ds with s = u^m; the kernel
    // u^{mc-1} f(z u^m) vanishes like u^{m(c+1)-1} at 0
    auto F = [f, c, md](cplx z) {
        return (c + 1.0) * md *
               integrate([&f, c, md, z](double u) {
                   return std::pow(u, md * c - 1.0) * f.eval(z * std::pow(u, md));
               },
                         0.0, 1.0, kKernelTol)
                   .value;
    };
    auto Fp = [f, c, md](cplx z) {
        return (c + 1.0) * md *
               integrate([&f, c, md, z](double u) {
                   return std::pow(u, md * (c + 1.0) - 1.0) * f.deriv(z * std::pow(u, md));
               },
                         0.0, 1.0, kKernelTol)
                   .value;
    };
    auto Fpp = [f, c, md](cplx z) {
        return (c + 1.0) * md *
               integrate([&f, c, md, z](double u) {
                   return std::pow(u, md * (c + 2.0) - 1.0) * f.deriv2(z * std::pow(u, md));
               },
                         0.0, 1.0, kKernelTol)
                   .value;
    };

    AnalyticFn out = AnalyticFn::parametric_integral("bernardi[" + f.name() + "]", 0.0,
                                                     F, Fp, Fpp);
    out.with_param("c", c);
    return out;
}

namespace {

AnalyticFn derivative_fn(const AnalyticFn& f)
{
    AnalyticFn g = f;
    return AnalyticFn::parametric_integral(
        f.name() + "'", f.deriv(0.0), [g](cplx z) { return g.deriv(z); },
        [g](cplx z) { return g.deriv2(z); });
}

} // namespace

AnalyticFn bernardi_deriv_fn(const AnalyticFn& f, double c)
{
    return derivative_fn(bernardi_fn(f, c));
}

cplx star_ratio(const AnalyticFn& f, cplx z)
{
    if (z == cplx(0.0))
        return 1.0;
    const cplx fz = f.eval(z);
    if (std::abs(fz) < 1e-14 * std::abs(z))
        throw pole_error("star_ratio: zero of f inside the disc", z, std::abs(fz));
    return z * f.deriv(z) / fz;
}

AnalyticFn ratio_fn(const AnalyticFn& f)
{
    AnalyticFn g = f;
    auto eval = [g](cplx z) { return star_ratio(g, z); };
    auto deriv = [g, eval](cplx z) -> cplx {
        if (std::abs(z) < 1e-3)
            return cauchy_deriv(eval, z, g.domain_radius());
        const cplx fz = g.eval(z);
        if (std::abs(fz) < 1e-14 * std::abs(z))
            throw pole_error("ratio_fn: zero of f inside the disc", z, std::abs(fz));
        const cplx r = g.deriv(z) / fz;
        return r + z * g.deriv2(z) / fz - z * r * r;
    };
    AnalyticFn out = AnalyticFn::closed_form(f.name() + ".star_ratio", 1.0, eval, deriv);
    return out;
}

AnalyticFn make_starlike_from_target(const AnalyticFn& phi)
{
    if (std::abs(phi.at_zero() - 1.0) > 1e-12)
        throw parameter_error("make_starlike_from_target: need phi(0) = 1");
    auto psi = log_derivative_primitive(phi);
    const AnalyticFn ph = phi;
    const cplx phi1 = phi.deriv(0.0);

    auto eval = [psi](cplx z) { return z * std::exp(psi(z)); };
    auto deriv = [psi, ph](cplx z) { return std::exp(psi(z)) * ph.eval(z); };
    auto deriv2 = [psi, ph, phi1](cplx z) -> cplx {
        const cplx e = std::exp(psi(z));
        if (std::abs(z) < 1e-6)
            return e * (phi1 + ph.deriv(z)); // limit 2 phi'(0) at the origin
        const cplx p = ph.eval(z);
        return e * ((p * p - p) / z + ph.deriv(z));
    };
    AnalyticFn out = AnalyticFn::closed_form("starlike[" + phi.name() + "]", 0.0, eval,
                                             deriv, deriv2);
    for (const auto& [key, value] : phi.params())
        out.with_param(key, value);
    return out;
}

AnalyticFn antiderivative_fn(const AnalyticFn& target)
{
    const AnalyticFn t = target;
    AnalyticFn::Fn eval;
    if (target.name() == "sqrt1p") {
        eval = [](cplx z) {
            // (2/3)(s^3 - 1) with s^3 - 1 = z (s^2 + s + 1)/(s + 1), stable at 0
            const cplx s = principal_sqrt(1.0 + z);
            return (2.0 / 3.0) * z * (s * s + s + 1.0) / (s + 1.0);
        };
    } else if (target.name() == "exp") {
        eval = [](cplx z) { return expm1c(z); };
    } else if (target.name() == "janowski") {
        double A = 1.0, B = -1.0;
        for (const auto& [key, value] : target.params()) {
            if (key == "A")
                A = value;
            else if (key == "B")
                B = value;
        }
        if (B == 0.0)
            eval = [A](cplx z) { return z + 0.5 * A * z * z; };
        else
            eval = [A, B](cplx z) {
                return (A / B) * z + (1.0 - A / B) * log1pc(B * z) / B;
            };
    } else {
        eval = [t](cplx z) {
            if (z == cplx(0.0))
                return cplx(0.0);
            return z * integrate([&t, z](double s) { return t.eval(z * s); }, 0.0, 1.0,
                                 kKernelTol)
                       .value;
        };
    }
    AnalyticFn out = AnalyticFn::closed_form(
        "antideriv[" + target.name() + "]", 0.0, std::move(eval),
        [t](cplx z) { return t.eval(z); }, [t](cplx z) { return t.deriv(z); });
    for (const auto& [key, value] : target.params())
        out.with_param(key, value);
    return out;
}

AnalyticFn solve_bb(const AnalyticFn& h, double beta, double gamma)
{
    if (beta == 0.0)
        throw parameter_error("solve_bb: beta = 0 has no Briot-Bouquet kernel");
    if (std::abs(h.at_zero() - 1.0) > 1e-12)
        throw parameter_error("solve_bb: need h(0) = 1");
    const double bg = beta + gamma;
    if (!(bg > 0.0))
        throw parameter_error(
            "solve_bb: open-door solvability needs beta + gamma > 0 (got " +
            std::to_string(bg) + ")");

    const int m = sub_power(bg);
    const double md = m;
    auto Phi = log_derivative_primitive(h);
    const AnalyticFn hh = h;

    // w(z) = int_0^1 t^{beta+gamma-1} exp(beta (Phi(tz) - Phi(z))) dt
    auto w_of = [Phi, beta, bg, md](cplx z) {
        const cplx phiz = Phi(z);
        return md * integrate([&, z, phiz](double u) {
                        const double t = std::pow(u, md);
                        return std::pow(u, md * bg - 1.0) *
                               std::exp(beta * (Phi(t * z) - phiz));
                    },
                              0.0, 1.0, kKernelTol)
                        .value;
    };
    auto w_deriv = [Phi, hh, beta, bg, md](cplx z) {
        const cplx phiz = Phi(z);
        const cplx hz = hh.eval(z);
        return md * integrate([&, z, phiz, hz](double u) {
                        const double t = std::pow(u, md);
                        const cplx R = std::exp(beta * (Phi(t * z) - phiz));
                        return std::pow(u, md * bg - 1.0) * R * beta *
                               (hh.eval(t * z) - hz) / z;
                    },
                              0.0, 1.0, kKernelTol)
                        .value;
    };

    auto eval = [w_of, beta, gamma](cplx z) -> cplx {
        const cplx w = w_of(z);
        if (std::abs(w) < 1e-14)
            throw pole_error("solve_bb: kernel integral vanished", z, std::abs(w));
        return (1.0 / beta) * (1.0 / w - gamma);
    };
    auto deriv = [w_of, w_deriv, eval, beta](cplx z) -> cplx {
        if (std::abs(z) < 1e-4)
            return cauchy_deriv(eval, z, 1.0);
        const cplx w = w_of(z);
        if (std::abs(w) < 1e-14)
            throw pole_error("solve_bb: kernel integral vanished", z, std::abs(w));
        return -(1.0 / beta) * w_deriv(z) / (w * w);
    };

    AnalyticFn out = AnalyticFn::parametric_integral("bb_solution[" + h.name() + "]", 1.0,
                                                     eval, deriv);
    out.with_param("beta", beta).with_param("gamma", gamma);
    return out;
}

AnalyticFn example_p1_fn(double gamma)
{
    AnalyticFn out = solve_bb(target_sqrt1p(), 1.0, gamma);
    return out;
}

AnalyticFn example_p2_fn(double gamma)
{
    AnalyticFn out = solve_bb(target_exp(), 1.0, gamma);
    return out;
}

cplx example_p1(double gamma, cplx z) { return example_p1_fn(gamma).eval(z); }
cplx example_p2(double gamma, cplx z) { return example_p2_fn(gamma).eval(z); }

cplx open_door(cplx d, cplx f, cplx z)
{
    if (std::abs(z - 1.0) < 1e-14 || std::abs(z + 1.0) < 1e-14)
        throw pole_error("open_door: pole at z = +/-1", z, std::min(std::abs(z - 1.0),
                                                                    std::abs(z + 1.0)));
    return d * (1.0 + z) / (1.0 - z) + 2.0 * f * z / (1.0 - z * z);
}

// --- corpus -------------------------------------------------------------------

TransformMode parse_mode(const std::string& text)
{
    if (text == "ratio")
        return TransformMode::Ratio;
    if (text == "derivative")
        return TransformMode::Derivative;
    if (text == "raw")
        return TransformMode::Raw;
    throw parameter_error("unknown transform mode: " + text);
}

std::string mode_name(TransformMode mode)
{
    switch (mode) {
    case TransformMode::Ratio: return "ratio";
    case TransformMode::Derivative: return "derivative";
    case TransformMode::Raw: return "raw";
    }
    return "?";
}

std::string corpus_manifest()
{
    // name kind=... mode=... claim=... ; base= refers to an earlier entry
    return R"(# exemplar corpus: name kind=<builder> [params] mode=<ratio|derivative|raw> claim=<region> note=<provenance>
name=identity kind=builtin mode=ratio claim=expdisc note=smoke_entry
name=koebe_like kind=builtin mode=ratio claim=janowski:1:-1 note=smoke_entry
name=f_L kind=starlike target=sqrt1p mode=ratio claim=lemniscate note=lemniscate_starlike_exemplar
name=f_e kind=starlike target=exp mode=ratio claim=expdisc note=exp_starlike_exemplar
name=f_janowski kind=starlike target=janowski A=0.3 B=-0.1 mode=ratio claim=janowski note=janowski_starlike_exemplar
name=f_janowski_b0 kind=starlike target=janowski A=0.3 B=0 mode=ratio claim=janowski note=janowski_starlike_exemplar
name=f_par kind=starlike target=phi_par mode=ratio claim=parabola note=parabolic_starlike_exemplar
name=example_p1 kind=bb_solution target=sqrt1p beta=1 gamma=-0.5 mode=raw claim=expdisc note=sqrt_to_exp_example
name=example_p2 kind=bb_solution target=exp beta=1 gamma=-0.25 mode=raw claim=janowski:0.5:-0.5 note=exp_to_janowski_example
name=p_312 kind=bb_solution target=exp beta=0.4 gamma=0 mode=raw claim=janowski:0.5:-1 note=order_alpha_harness
name=p_315 kind=bb_solution target=janowski A=0.9 B=0 beta=0.35 gamma=0 mode=raw claim=expdisc note=exp_class_harness
name=p_314 kind=perturbed eps=0.1 mode=raw claim=lemniscate note=lemniscate_harness_probe
name=p_317 kind=perturbed eps=0.05 mode=raw claim=janowski:-0.5:-1 note=parabolic_harness_probe
name=bernardi_fL kind=bernardi base=f_L c=-0.5 mode=ratio claim=expdisc note=operator_on_lemniscate_starlike
name=bernardi_fJ kind=bernardi base=f_janowski c=1 mode=ratio claim=lemniscate note=operator_on_janowski_starlike
name=bernardi_fe kind=bernardi base=f_e c=-0.25 mode=ratio claim=janowski:0.5:-0.5 note=operator_on_exp_starlike
name=bernardi_fJ_e kind=bernardi base=f_janowski_b0 c=0 mode=ratio claim=expdisc note=operator_on_janowski_starlike
name=bernardi_sqrt_prime kind=bernardi_deriv target=sqrt1p c=-0.5 mode=derivative claim=expdisc note=derivative_mode_probe_empty_range
name=bernardi_exp_prime kind=bernardi_deriv target=exp c=-0.9 mode=derivative claim=janowski:0.5:-0.5 note=derivative_mode_harness
name=bernardi_jan_prime kind=bernardi_deriv target=janowski A=0.5 B=0 c=-0.9 mode=derivative claim=expdisc note=derivative_mode_harness
name=bernardi_jan_prime_lem kind=bernardi_deriv target=janowski A=0.5 B=0 c=0 mode=derivative claim=lemniscate note=derivative_mode_harness
)";
}

namespace {

using KV = std::map<std::string, std::string>;

KV parse_line(const std::string& line)
{
    KV kv;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw parameter_error("corpus manifest: expected key=value, got '" + token + "'");
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return kv;
}

double kv_num(const KV& kv, const std::string& key, double fallback)
{
    auto it = kv.find(key);
    return it == kv.end() ? fallback : std::stod(it->second);
}

std::string kv_str(const KV& kv, const std::string& key)
{
    auto it = kv.find(key);
    if (it == kv.end())
        throw parameter_error("corpus manifest: missing key " + key);
    return it->second;
}

CorpusEntry build_entry(const KV& kv, const std::vector<CorpusEntry>& earlier)
{
    CorpusEntry e;
    e.name = kv_str(kv, "name");
    const std::string kind = kv_str(kv, "kind");
    e.mode = parse_mode(kv_str(kv, "mode"));
    if (auto it = kv.find("note"); it != kv.end())
        e.note = it->second;
    const double A = kv_num(kv, "A", 1.0);
    const double B = kv_num(kv, "B", -1.0);

    if (kind == "builtin") {
        if (e.name == "identity")
            e.f = fn_identity();
        else if (e.name == "koebe_like")
            e.f = fn_koebe_like();
        else
            throw parameter_error("corpus manifest: no builtin named " + e.name);
    } else if (kind == "starlike") {
        e.f = make_starlike_from_target(target_by_name(kv_str(kv, "target"), A, B));
    } else if (kind == "bb_solution") {
        e.f = solve_bb(target_by_name(kv_str(kv, "target"), A, B),
                       kv_num(kv, "beta", 1.0), kv_num(kv, "gamma", 0.0));
    } else if (kind == "perturbed") {
        const double eps = kv_num(kv, "eps", 0.1);
        e.f = AnalyticFn::closed_form(
            "perturbed", 1.0,
            [eps](cplx z) { return (1.0 + 2.0 * eps * z) / (1.0 + eps * z); },
            [eps](cplx z) { cplx d = 1.0 + eps * z; return eps / (d * d); },
            [eps](cplx z) { cplx d = 1.0 + eps * z; return -2.0 * eps * eps / (d * d * d); });
        e.f.with_param("eps", eps);
    } else if (kind == "bernardi") {
        const std::string base = kv_str(kv, "base");
        auto it = std::find_if(earlier.begin(), earlier.end(),
                               [&base](const CorpusEntry& c) { return c.name == base; });
        if (it == earlier.end())
            throw parameter_error("corpus manifest: base entry not yet defined: " + base);
        e.f = bernardi_fn(it->f, kv_num(kv, "c", 0.0));
    } else if (kind == "bernardi_deriv") {
        e.f = bernardi_fn(antiderivative_fn(target_by_name(kv_str(kv, "target"), A, B)),
                          kv_num(kv, "c", 0.0));
    } else {
        throw parameter_error("corpus manifest: unknown kind " + kind);
    }

    const std::string claim = kv_str(kv, "claim");
    e.claimed = claim == "janowski" ? Region::janowski(A, B) : parse_region(claim);
    return e;
}

std::vector<KV> manifest_table()
{
    std::istringstream is(corpus_manifest());
    std::vector<KV> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        rows.push_back(parse_line(line));
    }
    return rows;
}

} // namespace

std::vector<CorpusEntry> parse_manifest(std::istream& in)
{
    std::vector<CorpusEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        entries.push_back(build_entry(parse_line(line), entries));
    }
    return entries;
}

std::vector<CorpusEntry> builtin_corpus()
{
    std::istringstream is(corpus_manifest());
    return parse_manifest(is);
}

CorpusEntry corpus_entry(const std::string& name, const std::map<std::string, double>& overrides)
{
    std::vector<CorpusEntry> built;
    for (const KV& row : manifest_table()) {
        KV kv = row;
        const bool wanted = kv.at("name") == name;
        if (wanted) {
            for (const auto& [key, value] : overrides) {
                std::ostringstream os;
                os.precision(17);
                os << value;
                kv[key] = os.str();
            }
        }
        CorpusEntry e = build_entry(kv, built);
        if (wanted)
            return e;
        built.push_back(std::move(e));
    }
    throw parameter_error("corpus_entry: no entry named " + name);
}

SubordReport class_membership(const CorpusEntry& entry, double r_max, int n_radii,
                              int n_samples, double tol)
{
    AnalyticFn tested;
    switch (entry.mode) {
    case TransformMode::Raw:
        tested = entry.f;
        break;
    case TransformMode::Ratio:
        tested = ratio_fn(entry.f);
        break;
    case TransformMode::Derivative:
        tested = derivative_fn(entry.f);
        break;
    }
    return is_subordinate(tested, entry.claimed, r_max, n_radii, n_samples, tol);
}

} // namespace bbsubord
