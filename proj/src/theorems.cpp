#include "bbsubord/theorems.hpp"
#include "bbsubord/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bbsubord {

namespace {

constexpr double kE = std::numbers::e;
const double kSqrt2 = std::sqrt(2.0);

bool all_ok(const std::vector<Margin>& margins)
{
    return std::all_of(margins.begin(), margins.end(), [](const Margin& m) { return m.ok(); });
}

void require_order(const BBParams& p, bool strict_lower_B)
{
    const bool lower = strict_lower_B ? p.B > -1.0 : p.B >= -1.0;
    if (!(lower && p.B < p.A && p.A <= 1.0))
        throw parameter_error(strict_lower_B ? "need -1 < B < A <= 1" : "need -1 <= B < A <= 1");
}

} // namespace

HypothesisResult t1_hypothesis(double beta, double gamma)
{
    HypothesisResult r;
    r.theorem = "t1";
    r.margins = {
        {"lower.e", beta - (-gamma / kE), false},
        {"lower.sqrt2e", beta - (-gamma * kE + kE / (1.0 - kSqrt2 * kE)), false},
        {"upper", (-kE * gamma) - beta, false},
    };
    r.satisfied = all_ok(r.margins);
    return r;
}

HypothesisResult t1_hypothesis_proof_form(double beta, double gamma)
{
    HypothesisResult r;
    r.theorem = "t1(proof form)";
    r.margins = {
        {"ebeta_gamma", kE * beta + gamma, false},
        {"lo", (gamma + beta / kE) - 1.0 / (1.0 - kSqrt2 * kE), false},
        {"hi", -(gamma + beta / kE), false},
    };
    r.satisfied = all_ok(r.margins);
    return r;
}

HypothesisResult t2_hypothesis(const BBParams& p)
{
    require_order(p, true);
    const double Dplus = p.beta * (1.0 + p.A) + p.gamma * (1.0 + p.B);
    const double Dminus = p.beta * (1.0 - p.A) + p.gamma * (1.0 - p.B);
    HypothesisResult r;
    r.theorem = "t2";
    // (i) margins after clearing the denominators (1 -/+ B)(...) which (ii)
    // makes positive; upper sign branch is the proof's phi, lower its psi.
    r.margins = {
        {"i.upper", (p.A - p.B) - (1.0 - p.A) * Dminus - kE * (1.0 - p.B) * Dminus, false},
        {"i.lower", (p.A - p.B) + (1.0 + p.A) * Dplus - kE * (1.0 + p.B) * Dplus, false},
        {"ii.upper", Dplus, true},
        {"ii.lower", Dminus, true},
    };
    r.satisfied = all_ok(r.margins);
    return r;
}

HypothesisResult t3_hypothesis(const BBParams& p)
{
    require_order(p, false);
    const double L = 1.0 + 4.0 * (kSqrt2 - 1.0) * p.beta - 2.0 * (kSqrt2 - 2.0) * p.gamma;
    const double R = -2.0 * p.A * (2.0 * p.beta + kSqrt2 * p.gamma) +
                     p.B * (1.0 + 4.0 * (kSqrt2 * p.beta + p.gamma));
    HypothesisResult r;
    r.theorem = "t3";
    r.margins = {
        {"i", L - p.B * R, false},
        {"ii", L * L - R * R, false},
    };
    r.satisfied = all_ok(r.margins);
    return r;
}

HypothesisResult t4_hypothesis(const BBParams& p)
{
    require_order(p, false);
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double e = kE, e2 = kE * kE;

    const double c1 = e2 * beta * (1.0 - B * B) +
                      e * (-B * (-A * beta + B * gamma + B) - beta + gamma + 1.0) +
                      gamma * (A * B - 1.0);
    const double c2 = (e * ((A + e - 1.0) * beta - (e * beta + 1.0) * B + 1.0) +
                       gamma * (A + e * (1.0 - B) - 1.0)) *
                      (e * (-(A - e + 1.0) * beta + B * (e * beta + 1.0) + 1.0) +
                       gamma * (-A + e * (B + 1.0) - 1.0));
    const double c3 = e * (beta * (1.0 - A * B) + B * B * (gamma - 1.0) - gamma + 1.0) +
                      e2 * gamma * (1.0 - A * B) + beta * (B * B - 1.0);
    const double c4 = (e * ((A - 1.0) * beta + (1.0 - B) * (gamma - 1.0)) +
                       e2 * (A - 1.0) * gamma + beta * (1.0 - B)) *
                      (-e * ((A + 1.0) * beta + (B + 1.0) * (1.0 - gamma)) -
                       e2 * (A + 1.0) * gamma + beta * (B + 1.0));

    HypothesisResult r;
    r.theorem = "t4";
    r.margins = {
        {"i", c1, false}, {"ii", c2, false}, {"iii", c3, false}, {"iv", c4, false}};
    r.satisfied = all_ok(r.margins);
    return r;
}

namespace {

// T5 condition (ii), as a function of k (degree 2 polynomial in k).
double t5_margin_ii(const BBParams& p, double k)
{
    const double A = p.A, B = p.B;
    const double bg = p.beta + p.gamma;
    const double G = A * p.beta + B * p.gamma;
    const double L = k + bg;
    const double lhs1 = G * (A * A * L + 4.0 * bg) -
                        2.0 * B * (A * G * L + 2.0 * bg * bg + 2.0 * G * G) +
                        B * B * G * (4.0 * bg + L);
    const double lhs2 = G * (A * A * L - 4.0 * bg) +
                        B * (-2.0 * A * G * L + 4.0 * bg * bg + 4.0 * G * G) +
                        B * B * G * (L - 4.0 * bg);
    const double rhs_inner =
        G * L * (A * A * L - 4.0 * bg) -
        2.0 * B * (A * G * L * L + 2.0 * G * G * (L - 2.0 * bg) -
                   2.0 * L * bg * (-bg + 2.0 * L)) +
        B * B * G * L * (L - 4.0 * bg);
    return lhs1 * lhs2 - 2.0 * G * (A - B) * (A - B) * rhs_inner;
}

// T5 condition (iii), linear in k.
double t5_margin_iii(const BBParams& p, double k)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double AB = p.A - p.B;
    return 2.0 * (p.B - 1.0) * (p.B - 1.0) * G * bg + 2.0 * p.B * (bg - G) * (bg - G) -
           8.0 * G * AB * AB * (bg + k);
}

// T5 condition (v), for a fixed m.
double t5_margin_v(const BBParams& p, double m)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double AB = p.A - p.B;
    const double m4 = m * m * m * m;
    return 4.0 * m4 * AB * AB * (bg + G + 1.0) * (bg + G + 1.0) -
           (p.B + 1.0) * (p.B + 1.0) * (bg + G) * (bg + G);
}

} // namespace

HypothesisResult t5_hypothesis(const BBParams& p, double k_max, int m_grid, int k_grid)
{
    require_order(p, false);
    if (!(k_max >= 1.0) || m_grid < 2 || k_grid < 2)
        throw parameter_error("t5_hypothesis: need k_max >= 1, m_grid >= 2, k_grid >= 2");

    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;

    double min_ii = std::numeric_limits<double>::infinity();
    double min_iii = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k_grid; ++i) {
        const double k = 1.0 + (k_max - 1.0) * i / (k_grid - 1);
        min_ii = std::min(min_ii, t5_margin_ii(p, k));
        min_iii = std::min(min_iii, t5_margin_iii(p, k));
    }
    double min_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_grid; ++i)
        min_v = std::min(min_v, t5_margin_v(p, static_cast<double>(i) / (m_grid - 1)));

    // leading k-behavior: (ii) is quadratic and (iii) linear in k, so the
    // scaled value at k = 1e6 settles the sign for k beyond any grid
    const double k_far = 1e6;
    const double ii_asym = t5_margin_ii(p, k_far) / (k_far * k_far);
    const double iii_asym = t5_margin_iii(p, k_far) / k_far;

    HypothesisResult r;
    r.theorem = "t5";
    r.margins = {
        {"i", p.B * G * bg, true},
        {"ii", min_ii, false},
        {"ii.asymptotic", ii_asym, false},
        {"iii", min_iii, false},
        {"iii.asymptotic", iii_asym, false},
        {"iv.a", 1.0 + bg, false},
        {"iv.b", G, false},
        {"v", min_v, false},
    };
    r.satisfied = all_ok(r.margins);
    return r;
}

HypothesisResult hypothesis(const std::string& theorem, const BBParams& p,
                            double k_max, int m_grid, int k_grid)
{
    if (theorem == "t1")
        return t1_hypothesis(p.beta, p.gamma);
    if (theorem == "t2")
        return t2_hypothesis(p);
    if (theorem == "t3")
        return t3_hypothesis(p);
    if (theorem == "t4")
        return t4_hypothesis(p);
    if (theorem == "t5")
        return t5_hypothesis(p, k_max, m_grid, k_grid);
    throw parameter_error("unknown theorem id: " + theorem);
}

// --- corollaries --------------------------------------------------------------

std::vector<std::string> corollary_ids()
{
    return {"cor_3.12", "cor_3.14", "cor_3.15", "cor_3.17", "cor_3.3", "cor_3.4",
            "bernardi_t1_i", "bernardi_t1_ii", "bernardi_t2_i", "bernardi_t2_ii",
            "bernardi_t4_i", "bernardi_t4_ii"};
}

namespace {

double need(const std::map<std::string, double>& m, const std::string& key,
            const std::string& id)
{
    auto it = m.find(key);
    if (it == m.end())
        throw parameter_error("specialize(" + id + "): missing parameter " + key);
    return it->second;
}

std::optional<double> maybe(const std::map<std::string, double>& m, const std::string& key)
{
    auto it = m.find(key);
    if (it == m.end())
        return std::nullopt;
    return it->second;
}

} // namespace

Specialization specialize(const std::string& id, const std::map<std::string, double>& fp,
                          double k_max, int m_grid, int k_grid)
{
    Specialization s;
    s.corollary = id;

    auto eval_parent = [&](const BBParams& p) {
        s.params = p;
        s.parent_result = hypothesis(s.parent, p, k_max, m_grid, k_grid);
    };

    if (id == "cor_3.12") {
        const double alpha = need(fp, "alpha", id);
        const double beta = need(fp, "beta", id);
        if (!(0.0 <= alpha && alpha < 1.0) || !(beta > 0.0))
            throw parameter_error("cor_3.12: need 0 <= alpha < 1 and beta > 0");
        s.parent = "t2";
        eval_parent({1.0 - alpha, 0.0, beta, 0.0});
        // alpha + e + 1/beta <= 1/(alpha beta), cleared by alpha*beta > 0;
        // the alpha = 0 collapse is vacuous-true in this form
        s.extra = {
            {"displayed.i", 1.0 - alpha - alpha * beta * (alpha + kE), false},
            {"displayed.ii",
             (1.0 - alpha) - beta * (2.0 - alpha) * (kE - 2.0 + alpha), false},
        };
    } else if (id == "cor_3.14") {
        const double alpha = need(fp, "alpha", id);
        const double beta = need(fp, "beta", id);
        if (!(0.0 <= alpha && alpha < 1.0))
            throw parameter_error("cor_3.14: need 0 <= alpha < 1");
        s.parent = "t3";
        eval_parent({1.0 - 2.0 * alpha, -1.0, beta, 0.0});
        s.extra = {
            {"displayed.range_lo", beta - 1.0 / (4.0 * (alpha - kSqrt2)), false},
            {"displayed.range_hi", -beta, true},
        };
    } else if (id == "cor_3.15") {
        const double alpha = need(fp, "alpha", id);
        const double beta = need(fp, "beta", id);
        if (!(0.0 <= alpha && alpha < 1.0))
            throw parameter_error("cor_3.15: need 0 <= alpha < 1");
        s.parent = "t4";
        eval_parent({1.0 - alpha, 0.0, beta, 0.0});
        s.extra = {
            {"displayed.range", beta - 1.0 / (1.0 - kE), false},
            {"displayed.i",
             (-alpha * beta + beta * kE + 1.0) * (beta * (alpha + kE - 2.0) + 1.0), false},
            {"displayed.ii",
             (beta - kE * ((2.0 - alpha) * beta + 1.0)) * (beta + kE * (-alpha * beta - 1.0)),
             false},
        };
    } else if (id == "cor_3.17") {
        const double alpha = need(fp, "alpha", id);
        const double beta = need(fp, "beta", id);
        if (!(0.5 < alpha && alpha < 1.0) || !(-1.0 <= beta && beta < 0.0))
            throw parameter_error("cor_3.17: need 1/2 < alpha < 1 and -1 <= beta < 0");
        s.parent = "t5";
        eval_parent({1.0 - 2.0 * alpha, -1.0, beta, 0.0});
        const double a2 = alpha * alpha, a3 = a2 * alpha, a4 = a3 * alpha;
        const double q1 = (2.0 * a2 + alpha - 3.0) * (2.0 * a2 + alpha - 3.0);
        const double q2 = 4.0 * a4 - 12.0 * a3 + 13.0 * a2 + 2.0 * alpha - 3.0;
        const double q3 = 4.0 * a4 - 20.0 * a3 + 17.0 * a2 + 2.0 * alpha - 3.0;
        double min_i = std::numeric_limits<double>::infinity();
        double min_ii = std::numeric_limits<double>::infinity();
        for (int i = 0; i < k_grid; ++i) {
            const double k = 1.0 + (k_max - 1.0) * i / (k_grid - 1);
            min_i = std::min(min_i,
                             -(q1 * beta * beta + q2 * k * k + 2.0 * q3 * beta * k));
            min_ii = std::min(min_ii,
                              4.0 * (alpha - 1.0) * (alpha - 1.0) * (2.0 * alpha - 1.0) *
                                      beta * (beta + k) -
                                  (a2 + 2.0 * alpha - 1.0) * beta * beta);
        }
        s.extra = {
            {"displayed.i", min_i, false},
            {"displayed.ii", min_ii, false},
        };
    } else if (id == "cor_3.3" || id == "cor_3.4") {
        const double c = need(fp, "c", id);
        const double A = need(fp, "A", id);
        const double B = need(fp, "B", id);
        if (!(c > -1.0))
            throw parameter_error(id + ": need c > -1");
        s.parent = "t3";
        const bool ratio_form = id == "cor_3.3"; // beta=1,gamma=c vs beta=0,gamma=c+1
        eval_parent({A, B, ratio_form ? 1.0 : 0.0, ratio_form ? c : c + 1.0});
        double L, R;
        if (ratio_form) {
            L = 1.0 + 4.0 * (kSqrt2 - 1.0) - 2.0 * (kSqrt2 - 2.0) * c;
            R = -2.0 * A * (2.0 + kSqrt2 * c) + B * (1.0 + 4.0 * (kSqrt2 + c));
        } else {
            L = 5.0 - 2.0 * kSqrt2 - 2.0 * (kSqrt2 - 2.0) * c;
            R = -2.0 * kSqrt2 * (c + 1.0) * A + (5.0 + 4.0 * c) * B;
        }
        s.extra = {
            {"displayed.i", L - B * R, false},
            {"displayed.ii", L * L - R * R, false},
        };
    } else if (id.rfind("bernardi_", 0) == 0) {
        const double c = need(fp, "c", id);
        if (!(c > -1.0))
            throw parameter_error(id + ": need c > -1");
        const bool ratio_form = id.size() > 2 && id.substr(id.size() - 2) != "ii";
        const double beta = ratio_form ? 1.0 : 0.0;
        const double gamma = ratio_form ? c : c + 1.0;
        if (id == "bernardi_t1_i" || id == "bernardi_t1_ii") {
            s.parent = "t1";
            eval_parent({1.0, -1.0, beta, gamma});
        } else if (id == "bernardi_t2_i" || id == "bernardi_t2_ii") {
            s.parent = "t2";
            eval_parent({need(fp, "A", id), need(fp, "B", id), beta, gamma});
        } else if (id == "bernardi_t4_i" || id == "bernardi_t4_ii") {
            s.parent = "t4";
            eval_parent({need(fp, "A", id), need(fp, "B", id), beta, gamma});
        } else {
            throw parameter_error("specialize: unknown corollary id " + id);
        }
        if (auto a = maybe(fp, "alpha"); a.has_value())
            s.note = "alpha ignored for " + id;
    } else {
        throw parameter_error("specialize: unknown corollary id " + id);
    }

    bool ok = true;
    for (const Margin& m : s.extra)
        ok = ok && m.ok();
    if (s.parent_result.has_value())
        ok = ok && s.parent_result->satisfied;
    s.satisfied = ok;
    return s;
}

// --- feasible intervals --------------------------------------------------------

namespace {

void set_free(BBParams& p, const std::string& name, double v)
{
    if (name == "A")
        p.A = v;
    else if (name == "B")
        p.B = v;
    else if (name == "beta")
        p.beta = v;
    else if (name == "gamma")
        p.gamma = v;
    else
        throw parameter_error("feasible_interval: unknown free parameter " + name);
}

} // namespace

std::vector<Interval> feasible_interval(const std::string& theorem, BBParams fixed,
                                        const std::string& free_name, double lo, double hi,
                                        int scan_points, double k_max)
{
    if (!(hi > lo) || scan_points < 3)
        throw parameter_error("feasible_interval: bad scan range");

    auto ok_at = [&](double v) -> bool {
        BBParams p = fixed;
        set_free(p, free_name, v);
        try {
            return hypothesis(theorem, p, k_max).satisfied;
        } catch (const parameter_error&) {
            return false; // ordering violations are simply infeasible points
        }
    };

    // locate each predicate flip by bisection to 1e-12
    auto refine = [&](double a, double b, bool a_ok) {
        while (b - a > 1e-12) {
            const double m = 0.5 * (a + b);
            if (ok_at(m) == a_ok)
                a = m;
            else
                b = m;
        }
        return 0.5 * (a + b);
    };

    std::vector<Interval> out;
    double prev = lo;
    bool prev_ok = ok_at(lo);
    double open_at = prev_ok ? lo : std::numeric_limits<double>::quiet_NaN();
    for (int i = 1; i < scan_points; ++i) {
        const double v = lo + (hi - lo) * i / (scan_points - 1);
        const bool v_ok = ok_at(v);
        if (v_ok != prev_ok) {
            const double edge = refine(prev, v, prev_ok);
            if (v_ok)
                open_at = edge;
            else
                out.push_back({open_at, edge});
        }
        prev = v;
        prev_ok = v_ok;
    }
    if (prev_ok)
        out.push_back({open_at, hi});
    return out;
}

} // namespace bbsubord
