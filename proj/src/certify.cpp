#include "bbsubord/certify.hpp"
#include "bbsubord/branches.hpp"
#include "bbsubord/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace bbsubord {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

double sq(double x) { return x * x; }
double norm2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

} // namespace

// --- T1: lemniscate membership of psi = E + k e^{it} E / (beta E + gamma) ----

FG gap_t1_fg(double t, double k, double beta, double gamma)
{
    const cplx u = std::polar(1.0, t);
    const cplx E = std::exp(u);
    const cplx D = beta * E + gamma;
    if (std::abs(D) <= kPoleTol)
        throw pole_error("gap_t1: beta e^{e^{it}} + gamma vanished", u, std::abs(D));
    const cplx N = E * (D + k * u); // = D * psi
    const cplx w = N * N - D * D;
    FG r;
    r.f = norm2(w);        // |psi^2 - 1|^2 |D|^4
    r.g = sq(norm2(D));    // |D|^4
    return r;
}

double gap_t1(double t, double k, double beta, double gamma)
{
    return gap_t1_fg(t, k, beta, gamma).h();
}

FG gap_t1_expanded(double t, double k, double beta, double gamma)
{
    const double ct = std::cos(t), st = std::sin(t);
    const double ec = std::exp(ct);
    const double cs = std::cos(st), ss = std::sin(st);
    const double c2s = std::cos(2.0 * st), s2s = std::sin(2.0 * st);
    const double a = gamma + k * ct + beta * ec * cs;
    const double b = k * st + beta * ss * ec;
    const double d = gamma + beta * ec * cs;

    const double br1 = ec * ec * c2s * (a * a - b * b) - 2.0 * s2s * ec * ec * b * a +
                       beta * beta * ss * ss * ec * ec - d * d;
    const double br2 = 2.0 * ec * ec * c2s * b * a + s2s * ec * ec * (a * a - b * b) -
                       2.0 * beta * ss * ec * d;
    FG r;
    r.f = br1 * br1 + br2 * br2;
    r.g = sq(beta * beta * ss * ss * ec * ec + d * d);
    return r;
}

// --- T2: exp-disc membership of P(z0) from the Janowski boundary -------------

double gap_t2(double t, double k, const BBParams& p)
{
    const cplx u = std::polar(1.0, t);
    const double G = p.A * p.beta + p.B * p.gamma;
    const cplx den1 = 1.0 + p.B * u;
    const cplx den2 = (p.beta + p.gamma) + G * u;
    if (std::abs(den1) <= kPoleTol)
        throw pole_error("gap_t2: 1 + B e^{it} vanished", u, std::abs(den1));
    if (std::abs(den2) <= kPoleTol)
        throw pole_error("gap_t2: beta + gamma + G e^{it} vanished", u, std::abs(den2));
    const cplx P = (k * u * (p.A - p.B) + (1.0 + p.A * u) * den2) / (den1 * den2);
    const double m2 = norm2(P);
    if (m2 <= kPoleTol * kPoleTol)
        throw pole_error("gap_t2: P(z0) vanished (log singularity)", u, std::sqrt(m2));
    const double arg = std::arg(P);
    const double lg = std::log(m2); // = log(u^2 + v^2)
    return 4.0 * arg * arg + lg * lg - 4.0;
}

cplx t2_candidate_expanded(double t, double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double bg = beta + gamma;
    const double G = A * beta + B * gamma;
    const double ct = std::cos(t), st = std::sin(t), c2t = std::cos(2.0 * t);
    const double den = (B * B + 2.0 * B * ct + 1.0) * (bg * bg + G * G + 2.0 * G * bg * ct);
    const double u =
        (G * (A + B) * bg * c2t +
         ct * (A * (B * G * (2.0 * bg + k) + G * G + bg * (bg + k)) - B * B * G * k +
               2.0 * G * bg + B * (G * G - bg * (-bg + k))) +
         bg * (A * B * (bg + k) + beta - B * B * k + gamma) + G * G * (A * B + 1.0) +
         G * (A * (bg + k) + B * (bg - k))) /
        den;
    const double v = (A - B) * st *
                     (-B * G * k + G * G + 2.0 * G * bg * ct + bg * (bg + k)) / den;
    return cplx(u, v);
}

// --- T3: Janowski membership of P(z0) from the lemniscate boundary ------------
// Cleared form: f = |N_P - D_P|^2, g = |A D_P - B N_P|^2 with
// N_P = k e^{it} + 2 (1+e^{it})(gamma + beta s), D_P = 2 s (gamma + beta s),
// s = sqrt(1+e^{it}). The t = pi branch point is removable here.

FG gap_t3_fg(double t, double k, const BBParams& p)
{
    cplx u = std::polar(1.0, t);
    if (std::abs(u + 1.0) < 1e-15)
        u = -1.0; // exact branch-point limit at t = +/-pi
    const cplx s = principal_sqrt(1.0 + u);
    const cplx gbs = p.gamma + p.beta * s;
    const cplx NP = k * u + 2.0 * (1.0 + u) * gbs;
    const cplx DP = 2.0 * s * gbs;
    FG r;
    r.f = norm2(NP - DP);
    r.g = norm2(p.A * DP - p.B * NP);
    return r;
}

double gap_t3(double t, double k, const BBParams& p) { return gap_t3_fg(t, k, p).h(); }

FG gap_t3_expanded(double t, double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double ct = std::cos(t), st = std::sin(t);
    const bool at_cut = std::abs(1.0 + std::polar(1.0, t)) < 1e-15;
    const double root = at_cut ? 0.0 : std::sqrt(std::max(0.0, 2.0 * std::cos(0.5 * t)));
    const double half_arg = at_cut ? 0.0 : 0.5 * std::arg(1.0 + std::polar(1.0, t));
    const double C = std::cos(half_arg) * root; // Re sqrt(1+e^{it})
    const double S = std::sin(half_arg) * root; // Im sqrt(1+e^{it})
    const double ch2 = sq(std::cos(0.5 * t));

    const double f1 = (2.0 * beta * ct + 2.0 * (beta - gamma)) * S +
                      st * (k + 2.0 * (gamma + beta * (-1.0 + C)));
    const double f2 = -ct * (k + 2.0 * (gamma + beta * (-1.0 + C))) + 2.0 * beta * st * S +
                      2.0 * (beta - gamma) * (1.0 - C);
    // the B factors on the 2Bgamma and 2Bbeta*C terms below are forced by
    // g = |A D_P - B N_P|^2 together with g(pi) = B^2 k^2
    const double g1 = -2.0 * A * (beta * st + gamma * S) + 4.0 * B * beta * ch2 * S +
                      B * st * (k + 2.0 * gamma + 2.0 * beta * C);
    const double g2 = -4.0 * A * beta * ch2 + B * (k + 2.0 * gamma) * ct + 2.0 * B * gamma -
                      2.0 * B * beta * st * S +
                      2.0 * (-A * gamma + B * beta * ct + B * beta) * C;
    FG r;
    r.f = f1 * f1 + f2 * f2;
    r.g = g1 * g1 + g2 * g2;
    return r;
}

// --- T4: Janowski membership of psi from the exp boundary --------------------

FG gap_t4_fg(double t, double k, const BBParams& p)
{
    const cplx u = std::polar(1.0, t);
    const cplx E = std::exp(u);
    const cplx D = p.beta * E + p.gamma;
    if (std::abs(D) <= kPoleTol)
        throw pole_error("gap_t4: beta e^{e^{it}} + gamma vanished", u, std::abs(D));
    const cplx N = E * (D + k * u) - D;
    const cplx M = p.A * D - p.B * E * (D + k * u);
    FG r;
    r.f = norm2(N);
    r.g = norm2(M);
    return r;
}

double gap_t4(double t, double k, const BBParams& p) { return gap_t4_fg(t, k, p).h(); }

FG gap_t4_expanded(double t, double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double ct = std::cos(t), st = std::sin(t);
    const double ss = std::sin(st), cs = std::cos(st);
    const double e1 = std::exp(ct);
    const double e2 = e1 * e1, e3 = e2 * e1, e4 = e2 * e2;

    FG r;
    r.f = e3 * (2.0 * beta * k * st * ss + 2.0 * beta * k * ct * cs -
                2.0 * beta * beta * cs + 2.0 * beta * gamma * cs) +
          e2 * (sq(beta - gamma) + k * k - 2.0 * beta * k * ct + 2.0 * gamma * k * ct +
                2.0 * beta * gamma * ss * ss - 2.0 * beta * gamma * cs * cs) +
          e1 * (2.0 * gamma * k * st * ss - 2.0 * gamma * k * ct * cs +
                2.0 * beta * gamma * cs - 2.0 * gamma * gamma * cs) +
          beta * beta * e4 + gamma * gamma;
    r.g = A * A * gamma * gamma + beta * beta * B * B * e4 +
          2.0 * beta * B * e3 *
              ((B * gamma - A * beta) * cs + B * k * std::cos(t - st)) +
          e2 * (B * (B * (gamma * gamma + k * k) - 2.0 * A * beta * gamma) +
                2.0 * B * (B * gamma - A * beta) * k * ct -
                2.0 * A * B * beta * gamma * std::cos(2.0 * st) + A * A * beta * beta) +
          2.0 * A * gamma * e1 * ((A * beta - B * gamma) * cs - B * k * std::cos(t + st));
    return r;
}

// --- T5: the parabolic-boundary gap pair --------------------------------------

double t5_F(double x, double k, const BBParams& p)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double L = k + bg;
    return 4.0 * (1.0 + p.B * p.B + 2.0 * p.B * x) * (bg * bg + G * G + 2.0 * bg * G * x) -
           sq(p.A - p.B) * (L * L + G * G + 2.0 * L * G * x);
}

double t5_H(double x, double k, double m, const BBParams& p)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double L = k + bg;
    const double m4 = m * m * m * m;
    return 4.0 * sq(p.A - p.B) * m4 * (L * L + G * G + 2.0 * L * G * x) -
           (1.0 + p.B * p.B + 2.0 * p.B * x) * (bg * bg + G * G + 2.0 * bg * G * x);
}

std::pair<double, double> gap_t5(double t, double k, double m, const BBParams& p)
{
    const double x = std::cos(t);
    return {t5_F(x, k, p), t5_H(x, k, m, p)};
}

double t5_x0(double k, const BBParams& p)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double L = k + bg;
    const double den = 16.0 * p.B * G * bg;
    if (den == 0.0)
        throw parameter_error("t5_x0: BG(beta+gamma) = 0, vertex undefined");
    const double num = G * (p.A * p.A * L - 4.0 * bg) -
                       2.0 * p.B * (p.A * G * L + 2.0 * bg * bg + 2.0 * G * G) +
                       p.B * p.B * G * (L - 4.0 * bg);
    return num / den;
}

double t5_F_at_x0_closed(double k, const BBParams& p)
{
    const double A = p.A, B = p.B;
    const double bg = p.beta + p.gamma;
    const double G = A * p.beta + B * p.gamma;
    const double L = k + bg;
    const double den = 16.0 * B * G * bg;
    if (den == 0.0)
        throw parameter_error("t5_F_at_x0_closed: BG(beta+gamma) = 0");
    const double p1 = G * (A * A * L + 4.0 * bg) -
                      2.0 * B * (A * G * L + 2.0 * bg * bg + 2.0 * G * G) +
                      B * B * G * (4.0 * bg + L);
    const double p2 = G * (A * A * L - 4.0 * bg) + B * B * G * (L - 4.0 * bg) +
                      B * (-2.0 * A * G * L + 4.0 * bg * bg + 4.0 * G * G);
    const double p3 = G * L * (A * A * L - 4.0 * bg) + B * B * G * L * (L - 4.0 * bg) -
                      2.0 * B * (A * G * L * L + 2.0 * G * G * (L - 2.0 * bg) -
                                 2.0 * L * bg * (-bg + 2.0 * L));
    return (p1 * p2 - 2.0 * G * sq(A - B) * p3) / den;
}

double t5_Fpp(const BBParams& p)
{
    return 32.0 * p.B * (p.A * p.beta + p.B * p.gamma) * (p.beta + p.gamma);
}

double t5_psik(double k, double m, const BBParams& p)
{
    const double bg = p.beta + p.gamma;
    const double G = p.A * p.beta + p.B * p.gamma;
    const double m4 = m * m * m * m;
    return 4.0 * m4 * sq(p.A - p.B) * sq(bg + G + k) - sq(p.B + 1.0) * sq(bg + G);
}

// --- endpoint closed forms -----------------------------------------------------

double t1_h0(double k, double beta, double gamma)
{
    const double d = kE * beta + gamma;
    return sq(kE * kE * sq(kE * beta + gamma + k) - d * d) - sq(d * d);
}

double t1_hpi(double k, double beta, double gamma)
{
    const double d = beta / kE + gamma;
    return sq(sq((d - k) / kE) - d * d) - sq(d * d);
}

double t2_psi(double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double num = A * A * beta + A * (2.0 * beta + B * gamma + gamma + k) + beta +
                       B * (gamma - k) + gamma;
    const double den = (1.0 + B) * (beta * (1.0 + A) + gamma * (1.0 + B));
    return num / den;
}

double t2_phi(double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double num = A * A * beta - 2.0 * A * beta + (A - 1.0) * (B - 1.0) * gamma -
                       A * k + beta + B * k;
    const double den = (B - 1.0) * (-A * beta + beta - B * gamma + gamma);
    return num / den;
}

namespace {

double arg_log_form(double value)
{
    // -4 + 4 arg(v)^2 + (log v^2)^2 for a real v
    const double arg = value >= 0.0 ? 0.0 : kPi;
    const double lg = std::log(value * value);
    return -4.0 + 4.0 * arg * arg + lg * lg;
}

} // namespace

double t2_f0(double k, const BBParams& p) { return arg_log_form(t2_psi(k, p)); }

double t2_fpi(double k, const BBParams& p)
{
    const double phi = t2_phi(k, p);
    const double arg = -phi >= 0.0 ? 0.0 : kPi; // arg(-phi)
    const double lg = std::log(phi * phi);
    return -4.0 + 4.0 * arg * arg + lg * lg;
}

double t3_S(double k, const BBParams& p)
{
    const double kSqrt2 = std::sqrt(2.0);
    const double first = 4.0 * (kSqrt2 - 1.0) * p.beta - 2.0 * (kSqrt2 - 2.0) * p.gamma + k;
    const double second = p.B * (4.0 * (kSqrt2 * p.beta + p.gamma) + k) -
                          2.0 * p.A * (2.0 * p.beta + kSqrt2 * p.gamma);
    return first * first - second * second;
}

double t3_hpi(double k, const BBParams& p) { return (1.0 - p.B * p.B) * k * k; }

double t4_phi(double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double e2 = kE * kE, e3 = e2 * kE, e4 = e2 * e2;
    return e2 * ((1.0 - A * A) * beta * beta +
                 2.0 * k * (beta * (A * B - 1.0) + (1.0 - B * B) * gamma) +
                 4.0 * beta * gamma * (A * B - 1.0) +
                 (1.0 - B * B) * (gamma * gamma + k * k)) +
           2.0 * kE * gamma * (-A * A * beta + (A * B - 1.0) * (gamma + k) + beta) +
           2.0 * e3 * beta * (beta * (A * B - 1.0) + (1.0 - B * B) * (gamma + k)) +
           e4 * beta * beta * (1.0 - B * B) + (1.0 - A * A) * gamma * gamma;
}

double t4_psi(double k, const BBParams& p)
{
    const double A = p.A, B = p.B, beta = p.beta, gamma = p.gamma;
    const double e2 = kE * kE, e4 = e2 * e2;
    const double first = kE * ((A - 1.0) * beta + (1.0 - B) * (gamma - k)) +
                         e2 * (A - 1.0) * gamma + beta * (1.0 - B);
    const double second = kE * ((1.0 + A) * beta + (B + 1.0) * (k - gamma)) +
                          e2 * (A + 1.0) * gamma - beta * (B + 1.0);
    return -first * second / e4;
}

// --- global certification -------------------------------------------------------

namespace {

struct GapEval {
    bool has_m = false;
    // returns the theorem's admissibility gap; throws pole_error on bad (t,k)
    std::function<double(double, double, double)> value; // (t, k, m)
};

GapEval make_eval(const std::string& theorem, const BBParams& p)
{
    GapEval ev;
    if (theorem == "t1") {
        ev.value = [p](double t, double k, double) { return gap_t1(t, k, p.beta, p.gamma); };
    } else if (theorem == "t2") {
        ev.value = [p](double t, double k, double) { return gap_t2(t, k, p); };
    } else if (theorem == "t3") {
        ev.value = [p](double t, double k, double) { return gap_t3(t, k, p); };
    } else if (theorem == "t4") {
        ev.value = [p](double t, double k, double) { return gap_t4(t, k, p); };
    } else if (theorem == "t5") {
        ev.has_m = true;
        ev.value = [p](double t, double k, double m) {
            const auto [up, low] = gap_t5(t, k, m, p);
            return std::min(up, low);
        };
    } else {
        throw parameter_error("certify: unknown theorem id " + theorem);
    }
    return ev;
}

} // namespace

GapReport certify(const std::string& theorem, const BBParams& p, const GapGrid& grid)
{
    if (grid.t_points < 3 || grid.k_points < 1 || !(grid.k_max >= 1.0))
        throw parameter_error("certify: bad grid");
    GapEval ev = make_eval(theorem, p);

    GapReport rep;
    rep.theorem = theorem;
    rep.params = p;
    rep.grid = grid;
    rep.has_m = ev.has_m;

    const int mp = ev.has_m ? std::max(2, grid.m_points) : 1;

    double best = std::numeric_limits<double>::infinity();
    double bt = 0.0, bk = 1.0, bm = 0.0;

    auto probe = [&](double t, double k, double m) {
        try {
            const double v = ev.value(t, k, m);
            if (v < best) {
                best = v;
                bt = t;
                bk = k;
                bm = m;
            }
        } catch (const pole_error&) {
            ++rep.pole_failures;
            if (rep.pole_hits.size() < 16)
                rep.pole_hits.push_back({t, k});
        }
    };

    // h(-t) = h(t): scan [0, pi] only
    for (int i = 0; i < grid.t_points; ++i) {
        const double t = kPi * i / (grid.t_points - 1);
        for (int j = 0; j < grid.k_points; ++j) {
            const double k = grid.k_points == 1
                                 ? 1.0
                                 : 1.0 + (grid.k_max - 1.0) * j / (grid.k_points - 1);
            for (int l = 0; l < mp; ++l)
                probe(t, k, ev.has_m ? static_cast<double>(l) / (mp - 1) : 0.0);
        }
    }

    // local refinement: step / 10 around the incumbent, three rounds
    double dt = kPi / (grid.t_points - 1);
    double dk = grid.k_points == 1 ? 0.0 : (grid.k_max - 1.0) / (grid.k_points - 1);
    double dm = ev.has_m ? 1.0 / (mp - 1) : 0.0;
    for (int round = 0; round < grid.refine_rounds; ++round) {
        const double t0 = bt, k0 = bk, m0 = bm;
        const double ndt = dt / 10.0, ndk = dk / 10.0, ndm = dm / 10.0;
        for (int i = -10; i <= 10; ++i) {
            const double t = std::clamp(t0 + i * ndt, 0.0, kPi);
            for (int j = -10; j <= 10; ++j) {
                const double k = std::clamp(k0 + j * ndk, 1.0, grid.k_max);
                if (ev.has_m) {
                    for (int l = -10; l <= 10; ++l)
                        probe(t, k, std::clamp(m0 + l * ndm, 0.0, 1.0));
                } else {
                    probe(t, k, 0.0);
                }
            }
        }
        dt = ndt;
        dk = ndk;
        dm = ndm;
    }

    rep.min_gap = best;
    rep.argmin_t = bt;
    rep.argmin_k = bk;
    rep.argmin_m = bm;

    auto end_eval = [&](double t, double k) {
        double v = std::numeric_limits<double>::infinity();
        for (int l = 0; l < mp; ++l) {
            try {
                v = std::min(v, ev.value(t, k, ev.has_m ? static_cast<double>(l) / (mp - 1) : 0.0));
            } catch (const pole_error&) {
            }
        }
        return v;
    };
    rep.h0_k1 = end_eval(0.0, 1.0);
    rep.hpi_k1 = end_eval(kPi, 1.0);
    rep.h0_kmax = end_eval(0.0, grid.k_max);
    rep.hpi_kmax = end_eval(kPi, grid.k_max);

    // leading k-behavior probe: the gaps grow polynomially in k, so k = 1e3
    // settles the tail sign beyond the truncation
    double tail = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.t_points; ++i)
        tail = std::min(tail, end_eval(kPi * i / (grid.t_points - 1), 1e3));
    rep.k_tail_min = tail;
    return rep;
}

EndpointAudit endpoint_minimum_check(const std::string& theorem, const BBParams& p,
                                     const GapGrid& grid)
{
    GapEval ev = make_eval(theorem, p);
    EndpointAudit audit;
    audit.has_m = ev.has_m;
    const int mp = ev.has_m ? std::max(2, grid.m_points) : 1;

    for (int l = 0; l < mp; ++l) {
        const double m = ev.has_m ? static_cast<double>(l) / (mp - 1) : 0.0;
        for (int j = 0; j < grid.k_points; ++j) {
            const double k = grid.k_points == 1
                                 ? 1.0
                                 : 1.0 + (grid.k_max - 1.0) * j / (grid.k_points - 1);
            double ends;
            try {
                ends = std::min(ev.value(0.0, k, m), ev.value(kPi, k, m));
            } catch (const pole_error&) {
                continue;
            }
            // interior minimum with one local refinement pass
            double interior = std::numeric_limits<double>::infinity();
            double arg_t = 0.0;
            const double dt = kPi / (grid.t_points - 1);
            for (int i = 1; i + 1 < grid.t_points; ++i) {
                const double t = kPi * i / (grid.t_points - 1);
                try {
                    const double v = ev.value(t, k, m);
                    if (v < interior) {
                        interior = v;
                        arg_t = t;
                    }
                } catch (const pole_error&) {
                }
            }
            for (int i = -10; i <= 10; ++i) {
                const double t = std::clamp(arg_t + i * dt / 10.0, 0.0, kPi);
                try {
                    const double v = ev.value(t, k, m);
                    if (v < interior) {
                        interior = v;
                        arg_t = t;
                    }
                } catch (const pole_error&) {
                }
            }
            const double deficit = ends - interior;
            if (deficit > audit.worst_deficit) {
                audit.worst_deficit = deficit;
                audit.at_t = arg_t;
                audit.at_k = k;
                audit.at_m = m;
            }
        }
    }
    audit.holds = audit.worst_deficit <= 1e-9;
    return audit;
}

} // namespace bbsubord
