#include "bbsubord/bernardi.hpp"
#include "bbsubord/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

using namespace bbsubord;
using bbtest::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

// n-th Taylor coefficient by a DFT over a circle of radius r
cplx fit_coefficient(const AnalyticFn& f, int n, double r = 0.5, int samples = 64)
{
    cplx acc = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * kPi * j / samples;
        acc += f.eval(std::polar(r, theta)) * std::polar(1.0, -n * theta);
    }
    return acc / (static_cast<double>(samples) * std::pow(r, n));
}
} // namespace

TEST_CASE("bernardi on monomials and the koebe-like integrand")
{
    for (double c : {-0.5, 0.0, 1.0, 3.0}) {
        CHECK(std::abs(bernardi(fn_identity(), c, 0.4) - cplx(0.4)) < 1e-11);
    }
    // z + z^2 with c = 1 -> z + (2/3) z^2
    const AnalyticFn f = AnalyticFn::power_series("f", {0.0, 1.0, 1.0});
    const cplx z(0.3, 0.2);
    CHECK(std::abs(bernardi(f, 1.0, z) - (z + 2.0 / 3.0 * z * z)) < 1e-11);

    // koebe-like at c = 0, z = 1/2: closed antiderivative gives ln 2
    CHECK(std::abs(bernardi(fn_koebe_like(), 0.0, 0.5) - std::log(2.0)) < 1e-10);

    CHECK_THROWS_AS(bernardi_fn(fn_identity(), -1.0), parameter_error);
    CHECK_THROWS_AS(bernardi_fn(fn_const_one(), 0.5), parameter_error); // f(0) != 0
}

TEST_CASE("bernardi monomial law by series fitting")
{
    for (double c : {-0.5, 0.0, 1.0, 3.0}) {
        for (int n = 1; n <= 6; ++n) {
            const AnalyticFn F = bernardi_fn(fn_monomial(n), c);
            const cplx lead = fit_coefficient(F, n);
            CHECK(std::abs(lead - cplx((c + 1.0) / (c + n))) < 1e-10);
            // neighbouring coefficients vanish
            if (n > 1)
                CHECK(std::abs(fit_coefficient(F, n - 1)) < 1e-10);
        }
    }
}

TEST_CASE("star_ratio values")
{
    CHECK(std::abs(star_ratio(fn_identity(), cplx(0.3, -0.4)) - 1.0) < 1e-14);
    CHECK(std::abs(star_ratio(fn_identity(), 0.0) - 1.0) == 0.0);
    CHECK(std::abs(star_ratio(fn_koebe_like(), 0.5) - 2.0) < 1e-14);
}

TEST_CASE("make_starlike_from_target constructions")
{
    // phi = 1 gives back the identity
    const AnalyticFn trivial = make_starlike_from_target(fn_const_one());
    CHECK(std::abs(trivial.eval(cplx(0.3, 0.1)) - cplx(0.3, 0.1)) < 1e-12);

    // Janowski exemplar equals z (1+Bz)^{(A-B)/B}
    const double A = 0.6, B = -0.4;
    const AnalyticFn fj = make_starlike_from_target(target_janowski(A, B));
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        const cplx z = bbtest::random_disc_point(rng, 0.95);
        const cplx closed = z * std::exp((A - B) / B * principal_log(1.0 + B * z));
        CHECK(std::abs(fj.eval(z) - closed) < 1e-11 * std::max(1.0, std::abs(closed)));
    }

    // construction identity: z f'/f reproduces the target
    const AnalyticFn fL = make_starlike_from_target(target_sqrt1p());
    CHECK(std::abs(star_ratio(fL, 0.5) - std::sqrt(1.5)) < 1e-9);
    CHECK(std::abs(star_ratio(fL, 0.3) - std::sqrt(1.3)) < 1e-9);
    const AnalyticFn fe = make_starlike_from_target(target_exp());
    const AnalyticFn fpar = make_starlike_from_target(target_phi_par());
    for (int i = 0; i < 40; ++i) {
        const cplx z = bbtest::random_disc_point(rng, 0.95);
        CHECK(std::abs(star_ratio(fL, z) - principal_sqrt(1.0 + z)) < 1e-8);
        CHECK(std::abs(star_ratio(fe, z) - std::exp(z)) < 1e-8);
        CHECK(std::abs(star_ratio(fpar, z) - phi_par(z)) < 1e-8);
    }
}

TEST_CASE("briot-bouquet solutions satisfy their equations")
{
    // normalization p(0) = 1 for both exemplar solutions
    CHECK(std::abs(example_p1(-0.5, 0.0) - 1.0) < 1e-9);
    CHECK(std::abs(example_p2(-0.25, 0.0) - 1.0) < 1e-9);

    const AnalyticFn p1 = example_p1_fn(-0.5);
    CHECK(ode_residual(p1, target_sqrt1p(), 1.0, -0.5, 0.9, 64) < 1e-6);

    const AnalyticFn p2a = example_p2_fn(-0.3);
    CHECK(ode_residual(p2a, target_exp(), 1.0, -0.3, 0.9, 64) < 1e-6);
    const AnalyticFn p2 = example_p2_fn(-0.25);
    CHECK(ode_residual(p2, target_exp(), 1.0, -0.25, 0.9, 64) < 1e-6);

    // generic solver against other targets / parameters
    const AnalyticFn q = solve_bb(target_janowski(0.9, 0.0), 0.35, 0.0);
    CHECK(std::abs(q.eval(0.0) - 1.0) < 1e-10);
    CHECK(ode_residual(q, target_janowski(0.9, 0.0), 0.35, 0.0, 0.85, 32) < 1e-6);

    CHECK_THROWS_AS(solve_bb(target_exp(), 0.0, 0.5), parameter_error);
    CHECK_THROWS_AS(solve_bb(target_exp(), 1.0, -1.0), parameter_error);
}

TEST_CASE("exemplar conclusions are contained")
{
    const SubordReport r1 =
        is_subordinate(example_p1_fn(-0.5), Region::expdisc(), 0.99, 6, 128);
    CHECK(r1.verdict == SubordReport::Verdict::Contained);

    const SubordReport r2 =
        is_subordinate(example_p2_fn(-0.25), Region::janowski(0.5, -0.5), 0.99, 6, 128);
    CHECK(r2.verdict == SubordReport::Verdict::Contained);
}

TEST_CASE("open door mapping")
{
    CHECK(std::abs(open_door(cplx(0.7, 0.1), cplx(2.0, 0.0), 0.0) - cplx(0.7, 0.1)) < 1e-15);
    CHECK(std::abs(open_door(1.0, 0.0, 0.5) - 3.0) < 1e-15);
    CHECK(std::abs(open_door(1.0, 1.0, 0.5) - cplx(13.0 / 3.0)) < 1e-14);
    CHECK_THROWS_AS(open_door(1.0, 1.0, 1.0), pole_error);
    CHECK_THROWS_AS(open_door(1.0, 1.0, -1.0), pole_error);
}

TEST_CASE("bernardi relation: bb(zF'/F, 1, c) = zf'/f")
{
    std::mt19937_64 rng(62);
    const AnalyticFn members[] = {make_starlike_from_target(target_sqrt1p()),
                                  make_starlike_from_target(target_exp()),
                                  make_starlike_from_target(target_janowski(0.3, -0.1)),
                                  make_starlike_from_target(target_janowski(0.5, 0.0)),
                                  fn_koebe_like()};
    for (const AnalyticFn& f : members) {
        const double c = bbtest::uniform(rng, -0.4, 2.0);
        const AnalyticFn F = bernardi_fn(f, c);
        const AnalyticFn p = ratio_fn(F);
        for (int i = 0; i < 12; ++i) {
            const double theta = -kPi + 2.0 * kPi * i / 12.0;
            const cplx z = std::polar(0.8, theta);
            CHECK(std::abs(bb_transform(p, 1.0, c, z) - star_ratio(f, z)) < 1e-7);
        }
    }
}

TEST_CASE("derivative mode: bb(F', 0, c+1) = f'")
{
    const AnalyticFn f = antiderivative_fn(target_sqrt1p());
    const double c = -0.5;
    const AnalyticFn Fp = bernardi_deriv_fn(f, c);
    CHECK(std::abs(Fp.eval(0.0) - 1.0) < 1e-10);
    for (int i = 0; i < 12; ++i) {
        const cplx z = std::polar(0.8, -kPi + 2.0 * kPi * i / 12.0);
        CHECK(std::abs(bb_transform(Fp, 0.0, c + 1.0, z) - principal_sqrt(1.0 + z)) < 1e-7);
    }
}

TEST_CASE("corpus manifest round-trips and rebuilds")
{
    const std::vector<CorpusEntry> corpus = builtin_corpus();
    CHECK(corpus.size() >= 20);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(corpus[i].name != corpus[j].name);

    std::istringstream is(corpus_manifest());
    CHECK(parse_manifest(is).size() == corpus.size());

    const CorpusEntry tweaked = corpus_entry("example_p1", {{"gamma", -0.6}});
    bool saw_gamma = false;
    for (const auto& [key, value] : tweaked.f.params())
        if (key == "gamma") {
            saw_gamma = true;
            CHECK(value == doctest::Approx(-0.6));
        }
    CHECK(saw_gamma);
    CHECK_THROWS_AS(corpus_entry("nonexistent"), parameter_error);
}

TEST_CASE("corpus normalization invariants")
{
    for (const CorpusEntry& entry : builtin_corpus()) {
        const cplx v0 = entry.f.eval(0.0);
        CHECK(std::abs(v0 - entry.f.at_zero()) < 1e-9);
        if (entry.mode == TransformMode::Raw) {
            CHECK(std::abs(v0 - 1.0) < 1e-9);
        } else {
            CHECK(std::abs(v0) < 1e-9); // class-A normalization f(0) = 0
            CHECK(std::abs(entry.f.deriv(0.0) - 1.0) < 1e-7);
        }
    }
}

TEST_CASE("corpus derivative invariant: central differences at |z| <= 0.9")
{
    std::mt19937_64 rng(63);
    const double h = 1e-6;
    for (const CorpusEntry& entry : builtin_corpus()) {
        for (int i = 0; i < 4; ++i) {
            const cplx z = bbtest::random_disc_point(rng, 0.9);
            const cplx fd = (entry.f.eval(z + h) - entry.f.eval(z - h)) / (2.0 * h);
            const cplx d = entry.f.deriv(z);
            CHECK(std::abs(fd - d) <= 1e-5 * std::max(1.0, std::abs(d)));
        }
    }
}

TEST_CASE("cheap corpus memberships are contained")
{
    for (const char* name : {"identity", "koebe_like", "f_L", "f_e", "p_314", "p_317"}) {
        const CorpusEntry entry = corpus_entry(name);
        const SubordReport rep = class_membership(entry, 0.95, 6, 128);
        INFO("entry ", name);
        CHECK(rep.verdict == SubordReport::Verdict::Contained);
    }
}

TEST_CASE("every corollary has a corpus instantiation with a contained verdict")
{
    struct Row {
        const char* corollary;
        std::map<std::string, double> params;
        const char* entry;
        bool feasible; // whether the corollary's own hypothesis set is nonempty here
    };
    const Row rows[] = {
        {"bernardi_t1_i", {{"c", -0.5}}, "bernardi_fL", true},
        // beta=0, gamma=c+1 forces gamma=0, i.e. c=-1, which c > -1 excludes
        {"bernardi_t1_ii", {{"c", -0.5}}, "bernardi_sqrt_prime", false},
        {"bernardi_t2_i", {{"c", -0.25}, {"A", 0.5}, {"B", -0.5}}, "bernardi_fe", true},
        {"bernardi_t2_ii", {{"c", -0.9}, {"A", 0.5}, {"B", -0.5}}, "bernardi_exp_prime", true},
        {"bernardi_t4_i", {{"c", 0.0}, {"A", 0.3}, {"B", 0.0}}, "bernardi_fJ_e", true},
        {"bernardi_t4_ii", {{"c", -0.9}, {"A", 0.5}, {"B", 0.0}}, "bernardi_jan_prime", true},
        {"cor_3.3", {{"c", 1.0}, {"A", 0.3}, {"B", -0.1}}, "bernardi_fJ", true},
        {"cor_3.4", {{"c", 0.0}, {"A", 0.5}, {"B", 0.0}}, "bernardi_jan_prime_lem", true},
        {"cor_3.12", {{"alpha", 0.25}, {"beta", 0.4}}, "p_312", true},
        {"cor_3.14", {{"alpha", 0.0}, {"beta", -0.15}}, "p_314", true},
        {"cor_3.15", {{"alpha", 0.1}, {"beta", 0.35}}, "p_315", true},
        // the parabolic implication's hypothesis set is empty (see t5 tests)
        {"cor_3.17", {{"alpha", 0.75}, {"beta", -0.5}}, "p_317", false},
    };
    for (const Row& row : rows) {
        INFO("corollary ", row.corollary, " via ", row.entry);
        const Specialization s = specialize(row.corollary, row.params);
        CHECK(s.satisfied == row.feasible);
        const SubordReport rep = class_membership(corpus_entry(row.entry), 0.95, 6, 128);
        CHECK(rep.verdict == SubordReport::Verdict::Contained);
    }
}

TEST_CASE("ratio of a Bernardi output coincides with the exact solution")
{
    // uniqueness of the Briot-Bouquet solution: z F'/F for F = bernardi(f_e, c)
    // is the same function as the h = e^z solution at beta = 1, gamma = c
    const AnalyticFn lhs = ratio_fn(bernardi_fn(make_starlike_from_target(target_exp()), -0.25));
    const AnalyticFn rhs = example_p2_fn(-0.25);
    for (int i = 0; i < 8; ++i) {
        const cplx z = std::polar(0.85, -kPi + 2.0 * kPi * i / 8.0);
        CHECK(std::abs(lhs.eval(z) - rhs.eval(z)) < 1e-9);
    }
}

TEST_CASE("probe premises hold for the perturbed harness entries")
{
    // p_314: bb(p, -0.15, 0) stays in the halfplane target
    const CorpusEntry p314 = corpus_entry("p_314");
    const AnalyticFn bb314 = AnalyticFn::closed_form(
        "bb_p314", 1.0, [f = p314.f](cplx z) { return bb_transform(f, -0.15, 0.0, z); });
    CHECK(is_subordinate(bb314, Region::janowski(1.0, -1.0), 0.95, 6, 128).verdict ==
          SubordReport::Verdict::Contained);

    // p_317: bb(p, -0.5, 0) stays in the parabolic region
    const CorpusEntry p317 = corpus_entry("p_317");
    const AnalyticFn bb317 = AnalyticFn::closed_form(
        "bb_p317", 1.0, [f = p317.f](cplx z) { return bb_transform(f, -0.5, 0.0, z); });
    CHECK(is_subordinate(bb317, Region::parabola(), 0.95, 6, 128).verdict ==
          SubordReport::Verdict::Contained);
}
