#ifndef BBSUBORD_THEOREMS_HPP
#define BBSUBORD_THEOREMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbsubord {

/// The parameter tuple (A, B, beta, gamma). A, B are ignored by T1.
struct BBParams {
    double A = 1.0;
    double B = -1.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct Margin {
    std::string id;
    double value = 0.0;
    bool strict = false; // strict: value > 0; non-strict: value >= -1e-12

    bool ok() const { return strict ? value > 0.0 : value >= -1e-12; }
};

struct HypothesisResult {
    std::string theorem;
    bool satisfied = false;
    std::vector<Margin> margins;
};

/// T1 (sqrt(1+z) => e^z): max{-g/e, -g e + e/(1-sqrt2 e)} <= beta <= -e g.
HypothesisResult t1_hypothesis(double beta, double gamma);
/// The proof's equivalent form (e beta + gamma >= 0, 1/(1-sqrt2 e) <= gamma
/// + beta/e <= 0); agreement with t1_hypothesis is property-tested.
HypothesisResult t1_hypothesis_proof_form(double beta, double gamma);

/// T2 (e^z => Janowski): both sign branches of each condition, with
/// division-free margins. Requires -1 < B < A <= 1.
HypothesisResult t2_hypothesis(const BBParams& p);

/// T3 (Janowski => sqrt(1+z)), conditions (i)-(ii). Requires -1 <= B < A <= 1.
HypothesisResult t3_hypothesis(const BBParams& p);

/// T4 (Janowski => e^z), conditions (i)-(iv). Requires -1 <= B < A <= 1.
HypothesisResult t4_hypothesis(const BBParams& p);

/// T5 (parabolic => Janowski), conditions (i)-(v); k-dependent conditions are
/// minimized over a k grid on [1, k_max] plus a k->infinity leading-behavior
/// margin, m-dependent ones over an m grid on [0, 1].
HypothesisResult t5_hypothesis(const BBParams& p, double k_max, int m_grid = 257,
                               int k_grid = 512);

/// Dispatcher over "t1".."t5".
HypothesisResult hypothesis(const std::string& theorem, const BBParams& p,
                            double k_max = 16.0, int m_grid = 257, int k_grid = 512);

// --- corollary specialization table -----------------------------------------

struct Specialization {
    std::string corollary;
    std::string parent;                 // parent theorem id
    BBParams params;                    // substituted parameters
    std::vector<Margin> extra;          // the corollary's own displayed inequalities
    std::optional<HypothesisResult> parent_result; // absent if A/B left free
    bool satisfied = false;             // parent (when evaluated) && extra
    std::string note;
};

std::vector<std::string> corollary_ids();

/// Substitutes the corollary's parameter map (alpha, beta, c, A, B as
/// applicable) and evaluates its displayed inequalities alongside the parent
/// hypothesis. Unknown ids and out-of-range free parameters throw
/// parameter_error. k-quantified corollary conditions use the same grid
/// treatment as t5_hypothesis.
Specialization specialize(const std::string& corollary_id,
                          const std::map<std::string, double>& free_params,
                          double k_max = 16.0, int m_grid = 257, int k_grid = 512);

// --- feasible intervals -------------------------------------------------------

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Maximal interval(s) of the named free parameter ("A", "B", "beta",
/// "gamma") on which the theorem's hypothesis holds, endpoints located by
/// bisection to 1e-12 within [lo, hi]. Empty result means empty feasible set,
/// several entries mean a non-interval feasible set.
std::vector<Interval> feasible_interval(const std::string& theorem, BBParams fixed,
                                        const std::string& free_name,
                                        double lo = -40.0, double hi = 40.0,
                                        int scan_points = 20001,
                                        double k_max = 16.0);

} // namespace bbsubord

#endif
