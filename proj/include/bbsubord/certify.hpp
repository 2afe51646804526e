#ifndef BBSUBORD_CERTIFY_HPP
#define BBSUBORD_CERTIFY_HPP

#include "bbsubord/branches.hpp"
#include "bbsubord/theorems.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bbsubord {

/// Numerator/denominator pair of a membership ratio; the admissibility gap is
/// h = f - g.
struct FG {
    double f = 0.0;
    double g = 0.0;
    double h() const { return f - g; }
};

// Direct complex-arithmetic boundary gaps (primary route). t in [-pi, pi],
// k >= 1. These evaluate the membership defect of the boundary candidate
// psi(boundary value, k * tangential derivative).
FG gap_t1_fg(double t, double k, double beta, double gamma);
double gap_t1(double t, double k, double beta, double gamma);
double gap_t2(double t, double k, const BBParams& p);
FG gap_t3_fg(double t, double k, const BBParams& p);
double gap_t3(double t, double k, const BBParams& p);
FG gap_t4_fg(double t, double k, const BBParams& p);
double gap_t4(double t, double k, const BBParams& p);
/// (upper, lower) = (F(cos t), H(cos t)): upper certifies |v/pi| <= 1, lower
/// |v/pi| >= 1/2.
std::pair<double, double> gap_t5(double t, double k, double m, const BBParams& p);

// Fully expanded trigonometric forms of the same gaps (cross-check route).
FG gap_t1_expanded(double t, double k, double beta, double gamma);
FG gap_t3_expanded(double t, double k, const BBParams& p);
FG gap_t4_expanded(double t, double k, const BBParams& p);
/// The T2 candidate P(z0) = u + iv through the expanded real/imaginary
/// parts (cross-check for gap_t2's complex route).
cplx t2_candidate_expanded(double t, double k, const BBParams& p);

// Endpoint closed forms.
double t1_h0(double k, double beta, double gamma);
double t1_hpi(double k, double beta, double gamma);
double t2_psi(double k, const BBParams& p);
double t2_phi(double k, const BBParams& p);
double t2_f0(double k, const BBParams& p);  // via arg/log composition of psi
double t2_fpi(double k, const BBParams& p); // via arg/log composition of -phi
double t3_S(double k, const BBParams& p);
double t3_hpi(double k, const BBParams& p); // (1 - B^2) k^2
double t4_phi(double k, const BBParams& p);
double t4_psi(double k, const BBParams& p);
double t5_F(double x, double k, const BBParams& p);
double t5_H(double x, double k, double m, const BBParams& p);
/// Vertex of the quadratic F; throws when BG(beta+gamma) = 0 (condition (i)
/// excludes this for valid parameters).
double t5_x0(double k, const BBParams& p);
double t5_F_at_x0_closed(double k, const BBParams& p);
double t5_Fpp(const BBParams& p); // 32 B G (beta+gamma)
double t5_psik(double k, double m, const BBParams& p);

struct GapGrid {
    int t_points = 257;   // on [0, pi]; gaps are even in t
    double k_max = 64.0;  // k is unbounded; the k^2 growth makes the tail harmless
    int k_points = 65;    // on [1, k_max]
    int m_points = 33;    // on [0, 1], T5 only
    int refine_rounds = 3;
};

struct PoleHit {
    double t = 0.0;
    double k = 0.0;
};

/// Result of globally minimizing a theorem's boundary gap over its grid.
struct GapReport {
    std::string theorem;
    BBParams params;
    double min_gap = 0.0;
    double argmin_t = 0.0;
    double argmin_k = 1.0;
    double argmin_m = 0.0; // meaningful only when has_m
    bool has_m = false;
    GapGrid grid;
    double h0_k1 = 0.0;   // gap at t=0, k=1
    double hpi_k1 = 0.0;  // gap at t=pi, k=1
    double h0_kmax = 0.0;
    double hpi_kmax = 0.0;
    double k_tail_min = 0.0; // min over the t (and m) grid at k = 1e3
    std::vector<PoleHit> pole_hits; // capped sample of skipped evaluations
    std::size_t pole_failures = 0;
};

/// Global grid minimum with refine_rounds local refinements (step / 10 around
/// the incumbent argmin). Runs regardless of whether the hypothesis holds.
GapReport certify(const std::string& theorem, const BBParams& p, const GapGrid& grid = {});

struct EndpointAudit {
    bool holds = true;          // interior never dips below min(h(0), h(pi)) - 1e-9
    double worst_deficit = 0.0; // max over (k[,m]) of min(h(0),h(pi)) - interior min
    double at_t = 0.0;
    double at_k = 1.0;
    double at_m = 0.0;
    bool has_m = false;
};

/// Audits the proofs' "minimum at t=0 or t=pi" claim on the grid.
EndpointAudit endpoint_minimum_check(const std::string& theorem, const BBParams& p,
                                     const GapGrid& grid = {});

} // namespace bbsubord

#endif
