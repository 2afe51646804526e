#ifndef BBSUBORD_REGIONS_HPP
#define BBSUBORD_REGIONS_HPP

#include "bbsubord/branches.hpp"

#include <string>
#include <vector>

namespace bbsubord {

/// One of the four target domains, as a first-class value with a signed
/// membership gap and a boundary parameterization.
struct Region {
    enum class Variant { Janowski, Lemniscate, ExpDisc, Parabola };

    Variant variant = Variant::ExpDisc;
    double A = 1.0; // Janowski only
    double B = -1.0;

    static Region janowski(double A, double B); // validates -1 <= B < A <= 1
    static Region lemniscate() { return Region{Variant::Lemniscate, 0.0, 0.0}; }
    static Region expdisc() { return Region{Variant::ExpDisc, 0.0, 0.0}; }
    static Region parabola() { return Region{Variant::Parabola, 0.0, 0.0}; }
};

/// Signed membership defect: positive inside, negative outside, zero on the
/// boundary. Janowski: 1-|(w-1)/(A-Bw)|; Lemniscate: 1-|w^2-1|;
/// ExpDisc: 1-|log w|; Parabola: Re w - |w-1|.
double gap(const Region& region, cplx w);

/// Point with gap == 0, parameterized by theta in [-pi, pi]. The unbounded
/// parabola is truncated at v = tan-free affine map theta -> v in [-50, 50].
cplx boundary_point(const Region& region, double theta);

/// phi_par(z) = 1 + (2/pi^2) log^2((1+sqrt z)/(1-sqrt z)), Im sqrt z >= 0.
/// Throws domain_error at z = 1 (boundary singularity).
cplx phi_par(cplx z);

std::string region_name(const Region& region);

/// "janowski:A:B", "lemniscate", "expdisc", "parabola".
Region parse_region(const std::string& text);

/// Boundary polyline as CSV rows "theta,re,im" (17 significant digits),
/// consumed by the CLI plot command.
std::string boundary_csv(const Region& region, int points);

} // namespace bbsubord

#endif
