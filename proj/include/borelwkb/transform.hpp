#ifndef BORELWKB_TRANSFORM_HPP
#define BORELWKB_TRANSFORM_HPP

#include <vector>

#include "borelwkb/potential.hpp"

namespace borelwkb {

// A point carried through the Liouville transformation: z, xi(z), the branch
// of f0^{1/2} in force there, and the weight f0^{-1/4}.
struct XiPoint {
    Cplx z{0.0};
    Cplx xi{0.0};
    Cplx sqrt_f0{0.0};
    Cplx weight{0.0};
};

// Numerical realization of the horizontal half-line P(-inf, xi) (sign plus)
// or P(xi, +inf) (sign minus): samples at arclengths s >= 0 from the anchor,
// xi(s) = anchor.xi + sigma * s with sigma = +1 (minus) / -1 (plus).
struct RayPath {
    Sign sign = Sign::minus;
    XiPoint anchor;
    std::vector<XiPoint> samples;
    std::vector<double> s;
    double truncation_abscissa = 0.0;
};

// xi = int_{z0}^{z} f0^{1/2} dt with continuous branch tracking along the
// contour z0 -> hints... -> z; relative error <= 1e-10.
XiPoint compute_xi(const PotentialTriple& pot, Cplx z, const std::vector<Cplx>& contour_hint = {});

// phi = f1/f0,  psi = f2/f0 + (4 f0 f0'' - 5 f0'^2) / (16 f0^3)
std::pair<Cplx, Cplx> phi_psi_at(const PotentialTriple& pot, const XiPoint& pt);

// d(phi)/d(xi) at the point, through the tracked branch of f0^{1/2}.
Cplx phi_prime_at(const PotentialTriple& pot, const XiPoint& pt);

// Derivative values d^m/dxi^m of phi and psi at the point, m = 0..order,
// assembled exactly from Taylor series of the f_i (no numerical
// differentiation). This is what keeps the coefficient recursions stable.
struct PhiPsiDerivs {
    std::vector<Cplx> phi, psi; // [m] = m-th xi-derivative
};
PhiPsiDerivs phi_psi_derivs(const PotentialTriple& pot, const XiPoint& pt, int order);

RayPath trace_ray(const PotentialTriple& pot, const XiPoint& start, Sign sign,
                  double length, int n_samples);

// Samples at the given (sorted, non-negative) arclengths.
RayPath trace_ray_at(const PotentialTriple& pot, const XiPoint& start, Sign sign,
                     const std::vector<double>& s_targets);

} // namespace borelwkb

#endif
