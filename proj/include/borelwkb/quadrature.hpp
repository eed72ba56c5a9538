#ifndef BORELWKB_QUADRATURE_HPP
#define BORELWKB_QUADRATURE_HPP

#include <functional>
#include "borelwkb/cplx.hpp"

namespace borelwkb {

struct QuadResult {
    Cplx value;
    double err;
};

// Adaptive G7/K15 on a real interval, complex-valued integrand.
QuadResult integrate_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_depth = 48);

// Same for real-valued integrands.
double integrate_adaptive_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_depth = 48);

// Branch-continued contour integral of f0^{1/2} along the straight segment
// [za, zb]. The square root (and fourth root) branches are continued
// node-by-node from `sqrt_seed` / `quarter_seed`, taking the root nearest to
// the previous value; intervals with too large a phase swing are bisected.
// If `regularize_start` is set, the segment is parametrized by t = tau^2 so
// that a simple zero of f0 at za integrates with spectral accuracy.
struct SqrtContourResult {
    Cplx integral;      // int f0^{1/2} dz along the segment
    Cplx sqrt_end;      // continued branch of f0^{1/2} at zb
    Cplx quarter_end;   // continued branch of f0^{1/4} at zb
    double err;
};

SqrtContourResult integrate_sqrt_segment(const std::function<Cplx(Cplx)>& f0,
                                         Cplx za, Cplx zb,
                                         Cplx sqrt_seed, Cplx quarter_seed,
                                         double tol, double f0_floor,
                                         bool regularize_start);

} // namespace borelwkb

#endif
