#ifndef BORELWKB_BOREL_HPP
#define BORELWKB_BOREL_HPP

#include "borelwkb/coeffs.hpp"

namespace borelwkb {

// Taylor data of the Borel transform F(t) at a fixed point: c_n = A_{n+1}/n!.
struct BorelSeries {
    std::vector<Cplx> coeffs;
    Cplx point;     // p (polynomial backend) or ray arclength s
    Cplx xi;
    Sign sign = Sign::minus;
    double radius_estimate = 0.0; // |c_{N-2}/c_{N-1}|, quotient heuristic
};

BorelSeries borel_series(const CoeffTable& table, Cplx point, int N);

struct PadeApprox {
    PolyC num, den; // den(0) = 1
    int L = 0, M = 0;
};

PadeApprox pade(const BorelSeries& series, int L, int M);

// roots of a complex polynomial (Durand-Kerner); used for the pole check
std::vector<Cplx> poly_roots(const PolyC& p);

struct BorelSummation {
    BorelSeries series;
    int pade_L = 0, pade_M = 0;
    double T = 0.0;       // quadrature truncation point
    Cplx u{0.0};
    Cplx value{0.0};
    double err_estimate = 0.0;
};

// eta(u) = int_0^T e^{-ut} Pade(t) dt; throws PoleOnContour if a denominator
// root comes within 1e-3 of [0, T].
BorelSummation laplace_eval(const BorelSeries& series, Cplx u, int L, int M,
                            double d, double bound_scale = 1.0);

// diagonal default: L = M = floor((N-1)/2)
BorelSummation laplace_eval_auto(const BorelSeries& series, Cplx u, double d);

} // namespace borelwkb

#endif
