#ifndef BORELWKB_FACTORIAL_HPP
#define BORELWKB_FACTORIAL_HPP

#include "borelwkb/coeffs.hpp"

namespace borelwkb {

// Signed Stirling numbers of the first kind, exact integers.
struct StirlingTable {
    int n_max = 0;
    std::vector<std::vector<BigInt>> s; // s[n][k], 0 <= k <= n
    const BigInt& operator()(int n, int k) const { return s.at(n).at(k); }
};

StirlingTable stirling(int n_max);

// B_{n+1} = sum_{k=0}^{n} (-omega)^{n-k} s(n,k) A_{k+1}; input A_1..A_N,
// output B_1..B_N (values at a fixed point).
std::vector<Cplx> B_from_A(const std::vector<Cplx>& A, double omega, const StirlingTable& S);

// same, polynomial lane (exact when A and omega are exact)
std::vector<PolyC> B_from_A_poly(const std::vector<PolyC>& A, const Rational& omega,
                                 const StirlingTable& S);

// Direct recursion in the Bessel p-variable (exact rational arithmetic),
// B_1 = A_1, B_{n+1} = (n-1) omega B_n + [p-space Arec step applied to B_n].
std::vector<PolyC> B_recursive_poly(const Rational& kappa, const Rational& omega, int N, Sign sign);

// Direct recursion on a ray (jet propagation, like coeffs_collocation).
// Returns B_1..B_N as RayFunctions on the chart.
std::vector<RayFunction> B_recursive_ray(const EquationSpec& eq, RayChartPtr chart,
                                         double omega, int N);

// u(u+omega)...(u+n omega), both the direct product and a log-space route.
Cplx rising_denominator(Cplx u, double omega, int n);
Cplx rising_denominator_log(Cplx u, double omega, int n);

struct FactorialSeriesExpansion {
    std::vector<Cplx> B;  // B_1..B_N at the evaluation point
    double omega = 1.0;
    Sign sign = Sign::minus;
    Cplx xi{0.0};
    double d = 0.25;
    // certified-tail inputs, supplied by the bounds module
    double C_bound = 0.0;   // C^{+-}(r) with r = pi/(4 omega)
    double V_sigma = 0.0;   // V^{+-}(sigma, xi) at the sigma used
    double weight = 1.0;    // max(1, ∓sgn(Re xi)|Re xi|^rho)
    double sigma = 0.0;     // filled by eval (default min(omega/2, Re u/2))
};

struct FactorialEvalResult {
    Cplx value{0.0};
    double tail_bound = 0.0; // NaN when uncertified
    bool certified = false;
    double sigma = 0.0;
};

// value = sum_{n=0}^{N-1} B_{n+1} / (u (u+omega) ... (u+n omega)); the tail
// bound needs Re u > omega > sigma > 0, otherwise the result is flagged
// uncertified and the bound is NaN.
FactorialEvalResult eval_factorial_series(const FactorialSeriesExpansion& exp, Cplx u, int N);

} // namespace borelwkb

#endif
