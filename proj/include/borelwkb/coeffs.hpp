#ifndef BORELWKB_COEFFS_HPP
#define BORELWKB_COEFFS_HPP

#include <variant>
#include <vector>

#include "borelwkb/poly.hpp"
#include "borelwkb/rayfun.hpp"

namespace borelwkb {

enum class Backend { bessel_poly, oscillator, collocation };

// Ordered WKB coefficients A_0..A_N for one branch, polynomial or ray form.
struct CoeffTable {
    Sign sign = Sign::plus;
    Backend backend = Backend::collocation;
    std::vector<std::variant<PolyC, RayFunction>> entries;
    Cplx kappa{0.0}, lambda{0.0};
    int ell = 0;
    bool has_kappa = false, has_lambda = false;

    int order() const { return static_cast<int>(entries.size()) - 1; }
    const PolyC& poly(int n) const { return std::get<PolyC>(entries.at(n)); }
    const RayFunction& ray(int n) const { return std::get<RayFunction>(entries.at(n)); }
    bool is_poly() const { return !entries.empty() && std::holds_alternative<PolyC>(entries.front()); }

    // A_n at an evaluation point: p for the polynomial backend, arclength s
    // along the ray for the collocation backend.
    Cplx eval(int n, Cplx p_or_s) const;
};

// --- Bessel polynomial backend (recursion in p, A_n of degree 3n) ---
PolyC bessel_coeff_p(int n, Cplx kappa, Sign sign);
PolyC bessel_coeff_p_exact(int n, const Rational& kappa, Sign sign);
CoeffTable bessel_coeff_table(int N, Cplx kappa, Sign sign);
CoeffTable bessel_coeff_table_exact(int N, const Rational& kappa, Sign sign);

// --- Oscillator closed form for the first coefficient ---
Cplx oscillator_A1(Cplx lambda, int ell, Cplx z, Sign sign);

// --- Generic collocation backend on a ray ---
// The recursion is propagated as derivative jets: d/dxi of a coefficient is
// taken from the carried jet (and the integral term differentiates to its
// integrand), so no sampled function is ever differentiated numerically.
// [n][node][m] = m-th xi-derivative of A_n at the node; m <= m_keep + (order
// headroom consumed by the recursion).
struct RayJetTable {
    RayChartPtr chart;
    std::vector<std::vector<std::vector<Cplx>>> d;
};
RayJetTable coeffs_collocation_jets(const EquationSpec& eq, RayChartPtr chart, int N, int m_keep);

CoeffTable coeffs_collocation(const EquationSpec& eq, RayChartPtr chart, int N);

// --- Appendix-style exponent coefficients ---
struct ExpCoeffTables {
    std::vector<RayFunction> E; // E_1..E_N
    std::vector<RayFunction> F; // F_1..F_N
};
ExpCoeffTables coeffs_exponent(const EquationSpec& eq, RayChartPtr chart, Sign sign, int N);

// A_1..A_N from E_1..E_N (series exponentiation)
std::vector<Cplx> exp_to_series(const std::vector<Cplx>& E, int N);

// Full table via the exponent route (A_n as RayFunctions)
CoeffTable coeffs_exponent_table(const EquationSpec& eq, RayChartPtr chart, Sign sign, int N);

// Chart sized so that every entry resolves: M doubled from 128 until the
// Chebyshev tails drop below 1e-12 (relative); throws TruncationError if the
// far-end decay check fails at the largest grid.
CoeffTable coeffs_collocation_auto(const EquationSpec& eq, const XiPoint& anchor, Sign sign,
                                   int N, RayChartPtr* chart_out = nullptr, double S = 2.0);

} // namespace borelwkb

#endif
