#ifndef BORELWKB_BOUNDS_HPP
#define BORELWKB_BOUNDS_HPP

#include <cstdint>

#include "borelwkb/coeffs.hpp"

namespace borelwkb {

struct ConditionCert {
    Condition which = Condition::cond1;
    double c = 0.0;
    double rho = 1.0;
    double d = 0.25;
    double epsilon = 0.1;
    int n_samples = 0;
    double sup_raw = 0.0; // fitted sup before the 1.1 safety factor
};

struct CertGrid {
    int n_r = 48;
    int n_theta = 48;
    double r_min = 1e-2;
    double r_max = 1e5;
    std::uint64_t seed = 12345;
};

// Fits the smallest c (times a 1.1 safety factor) such that Condition 1/2
// holds on the sample grid; throws ConditionViolated when the decay fails.
ConditionCert certify_conditions(const EquationSpec& eq, const CertGrid& grid);

struct ConstantsChain {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, C1d = 0.0;
};

ConstantsChain constants_chain(const ConditionCert& cert);

// log C_1(d) .. log C_N(d) via the product recurrence
std::vector<double> C_n_sequence_log(const ConstantsChain& chain, double d, int N);
// closed-form majorant, log C_n(d) <= this
double C_n_majorant_log(const ConstantsChain& chain, double d, int n);

// convenience non-log version (may overflow to inf for large constants)
std::vector<double> C_n_sequence(const ConstantsChain& chain, double d, int N);

double weight_factor(Sign sign, double rho, Cplx xi);

// V^{+-}(sigma, xi(s_from)) integrated along the chart's ray to its far end
double V_weight(const EquationSpec& eq, RayChartPtr chart, double s_from, double sigma);

// C^{+-} as a sampled sup of 2 * weight * |sum A_{n+1} t^n / n!| over
// |t| = 2r (32 angles), the chart nodes, and a seeded z-cloud near the
// anchor (polynomial backend only). Throws TailNotNegligible when the
// Gevrey majorant says the table is too short at |t| = 2r.
double C_sampled(const CoeffTable& table, const EquationSpec& eq, RayChartPtr chart,
                 double r, double rho, const ConstantsChain& chain, double d,
                 std::uint64_t seed = 777);

// log of the analytic upper bound c3 * sum C_{n+1}(d) (r/d)^n
double C_upper_log(const ConstantsChain& chain, double d, double r);

// Theorem-2 remainder bound, computed in log space.
double remainder_bound(double C, double V, double weight, double r, double sigma,
                       int N, Cplx u);

struct GevreyReport {
    double max_slack = 0.0;
    int worst_n = 0, worst_m = 0;
    Cplx worst_xi{0.0};
    bool pass = false;
};

// |d^m A_n / dxi^m| <= c3 C_n(d) 2^{-n} (n+m-1)! / (d^{n+m-1} weight) on the
// chart nodes, n <= n_max, m <= 1. Throws BoundViolated when the inequality
// fails (a certificate bug by construction).
GevreyReport gevrey_bound_check(const EquationSpec& eq, RayChartPtr chart,
                                const ConstantsChain& chain, double d, int n_max);

// exact telescoping identity: sum_j C(m,j) j! (n+m-j-1)! == (n+m)!/n
std::pair<BigInt, BigInt> lemma3_identity(int n, int m);

struct BoundReport {
    Sign sign = Sign::minus;
    Cplx xi{0.0};
    Cplx u{0.0};
    int N = 0;
    double sigma = 0.0, r = 0.0;
    double V = 0.0;
    double C = 0.0;
    double C_upper_log_val = 0.0;
    double bound = 0.0;
    double weight = 1.0;
    double true_remainder = -1.0; // < 0 when no oracle value is attached
};

} // namespace borelwkb

#endif
