#include "borelwkb/factorial.hpp"
#include "borelwkb/errors.hpp"

#include <cmath>
#include <limits>

namespace borelwkb {

StirlingTable stirling(int n_max) {
    if (n_max < 0) throw ValidationError("stirling: n_max must be >= 0");
    StirlingTable t;
    t.n_max = n_max;
    t.s.resize(n_max + 1);
    t.s[0] = {BigInt(1)};
    for (int n = 1; n <= n_max; ++n) {
        t.s[n].assign(n + 1, BigInt(0));
        // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
        for (int k = 1; k <= n; ++k) {
            BigInt v = t.s[n - 1].size() > static_cast<std::size_t>(k) ? t.s[n - 1][k] : BigInt(0);
            t.s[n][k] = t.s[n - 1][k - 1] - BigInt(n - 1) * v;
        }
    }
    return t;
}

std::vector<Cplx> B_from_A(const std::vector<Cplx>& A, double omega, const StirlingTable& S) {
    const int N = static_cast<int>(A.size());
    if (S.n_max < N - 1) throw ValidationError("Stirling table too small");
    std::vector<Cplx> B(N);
    for (int n = 0; n < N; ++n) {
        Cplx acc = 0.0;
        double wpow = 1.0; // (-omega)^{n-k}, build from k=n downward
        for (int k = n; k >= 0; --k) {
            acc += wpow * S(n, k).convert_to<double>() * A[k];
            wpow *= -omega;
        }
        B[n] = acc;
    }
    return B;
}

std::vector<PolyC> B_from_A_poly(const std::vector<PolyC>& A, const Rational& omega,
                                 const StirlingTable& S) {
    const int N = static_cast<int>(A.size());
    if (S.n_max < N - 1) throw ValidationError("Stirling table too small");
    std::vector<PolyC> B(N);
    for (int n = 0; n < N; ++n) {
        PolyC acc;
        Rational wpow = 1;
        for (int k = n; k >= 0; --k) {
            acc = acc + A[k].scaled_exact(wpow * Rational(S(n, k)));
            wpow *= -omega;
        }
        B[n] = acc;
    }
    return B;
}

namespace {

// one p-space step of the Arec recursion, exact lane (mirrors coeffs.cpp)
PolyC arec_step_exact(const PolyC& a, const Rational& kappa) {
    auto mk = [](std::vector<Rational> e) {
        PolyC p;
        p.var = VarTag::p;
        p.c.resize(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) p.c[i] = Cplx(to_double(e[i]), 0.0);
        p.exact = std::move(e);
        p.trim();
        return p;
    };
    PolyC p2 = mk({0, 0, 1});
    PolyC p2m4 = mk({0, 0, 1, 0, -1});
    PolyC kern = mk({1 - 4 * kappa * kappa, 8 * kappa, -5});
    return (p2 * a).scaled_exact(-kappa) + (p2m4 * a.derivative()).scaled_exact(Rational(1, 2)) +
           (kern * a).antiderivative().scaled_exact(Rational(1, 8));
}

} // namespace

std::vector<PolyC> B_recursive_poly(const Rational& kappa, const Rational& omega, int N, Sign sign) {
    if (N < 1) throw ValidationError("N must be >= 1");
    std::vector<PolyC> B;
    PolyC one = PolyC::constant_exact(Rational(1), VarTag::p);
    B.push_back(arec_step_exact(one, kappa)); // B_1 = A_1
    for (int n = 1; n < N; ++n) {
        PolyC next = arec_step_exact(B.back(), kappa) + B.back().scaled_exact(Rational(n - 1) * omega);
        B.push_back(next);
    }
    if (sign == Sign::minus)
        for (PolyC& b : B) b = b.reflect();
    return B;
}

namespace {

double binom_d(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Cplx leibniz_f(const std::vector<Cplx>& f, const std::vector<Cplx>& g, int m) {
    Cplx s = 0.0;
    for (int i = 0; i <= m; ++i) s += binom_d(m, i) * f[i] * g[m - i];
    return s;
}

} // namespace

std::vector<RayFunction> B_recursive_ray(const EquationSpec& eq, RayChartPtr chart,
                                         double omega, int N) {
    if (N < 1) throw ValidationError("N must be >= 1");
    const double pm = (chart->sign == Sign::plus) ? 1.0 : -1.0;
    const int M = chart->M;
    const int Q = N; // B_1 carries order Q-1
    if (chart->jet_order < Q + 1)
        throw ValidationError("chart jet_order too small for B_recursive_ray");

    // B_1 = A_1 with jets, from one collocation level
    RayJetTable a1 = coeffs_collocation_jets(eq, chart, 1, Q - 1);
    std::vector<std::vector<std::vector<Cplx>>> B(N);
    B[0] = a1.d[1];

    for (int n = 1; n < N; ++n) {
        const int ord = Q - (n + 1);
        const auto& bn = B[n - 1];
        std::vector<std::vector<Cplx>> prod(M);
        std::vector<Cplx> prod0(M);
        for (int j = 0; j < M; ++j) {
            // kern^{(i)} = (1/4)(phi^2)^{(i)} - pm (1/2) phi^{(i+1)} - psi^{(i)}
            const auto& ph = chart->phi_d[j];
            const auto& ps = chart->psi_d[j];
            int kord = std::max(ord - 1, 0);
            std::vector<Cplx> kd(kord + 1);
            for (int i = 0; i <= kord; ++i)
                kd[i] = 0.25 * leibniz_f(ph, ph, i) - pm * 0.5 * ph[i + 1] - ps[i];
            prod[j].resize(kord + 1);
            for (int m = 0; m <= kord; ++m) prod[j][m] = leibniz_f(kd, bn[j], m);
            prod0[j] = prod[j][0];
        }
        RayFunction H = RayFunction(chart, prod0).integrate_from_far();
        B[n].assign(M, std::vector<Cplx>(ord + 1, Cplx(0.0)));
        const double nw = (n - 1) * omega; // (n-1) omega with B_n indexed from 1
        for (int j = 0; j < M; ++j) {
            const auto& ph = chart->phi_d[j];
            for (int m = 0; m <= ord; ++m) {
                Cplx v = nw * bn[j][m] - 0.5 * leibniz_f(ph, bn[j], m) - pm * 0.5 * bn[j][m + 1];
                v += -pm * 0.5 * (m == 0 ? H.values()[j] : prod[j][m - 1]);
                B[n][j][m] = v;
            }
        }
    }

    std::vector<RayFunction> out;
    for (int n = 0; n < N; ++n) {
        std::vector<Cplx> v(M);
        for (int j = 0; j < M; ++j) v[j] = B[n][j][0];
        out.emplace_back(chart, std::move(v));
    }
    return out;
}

Cplx rising_denominator(Cplx u, double omega, int n) {
    Cplx r = u;
    for (int k = 1; k <= n; ++k) r *= (u + static_cast<double>(k) * omega);
    return r;
}

Cplx rising_denominator_log(Cplx u, double omega, int n) {
    Cplx logsum = 0.0;
    for (int k = 0; k <= n; ++k) logsum += std::log(u + static_cast<double>(k) * omega);
    return std::exp(logsum);
}

FactorialEvalResult eval_factorial_series(const FactorialSeriesExpansion& exp, Cplx u, int N) {
    if (u.real() <= 0.0) throw ValidationError("eval_factorial_series requires Re u > 0");
    if (N > static_cast<int>(exp.B.size())) throw ValidationError("N exceeds available B coefficients");
    FactorialEvalResult out;
    Cplx den = u;
    for (int n = 0; n < N; ++n) {
        out.value += exp.B[n] / den;
        den *= (u + static_cast<double>(n + 1) * exp.omega);
    }
    const double sigma = exp.sigma > 0.0 ? exp.sigma : std::min(exp.omega / 2.0, u.real() / 2.0);
    out.sigma = sigma;
    if (u.real() > exp.omega && exp.omega > sigma) {
        double a = u.real() / exp.omega;
        double logtail = -sigma / exp.omega * std::log(2.0) + std::lgamma(a - 1.0) -
                         std::log(exp.omega - sigma) + exp.V_sigma - std::log(exp.weight) +
                         (1.0 - a) * std::log(N + 0.5);
        out.tail_bound = exp.C_bound * std::exp(logtail);
        out.certified = true;
    } else {
        out.tail_bound = std::numeric_limits<double>::quiet_NaN();
        out.certified = false;
    }
    return out;
}

} // namespace borelwkb
