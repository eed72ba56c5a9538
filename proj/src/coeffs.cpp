#include "borelwkb/coeffs.hpp"
#include "borelwkb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace borelwkb {

Cplx CoeffTable::eval(int n, Cplx p_or_s) const {
    const auto& e = entries.at(n);
    if (std::holds_alternative<PolyC>(e)) return std::get<PolyC>(e).eval(p_or_s);
    return std::get<RayFunction>(e).eval_s(p_or_s.real());
}

namespace {

PolyC bessel_step(const PolyC& a, Cplx kappa) {
    // A_{n+1} = -kappa p^2 A + (1/2) p^2 (1-p^2) A' + (1/8) int_0^p (1 - 4k^2 + 8k t - 5 t^2) A dt
    PolyC p2(std::vector<Cplx>{0.0, 0.0, 1.0}, VarTag::p);
    PolyC p2m4(std::vector<Cplx>{0.0, 0.0, 1.0, 0.0, -1.0}, VarTag::p); // p^2 - p^4
    PolyC kern(std::vector<Cplx>{1.0 - 4.0 * kappa * kappa, 8.0 * kappa, -5.0}, VarTag::p);
    PolyC t1 = (p2 * a).scaled(-kappa);
    PolyC t2 = (p2m4 * a.derivative()).scaled(0.5);
    PolyC t3 = (kern * a).antiderivative().scaled(0.125);
    return t1 + t2 + t3;
}

PolyC bessel_step_exact(const PolyC& a, const Rational& kappa) {
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
    PolyC t1 = (p2 * a).scaled_exact(-kappa);
    PolyC t2 = (p2m4 * a.derivative()).scaled_exact(Rational(1, 2));
    PolyC t3 = (kern * a).antiderivative().scaled_exact(Rational(1, 8));
    return t1 + t2 + t3;
}

} // namespace

PolyC bessel_coeff_p(int n, Cplx kappa, Sign sign) {
    if (n < 0) throw ValidationError("n must be >= 0");
    PolyC a = PolyC::constant(1.0, VarTag::p);
    for (int k = 0; k < n; ++k) a = bessel_step(a, kappa);
    if (sign == Sign::minus) a = a.reflect(); // A_n^-(p) = A_n^+(-p)
    a.var = VarTag::p;
    return a;
}

PolyC bessel_coeff_p_exact(int n, const Rational& kappa, Sign sign) {
    if (n < 0) throw ValidationError("n must be >= 0");
    PolyC a = PolyC::constant_exact(Rational(1), VarTag::p);
    for (int k = 0; k < n; ++k) a = bessel_step_exact(a, kappa);
    if (sign == Sign::minus) a = a.reflect();
    a.var = VarTag::p;
    return a;
}

CoeffTable bessel_coeff_table(int N, Cplx kappa, Sign sign) {
    CoeffTable t;
    t.sign = sign;
    t.backend = Backend::bessel_poly;
    t.kappa = kappa;
    t.has_kappa = true;
    PolyC a = PolyC::constant(1.0, VarTag::p);
    t.entries.push_back(a);
    for (int n = 0; n < N; ++n) {
        a = bessel_step(a, kappa);
        t.entries.push_back(sign == Sign::minus ? a.reflect() : a);
    }
    return t;
}

CoeffTable bessel_coeff_table_exact(int N, const Rational& kappa, Sign sign) {
    CoeffTable t;
    t.sign = sign;
    t.backend = Backend::bessel_poly;
    t.kappa = Cplx(to_double(kappa), 0.0);
    t.has_kappa = true;
    PolyC a = PolyC::constant_exact(Rational(1), VarTag::p);
    t.entries.push_back(a);
    for (int n = 0; n < N; ++n) {
        a = bessel_step_exact(a, kappa);
        t.entries.push_back(sign == Sign::minus ? a.reflect() : a);
    }
    return t;
}

Cplx oscillator_A1(Cplx lambda, int ell, Cplx z, Sign sign) {
    if (z == Cplx(0.0) || z == Cplx(1.0))
        throw DomainError("oscillator_A1 undefined at z in {0,1}");
    Cplx w = z - 1.0;
    if (w.imag() == 0.0 && w.real() < 0.0)
        throw DomainError("oscillator_A1 on the branch cut");
    const double pm = (sign == Sign::plus) ? 1.0 : -1.0;
    Cplx lh = lambda + 0.5;
    Cplx rational_part = (0.375 + pm * lh + 0.5 * lh * lh) / (w * w);
    Cplx log_part = std::log(1.0 - 1.0 / z) + 1.0 / z;
    return pm * rational_part + pm * static_cast<double>(ell) * (ell + 1) * log_part;
}

namespace {

// binomial table for the Leibniz products (orders stay small)
double binom(int n, int k) {
    static std::vector<std::vector<double>> tab;
    if (static_cast<int>(tab.size()) <= n) {
        int old = static_cast<int>(tab.size());
        tab.resize(n + 1);
        for (int i = old; i <= n; ++i) {
            tab[i].assign(i + 1, 1.0);
            for (int j = 1; j < i; ++j) tab[i][j] = tab[i - 1][j - 1] + tab[i - 1][j];
        }
    }
    return tab[n][k];
}

// (f g)^{(m)} at one node
Cplx leibniz(const std::vector<Cplx>& f, const std::vector<Cplx>& g, int m) {
    Cplx s = 0.0;
    for (int i = 0; i <= m; ++i) s += binom(m, i) * f[i] * g[m - i];
    return s;
}

// kern^{(i)} = (1/4)(phi^2)^{(i)} - pm*(1/2) phi^{(i+1)} - psi^{(i)}
std::vector<Cplx> kernel_derivs(const RayChart& chart, int j, int order, double pm) {
    std::vector<Cplx> k(order + 1);
    const auto& ph = chart.phi_d[j];
    const auto& ps = chart.psi_d[j];
    for (int i = 0; i <= order; ++i)
        k[i] = 0.25 * leibniz(ph, ph, i) - pm * 0.5 * ph[i + 1] - ps[i];
    return k;
}

} // namespace

RayJetTable coeffs_collocation_jets(const EquationSpec& eq, RayChartPtr chart, int N, int m_keep) {
    (void)eq;
    const double pm = (chart->sign == Sign::plus) ? 1.0 : -1.0;
    const int M = chart->M;
    const int Q = N + m_keep; // jet order carried by A_0
    if (chart->jet_order < Q + 1)
        throw ValidationError("chart jet_order too small for the requested table");

    RayJetTable out;
    out.chart = chart;
    out.d.resize(N + 1);
    out.d[0].assign(M, std::vector<Cplx>(Q + 1, Cplx(0.0)));
    for (int j = 0; j < M; ++j) out.d[0][j][0] = 1.0;

    for (int n = 0; n < N; ++n) {
        const int ord_next = Q - (n + 1);
        const auto& an = out.d[n];
        // (kern * A_n)^{(m)} for m = 0..max(ord_next-1,0)
        std::vector<std::vector<Cplx>> prod(M);
        std::vector<Cplx> prod0(M);
        for (int j = 0; j < M; ++j) {
            std::vector<Cplx> kd = kernel_derivs(*chart, j, std::max(ord_next - 1, 0), pm);
            prod[j].resize(std::max(ord_next, 1));
            for (int m = 0; m < std::max(ord_next, 1); ++m) prod[j][m] = leibniz(kd, an[j], m);
            prod0[j] = prod[j][0];
        }
        RayFunction H = RayFunction(chart, prod0).integrate_from_far();
        out.d[n + 1].assign(M, std::vector<Cplx>(ord_next + 1, Cplx(0.0)));
        for (int j = 0; j < M; ++j) {
            const auto& ph = chart->phi_d[j];
            for (int m = 0; m <= ord_next; ++m) {
                Cplx v = -0.5 * leibniz(ph, an[j], m) - pm * 0.5 * an[j][m + 1];
                v += -pm * 0.5 * (m == 0 ? H.values()[j] : prod[j][m - 1]);
                out.d[n + 1][j][m] = v;
            }
        }
    }
    return out;
}

CoeffTable coeffs_collocation(const EquationSpec& eq, RayChartPtr chart, int N) {
    RayJetTable jets = coeffs_collocation_jets(eq, chart, N, 0);

    CoeffTable t;
    t.sign = chart->sign;
    t.backend = (eq.app == "oscillator") ? Backend::oscillator : Backend::collocation;
    t.kappa = eq.kappa;
    t.lambda = eq.lambda;
    t.ell = eq.ell;
    t.has_kappa = (eq.app == "bessel");
    t.has_lambda = (eq.app == "oscillator");
    for (int n = 0; n <= N; ++n) {
        std::vector<Cplx> v(chart->M);
        for (int j = 0; j < chart->M; ++j) v[j] = jets.d[n][j][0];
        t.entries.push_back(RayFunction(chart, std::move(v)));
    }
    return t;
}

ExpCoeffTables coeffs_exponent(const EquationSpec& eq, RayChartPtr chart, Sign sign, int N) {
    (void)eq;
    if (sign != chart->sign) throw ValidationError("chart/sign mismatch");
    if (N < 1) throw ValidationError("N must be >= 1");
    const double pm = (sign == Sign::plus) ? 1.0 : -1.0;
    const int M = chart->M;
    const int Q = N; // F_1 carries order Q-1, F_n order Q-n
    if (chart->jet_order < Q + 1)
        throw ValidationError("chart jet_order too small for the requested table");

    // jets of F_n: [n-1][node][m]
    std::vector<std::vector<std::vector<Cplx>>> F(N);
    F[0].assign(M, std::vector<Cplx>(Q, Cplx(0.0)));
    for (int j = 0; j < M; ++j) {
        const auto& ph = chart->phi_d[j];
        const auto& ps = chart->psi_d[j];
        for (int m = 0; m <= Q - 1; ++m)
            F[0][j][m] = -0.25 * ph[m + 1] - pm * 0.125 * leibniz(ph, ph, m) + pm * 0.5 * ps[m];
    }
    for (int n = 1; n < N; ++n) {
        const int ord = Q - (n + 1);
        F[n].assign(M, std::vector<Cplx>(ord + 1, Cplx(0.0)));
        for (int j = 0; j < M; ++j) {
            const auto& ph = chart->phi_d[j];
            for (int m = 0; m <= ord; ++m) {
                Cplx v = -0.5 * leibniz(ph, F[n - 1][j], m) - pm * 0.5 * F[n - 1][j][m + 1];
                Cplx s = 0.0;
                for (int k = 1; k <= n - 1; ++k) s += leibniz(F[k - 1][j], F[n - k - 1][j], m);
                v += -pm * 0.5 * s;
                F[n][j][m] = v;
            }
        }
    }

    ExpCoeffTables out;
    for (int n = 0; n < N; ++n) {
        std::vector<Cplx> fv(M);
        for (int j = 0; j < M; ++j) fv[j] = F[n][j][0];
        out.F.emplace_back(chart, std::move(fv));
    }
    for (int n = 0; n < N; ++n) {
        RayFunction e = out.F[n].integrate_from_far();
        if (out.F[n].max_abs() > 0 && std::abs(e.values().back()) > 1e-5 * std::max(1.0, e.max_abs()))
            throw TruncationError("exponent coefficient fails the far-end decay check");
        out.E.push_back(e);
    }
    return out;
}

std::vector<Cplx> exp_to_series(const std::vector<Cplx>& E, int N) {
    if (static_cast<int>(E.size()) < N) throw ValidationError("need at least N exponent coefficients");
    std::vector<Cplx> A(N + 1, Cplx(0.0));
    A[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        Cplx s = E[n - 1];
        for (int k = 1; k <= n - 1; ++k) s += (static_cast<double>(k) / n) * E[k - 1] * A[n - k];
        A[n] = s;
    }
    return std::vector<Cplx>(A.begin() + 1, A.end());
}

CoeffTable coeffs_exponent_table(const EquationSpec& eq, RayChartPtr chart, Sign sign, int N) {
    ExpCoeffTables tabs = coeffs_exponent(eq, chart, sign, N);
    const int M = chart->M;
    CoeffTable t;
    t.sign = sign;
    t.backend = Backend::collocation;
    t.kappa = eq.kappa;
    t.lambda = eq.lambda;
    t.ell = eq.ell;
    t.entries.push_back(RayFunction::constant(chart, 1.0));
    std::vector<std::vector<Cplx>> av(N, std::vector<Cplx>(M));
    for (int j = 0; j < M; ++j) {
        std::vector<Cplx> Ej(N);
        for (int n = 0; n < N; ++n) Ej[n] = tabs.E[n].values()[j];
        std::vector<Cplx> Aj = exp_to_series(Ej, N);
        for (int n = 0; n < N; ++n) av[n][j] = Aj[n];
    }
    for (int n = 0; n < N; ++n) t.entries.push_back(RayFunction(chart, std::move(av[n])));
    return t;
}

CoeffTable coeffs_collocation_auto(const EquationSpec& eq, const XiPoint& anchor, Sign sign,
                                   int N, RayChartPtr* chart_out, double S) {
    for (int M = 128; M <= 512; M *= 2) {
        RayChartPtr chart = build_ray_chart(eq, anchor, sign, M, S, N + 3);
        CoeffTable t = coeffs_collocation(eq, chart, N);
        double tail = 0.0;
        for (int n = 1; n <= N; ++n) tail = std::max(tail, t.ray(n).cheb_tail_rel());
        if (tail < 1e-12 || M == 512) {
            bool decay_ok = true;
            for (int n = 1; n <= N; ++n) {
                const RayFunction& a = t.ray(n);
                if (a.max_abs() > 0 && a.far_value_abs() > 1e-6 * a.max_abs()) decay_ok = false;
            }
            if (M == 512 && tail > 1e-8)
                throw TruncationError("ray grid did not resolve the coefficients");
            if (!decay_ok)
                throw TruncationError("coefficients fail the far-end decay check");
            if (chart_out) *chart_out = chart;
            return t;
        }
    }
    throw TruncationError("unreachable");
}

} // namespace borelwkb
