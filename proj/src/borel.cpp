#include "borelwkb/borel.hpp"
#include "borelwkb/errors.hpp"
#include "borelwkb/quadrature.hpp"

#include <cmath>
#include <algorithm>

namespace borelwkb {

BorelSeries borel_series(const CoeffTable& table, Cplx point, int N) {
    if (table.order() < N) throw ValidationError("coefficient table shorter than requested series");
    BorelSeries s;
    s.point = point;
    s.sign = table.sign;
    if (table.is_poly()) {
        s.xi = Cplx(0.0); // xi is not tracked by the polynomial backend
    } else {
        s.xi = table.ray(0).chart()->xi_of_s(point.real());
    }
    s.coeffs.resize(N);
    double fact = 1.0;
    for (int n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        s.coeffs[n] = table.eval(n + 1, point) / fact;
    }
    double tail1 = std::abs(s.coeffs[N - 1]);
    double tail2 = N >= 2 ? std::abs(s.coeffs[N - 2]) : 0.0;
    s.radius_estimate = tail1 > 0.0 ? tail2 / tail1 : 1e30;
    if (s.radius_estimate <= 0.0) s.radius_estimate = 1e-30;
    return s;
}

PadeApprox pade(const BorelSeries& series, int L, int M) {
    const auto& c = series.coeffs;
    if (L + M + 1 > static_cast<int>(c.size()))
        throw ValidationError("pade: L+M+1 exceeds series length");
    auto cat = [&](int k) -> Cplx { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Cplx(0.0); };

    PadeApprox r;
    r.L = L;
    r.M = M;
    std::vector<Cplx> b(M + 1, Cplx(0.0));
    b[0] = 1.0;
    if (M > 0) {
        // Toeplitz system sum_{j=1..M} b_j c_{L+i-j} = -c_{L+i}, i=1..M
        std::vector<std::vector<Cplx>> A(M, std::vector<Cplx>(M + 1));
        double scale = 0.0;
        for (int i = 1; i <= M; ++i) {
            for (int j = 1; j <= M; ++j) {
                A[i - 1][j - 1] = cat(L + i - j);
                scale = std::max(scale, std::abs(A[i - 1][j - 1]));
            }
            A[i - 1][M] = -cat(L + i);
        }
        if (scale == 0.0) scale = 1.0;
        for (int col = 0; col < M; ++col) {
            int piv = col;
            for (int rI = col + 1; rI < M; ++rI)
                if (std::abs(A[rI][col]) > std::abs(A[piv][col])) piv = rI;
            if (std::abs(A[piv][col]) < 1e-13 * scale)
                throw DegeneratePade("rank-deficient Pade system (reduce M)");
            std::swap(A[piv], A[col]);
            for (int rI = col + 1; rI < M; ++rI) {
                Cplx f = A[rI][col] / A[col][col];
                for (int cc = col; cc <= M; ++cc) A[rI][cc] -= f * A[col][cc];
            }
        }
        for (int i = M - 1; i >= 0; --i) {
            Cplx s = A[i][M];
            for (int j = i + 1; j < M; ++j) s -= A[i][j] * b[j + 1];
            b[i + 1] = s / A[i][i];
        }
    }
    std::vector<Cplx> a(L + 1, Cplx(0.0));
    for (int i = 0; i <= L; ++i) {
        Cplx s = cat(i);
        for (int j = 1; j <= std::min(i, M); ++j) s += b[j] * cat(i - j);
        a[i] = s;
    }
    r.num = PolyC(std::move(a), VarTag::t);
    r.den = PolyC(std::move(b), VarTag::t);
    return r;
}

std::vector<Cplx> poly_roots(const PolyC& p) {
    int deg = p.degree();
    while (deg > 0 && std::abs(p.c[deg]) == 0.0) --deg;
    if (deg <= 0) return {};
    std::vector<Cplx> a(p.c.begin(), p.c.begin() + deg + 1);
    for (auto& x : a) x /= a[deg];
    std::vector<Cplx> r(deg);
    for (int i = 0; i < deg; ++i) r[i] = std::pow(Cplx(0.4, 0.9), i + 1);
    for (int it = 0; it < 500; ++it) {
        double move = 0.0;
        for (int i = 0; i < deg; ++i) {
            Cplx v = 0.0;
            for (int k = deg; k >= 0; --k) v = v * r[i] + a[k];
            Cplx den = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (r[i] - r[j]);
            if (std::abs(den) == 0.0) den = 1e-30;
            Cplx delta = v / den;
            r[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return r;
}

namespace {

double dist_to_segment(Cplx w, double T) {
    double x = std::clamp(w.real(), 0.0, T);
    return std::abs(w - Cplx(x, 0.0));
}

Cplx integrate_laplace(const PadeApprox& pa, Cplx u, double T, double& err) {
    auto f = [&](double t) { return std::exp(-u * t) * (pa.num.eval(t) / pa.den.eval(t)); };
    // panels sized to the e^{-Re u t} decay
    double panel = std::min(T, 8.0 / std::max(u.real(), 1e-3));
    Cplx total = 0.0;
    err = 0.0;
    double a = 0.0;
    while (a < T) {
        double b = std::min(T, a + panel);
        QuadResult q = integrate_adaptive(f, a, b, 1e-15, 1e-14);
        total += q.value;
        err += q.err;
        a = b;
    }
    return total;
}

} // namespace

BorelSummation laplace_eval(const BorelSeries& series, Cplx u, int L, int M,
                            double d, double bound_scale) {
    if (u.real() <= 0.0) throw ValidationError("laplace_eval requires Re u > 0");
    BorelSummation out;
    out.series = series;
    out.pade_L = L;
    out.pade_M = M;
    out.u = u;
    out.T = std::max(4.0 * d, (38.0 + std::log1p(std::max(bound_scale, 0.0))) / u.real());

    PadeApprox pa = pade(series, L, M);
    for (Cplx root : poly_roots(pa.den)) {
        if (dist_to_segment(root, out.T) < 1e-3)
            throw PoleOnContour("Pade denominator root near [0,T]; reduce M or move xi");
    }
    double qerr = 0.0;
    out.value = integrate_laplace(pa, u, out.T, qerr);

    double step_diff = 0.0;
    if (L >= 1 && M >= 1) {
        PadeApprox lower = pade(series, L - 1, M - 1);
        bool lower_ok = true;
        for (Cplx root : poly_roots(lower.den))
            if (dist_to_segment(root, out.T) < 1e-3) lower_ok = false;
        if (lower_ok) {
            double e2 = 0.0;
            Cplx v2 = integrate_laplace(lower, u, out.T, e2);
            step_diff = std::abs(out.value - v2);
        }
    }
    out.err_estimate = std::max(qerr, step_diff);
    return out;
}

BorelSummation laplace_eval_auto(const BorelSeries& series, Cplx u, double d) {
    int N = static_cast<int>(series.coeffs.size());
    int LM = std::max(1, (N - 1) / 2);
    double scale = 1.0;
    for (const Cplx& c : series.coeffs) scale = std::max(scale, std::abs(c));
    for (int m = LM; m >= 1; --m) {
        try {
            return laplace_eval(series, u, m, m, d, scale);
        } catch (const PoleOnContour&) {
            if (m == 1) throw;
        } catch (const DegeneratePade&) {
            if (m == 1) throw;
        }
    }
    throw PoleOnContour("no admissible Pade order");
}

} // namespace borelwkb
