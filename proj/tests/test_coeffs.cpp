#include "doctest.h"

#include <cmath>
#include "borelwkb/coeffs.hpp"
#include "borelwkb/errors.hpp"

using namespace borelwkb;

namespace {

// golden table: coefficient of p^j in A_n as an exact function of kappa
std::vector<Rational> golden_bessel(int n, const Rational& k) {
    Rational k2 = k * k, k3 = k2 * k, k4 = k2 * k2, k5 = k4 * k, k6 = k4 * k2;
    switch (n) {
        case 0: return {1};
        case 1:
            return {0, (1 - 4 * k2) / 8, -k / 2, Rational(-5, 24)};
        case 2:
            return {0, 0,
                    (9 - 40 * k2 + 16 * k4) / 128,
                    -(29 * k - 20 * k3) / 48,
                    -(77 - 140 * k2) / 192,
                    35 * k / 48,
                    Rational(385, 1152)};
        case 3:
            return {0, 0, 0,
                    (225 - 1036 * k2 + 560 * k4 - 64 * k6) / 3072,
                    -(751 * k - 728 * k3 + 112 * k5) / 768,
                    -(4563 - 12040 * k2 + 2800 * k4) / 5120,
                    (3619 * k - 1540 * k3) / 1152,
                    (17017 - 20020 * k2) / 9216,
                    Rational(-5005, 2304) * k,
                    Rational(-85085, 82944)};
        default: return {};
    }
}

EquationSpec bessel_eq(Cplx kappa) { return make_bessel_equation(kappa, 0.3, 0.1); }

// p through the tracked branch: p = -i (z^2-1)^{-1/2} = 1/(z sqrt_f0)
Cplx p_of(const XiPoint& pt) { return 1.0 / (pt.z * pt.sqrt_f0); }

} // namespace

TEST_CASE("golden polynomials, exact rational arithmetic") {
    for (const Rational& k : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
        for (int n = 0; n <= 3; ++n) {
            PolyC a = bessel_coeff_p_exact(n, k, Sign::plus);
            REQUIRE(a.has_exact());
            std::vector<Rational> want = golden_bessel(n, k);
            while (!want.empty() && want.back() == 0) want.pop_back();
            REQUIRE(a.exact->size() == want.size());
            for (std::size_t j = 0; j < want.size(); ++j) CHECK((*a.exact)[j] == want[j]);
        }
    }
}

TEST_CASE("spec table examples at kappa = 0") {
    PolyC a2 = bessel_coeff_p_exact(2, Rational(0), Sign::plus);
    CHECK((*a2.exact)[2] == Rational(9, 128));
    CHECK((*a2.exact)[4] == Rational(-77, 192));
    CHECK((*a2.exact)[6] == Rational(385, 1152));
    PolyC a3 = bessel_coeff_p_exact(3, Rational(0), Sign::plus);
    CHECK((*a3.exact)[3] == Rational(225, 3072));
    CHECK((*a3.exact)[5] == Rational(-4563, 5120));
    CHECK((*a3.exact)[7] == Rational(17017, 9216));
    CHECK((*a3.exact)[9] == Rational(-85085, 82944));
}

TEST_CASE("degree law and vanishing at the origin") {
    CoeffTable t = bessel_coeff_table(12, Cplx(1.0 / 3.0, 0.0), Sign::plus);
    for (int n = 0; n <= 12; ++n) {
        CHECK(t.poly(n).degree() == 3 * n);
        if (n >= 1) CHECK(t.poly(n).eval(0.0) == Cplx(0.0));
    }
    // reality for real kappa
    for (int n = 1; n <= 6; ++n)
        for (const Cplx& c : t.poly(n).c) CHECK(c.imag() == 0.0);
}

TEST_CASE("minus branch is the p -> -p reflection") {
    PolyC plus = bessel_coeff_p(2, Cplx(0.25, 0.0), Sign::plus);
    PolyC minus = bessel_coeff_p(2, Cplx(0.25, 0.0), Sign::minus);
    Cplx p(0.3, -0.4);
    CHECK(std::abs(minus.eval(p) - plus.eval(-p)) < 1e-14);
}

TEST_CASE("oscillator A1 closed form") {
    CHECK(std::abs(oscillator_A1(-0.5, 0, 2.0, Sign::plus) - Cplx(0.375)) < 1e-15);
    CHECK(std::abs(oscillator_A1(-0.5, 0, 2.0, Sign::minus) - Cplx(-0.375)) < 1e-15);
    // vanishes at infinity
    CHECK(std::abs(oscillator_A1(0.7, 2, 1e8, Sign::plus)) < 1e-7);
    CHECK_THROWS_AS(oscillator_A1(0.0, 1, Cplx(1.0), Sign::plus), DomainError);
}

TEST_CASE("exp_to_series") {
    // E = (e, 0, 0, ...): A_n = e^n/n!
    std::vector<Cplx> E = {Cplx(0.0, 0.7), 0.0, 0.0, 0.0, 0.0};
    auto A = exp_to_series(E, 5);
    double fact = 1.0;
    Cplx pw = 1.0;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        pw *= E[0];
        CHECK(std::abs(A[n - 1] - pw / fact) < 1e-15);
    }
    // E1 = E2 = 1
    std::vector<Cplx> E2 = {1.0, 1.0, 0.0};
    auto A2 = exp_to_series(E2, 3);
    CHECK(std::abs(A2[0] - Cplx(1.0)) < 1e-15);
    CHECK(std::abs(A2[1] - Cplx(1.5)) < 1e-15);
    CHECK(std::abs(A2[2] - Cplx(7.0 / 6.0)) < 1e-15);
    // brute-force oracle: multiply out exp(x + x^2) term by term
    {
        std::vector<double> series(4, 0.0);
        series[0] = 1.0;
        std::vector<double> termpow = {1.0, 0.0, 0.0, 0.0}; // (x+x^2)^k accumulates
        double kfact = 1.0;
        std::vector<double> base = {0.0, 1.0, 1.0, 0.0};
        for (int k = 1; k <= 3; ++k) {
            std::vector<double> next(4, 0.0);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; i + j < 4; ++j) next[i + j] += termpow[i] * base[j];
            termpow = next;
            kfact *= k;
            for (int i = 0; i < 4; ++i) series[i] += termpow[i] / kfact;
        }
        CHECK(series[3] == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
    }
    // all zero
    auto A3 = exp_to_series(std::vector<Cplx>(4, Cplx(0.0)), 4);
    for (auto& a : A3) CHECK(a == Cplx(0.0));
}

TEST_CASE("collocation: zero perturbation and constant one") {
    EquationSpec eq;
    eq.app = "custom";
    eq.pot.z0 = 0.0;
    eq.pot.f0 = [](Cplx) { Jet j; j.v = 1.0; return j; };
    eq.pot.f1 = [](Cplx) { return Jet{}; };
    eq.pot.f2 = [](Cplx) { return Jet{}; };
    eq.pot.f1_identically_zero = true;
    auto zero_series = [](Cplx, int order) { return taylor::Series(order + 1, Cplx(0.0)); };
    eq.pot.f0_series = [](Cplx, int order) {
        taylor::Series s(order + 1, Cplx(0.0));
        s[0] = 1.0;
        return s;
    };
    eq.pot.f1_series = zero_series;
    eq.pot.f2_series = zero_series;
    XiPoint anchor;
    anchor.z = 0.0;
    anchor.xi = 0.0;
    anchor.sqrt_f0 = 1.0;
    anchor.weight = 1.0;
    RayChartPtr chart = build_ray_chart(eq, anchor, Sign::minus, 64, 2.0);
    CoeffTable t = coeffs_collocation(eq, chart, 3);
    CHECK(t.ray(0).max_abs() == 1.0);
    for (int n = 1; n <= 3; ++n) CHECK(t.ray(n).max_abs() < 1e-10);
    ExpCoeffTables ef = coeffs_exponent(eq, chart, Sign::minus, 3);
    for (auto& f : ef.F) CHECK(f.max_abs() < 1e-14);
    for (auto& e : ef.E) CHECK(e.max_abs() < 1e-14);
}

TEST_CASE("triple-backend equality on the Bessel application") {
    const Cplx kappa(0.5, 0.0);
    EquationSpec eq = bessel_eq(kappa);
    XiPoint anchor = compute_xi(eq.pot, 2.0);
    RayChartPtr chart;
    CoeffTable colloc = coeffs_collocation_auto(eq, anchor, Sign::minus, 6, &chart);
    CoeffTable poly = bessel_coeff_table(6, kappa, Sign::minus);
    CoeffTable expo = coeffs_exponent_table(eq, chart, Sign::minus, 6);
    for (int n = 1; n <= 6; ++n) {
        double scale = std::max(1.0, colloc.ray(n).max_abs());
        for (int j = 0; j < chart->M; j += 9) {
            Cplx p = p_of(chart->path.samples[j]);
            Cplx via_poly = poly.poly(n).eval(p);
            Cplx via_ray = colloc.ray(n).values()[j];
            Cplx via_exp = expo.ray(n).values()[j];
            CHECK(std::abs(via_poly - via_ray) <= 1e-7 * scale);
            CHECK(std::abs(via_exp - via_ray) <= 1e-7 * scale);
        }
    }
}

TEST_CASE("appendix route at kappa=0, N=2, tight tolerance") {
    EquationSpec eq = bessel_eq(0.0);
    XiPoint anchor = compute_xi(eq.pot, 2.0);
    RayChartPtr chart = build_ray_chart(eq, anchor, Sign::minus, 256, 2.0);
    CoeffTable expo = coeffs_exponent_table(eq, chart, Sign::minus, 2);
    CoeffTable poly = bessel_coeff_table(2, 0.0, Sign::minus);
    for (int n = 1; n <= 2; ++n)
        for (int j = 0; j < chart->M; j += 5) {
            Cplx p = p_of(chart->path.samples[j]);
            CHECK(std::abs(expo.ray(n).values()[j] - poly.poly(n).eval(p)) <= 1e-8);
        }
}

TEST_CASE("F1 equals +-psi/2 when phi vanishes") {
    EquationSpec eq = make_oscillator_equation(Cplx(-0.5), 1, 0.25, 0.1);
    XiPoint anchor = compute_xi(eq.pot, Cplx(1.0) + std::polar(2.0, 0.7));
    for (Sign sign : {Sign::plus, Sign::minus}) {
        RayChartPtr chart = build_ray_chart(eq, anchor, sign, 96, 2.0);
        ExpCoeffTables ef = coeffs_exponent(eq, chart, sign, 1);
        double pm = sign == Sign::plus ? 1.0 : -1.0;
        for (int j = 0; j < chart->M; j += 7)
            CHECK(std::abs(ef.F[0].values()[j] - pm * 0.5 * chart->psi[j]) < 1e-12);
    }
}

TEST_CASE("gevrey growth stays bounded") {
    CoeffTable t = bessel_coeff_table(13, 0.0, Sign::minus);
    XiPoint pt;
    EquationSpec eq = bessel_eq(0.0);
    XiPoint anchor = compute_xi(eq.pot, 2.0);
    Cplx p = 1.0 / (anchor.z * anchor.sqrt_f0);
    double lowmax = 0.0, highmax = 0.0;
    double fact = 1.0;
    for (int n = 1; n <= 12; ++n) {
        fact *= n;
        double ratio = std::pow(std::abs(t.poly(n + 1).eval(p)) / fact, 1.0 / n);
        if (n >= 5 && n <= 8) lowmax = std::max(lowmax, ratio);
        if (n >= 9) highmax = std::max(highmax, ratio);
        if (n >= 5) CHECK(ratio < 1.0);
    }
    CHECK(highmax <= 1.3 * lowmax);
}
