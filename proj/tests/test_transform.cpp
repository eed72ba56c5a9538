#include "doctest.h"

#include <cmath>
#include "borelwkb/transform.hpp"
#include "borelwkb/errors.hpp"

using namespace borelwkb;

namespace {

PotentialTriple constant_potential() {
    PotentialTriple pot;
    pot.z0 = 0.0;
    pot.f0 = [](Cplx) { Jet j; j.v = 1.0; return j; };
    pot.f1 = [](Cplx) { return Jet{}; };
    pot.f2 = [](Cplx) { return Jet{}; };
    pot.f1_identically_zero = true;
    return pot;
}

Cplx bessel_xi_closed(Cplx z) {
    return Cplx(0, 1) * (std::sqrt(z - 1.0) * std::sqrt(z + 1.0) - std::acos(1.0 / z));
}

} // namespace

TEST_CASE("compute_xi closed forms") {
    auto osc = make_oscillator_potential(0.0, 1);
    XiPoint p = compute_xi(osc, 3.0);
    CHECK(std::abs(p.xi - Cplx(1.0)) < 1e-12);
    CHECK(std::abs(p.sqrt_f0 - Cplx(1.0)) < 1e-12);

    auto bes = make_bessel_potential(0.0);
    XiPoint q = compute_xi(bes, 2.0);
    Cplx expect = Cplx(0, 1) * (std::sqrt(3.0) - kPi / 3.0);
    CHECK(std::abs(q.xi - expect) < 1e-10);

    XiPoint r = compute_xi(osc, osc.z0);
    CHECK(std::abs(r.xi) < 1e-14);
}

TEST_CASE("XiPoint branch invariants") {
    auto bes = make_bessel_potential(0.5);
    for (Cplx z : {Cplx(1.7, 0.0), Cplx(2.0, 0.8), Cplx(3.0, -0.5)}) {
        XiPoint p = compute_xi(bes, z);
        Cplx f0 = bes.f0(z).v;
        CHECK(std::abs(p.sqrt_f0 * p.sqrt_f0 - f0) < 1e-12 * std::abs(f0));
        CHECK(std::abs(p.weight * p.weight * p.weight * p.weight * f0 - 1.0) < 1e-12);
    }
}

TEST_CASE("oscillator closed form on a grid") {
    auto osc = make_oscillator_potential(0.25, 2);
    for (int i = 0; i < 50; ++i) {
        double r = 0.3 + 4.7 * (i % 10) / 9.0;
        double th = -2.8 + 5.6 * (i / 10) / 4.0;
        Cplx z = 1.0 + r * std::exp(Cplx(0, th));
        XiPoint p = compute_xi(osc, z);
        Cplx expect = (z - 1.0) * (z - 1.0) / 4.0;
        CHECK(std::abs(p.xi - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("bessel closed form on a grid") {
    auto bes = make_bessel_potential(0.0);
    for (double re : {1.3, 2.0, 3.5}) {
        for (double im : {-0.7, 0.0, 0.6, 1.5}) {
            Cplx z(re, im);
            XiPoint p = compute_xi(bes, z);
            CHECK(std::abs(p.xi - bessel_xi_closed(z)) < 1e-10);
        }
    }
}

TEST_CASE("branch consistency along homotopic contours") {
    auto bes = make_bessel_potential(0.0);
    Cplx z(2.5, 1.0);
    XiPoint direct = compute_xi(bes, z);
    XiPoint via = compute_xi(bes, z, {Cplx(1.5, 0.5), Cplx(2.0, 1.2)});
    CHECK(std::abs(direct.xi - via.xi) < 1e-9);
    CHECK(std::abs(direct.sqrt_f0 - via.sqrt_f0) < 1e-9);
}

TEST_CASE("phi and psi") {
    auto bes = make_bessel_potential(0.75);
    Cplx z(2.0, 0.5);
    XiPoint p = compute_xi(bes, z);
    auto [phi, psi] = phi_psi_at(bes, p);
    Cplx expect_phi = -2.0 * 0.75 / (z * z - 1.0);
    CHECK(std::abs(phi - expect_phi) < 1e-12);
    Cplx zm1 = z * z - 1.0;
    Cplx expect_psi = 0.25 * (1.0 - 4.0 * 0.75 * 0.75) / zm1 + 1.5 / (zm1 * zm1) + 1.25 / (zm1 * zm1 * zm1);
    CHECK(std::abs(psi - expect_psi) < 1e-11);

    auto osc = make_oscillator_potential(0.3, 1);
    XiPoint q = compute_xi(osc, Cplx(2.4, 0.3));
    auto [phio, psio] = phi_psi_at(osc, q);
    CHECK(std::abs(phio - (-(0.3 + 0.5) / q.xi)) < 1e-12);
    Cplx zq = q.z;
    Cplx expect_psio = 2.0 / (zq * zq * q.xi) - 3.0 / (16.0 * q.xi * q.xi);
    CHECK(std::abs(psio - expect_psio) < 1e-11);

    auto cst = constant_potential();
    XiPoint c;
    c.z = 0.7;
    c.xi = 0.7;
    c.sqrt_f0 = 1.0;
    c.weight = 1.0;
    auto [pc, qc] = phi_psi_at(cst, c);
    CHECK(pc == Cplx(0.0));
    CHECK(qc == Cplx(0.0));
}

TEST_CASE("trace_ray oscillator to xi=9") {
    auto osc = make_oscillator_potential(0.0, 0);
    XiPoint start = compute_xi(osc, 3.0);
    RayPath ray = trace_ray(osc, start, Sign::minus, 8.0, 17);
    CHECK(ray.samples.size() == 17);
    const XiPoint& last = ray.samples.back();
    CHECK(std::abs(last.xi - Cplx(9.0)) < 1e-12);
    CHECK(std::abs(last.z - Cplx(7.0)) < 1e-9);
    CHECK(ray.truncation_abscissa == doctest::Approx(9.0));
}

TEST_CASE("trace_ray bessel plus branch") {
    auto bes = make_bessel_potential(0.0);
    XiPoint start = compute_xi(bes, 2.0);
    RayPath ray = trace_ray(bes, start, Sign::plus, 5.0, 21);
    const XiPoint& last = ray.samples.back();
    CHECK(last.xi.real() == doctest::Approx(-5.0).epsilon(1e-12));
    for (const XiPoint& p : ray.samples)
        CHECK(std::abs(p.xi.imag() - start.xi.imag()) <= 1e-9 * std::max(1.0, std::abs(start.xi)));
}

TEST_CASE("ray image invariant: recompute xi from z") {
    auto bes = make_bessel_potential(0.0);
    XiPoint start = compute_xi(bes, 2.0);
    RayPath ray = trace_ray(bes, start, Sign::minus, 6.0, 7);
    for (std::size_t i = 1; i < ray.samples.size(); ++i) {
        const XiPoint& p = ray.samples[i];
        // contour through the anchor keeps the branch homotopic to the ray
        XiPoint re = compute_xi(bes, p.z, {Cplx(2.0, -1e-9)});
        CHECK(std::abs(re.xi - p.xi) < 1e-8 * std::max(1.0, std::abs(p.xi)));
    }
}

TEST_CASE("degenerate ray") {
    auto osc = make_oscillator_potential(0.0, 0);
    XiPoint start = compute_xi(osc, 3.0);
    RayPath ray = trace_ray(osc, start, Sign::minus, 0.0, 9);
    CHECK(ray.samples.size() == 1);
    CHECK(std::abs(ray.samples[0].xi - start.xi) < 1e-15);
}

TEST_CASE("jets agree with stencil derivatives") {
    // symmetric circular stencil (trapezoidal Cauchy rule), exact to machine
    // precision for analytic functions; the differencing oracle for the jets
    auto stencil = [](const std::function<Cplx(Cplx)>& f, Cplx z, int k) {
        const int n = 32;
        const double r = 0.3;
        Cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * kPi * j / n;
            Cplx w = std::polar(r, th);
            acc += f(z + w) * std::exp(Cplx(0.0, -k * th));
        }
        double kfac = 1.0;
        for (int i = 2; i <= k; ++i) kfac *= i;
        return acc * kfac / (static_cast<double>(n) * std::pow(r, k));
    };
    auto bes = make_bessel_potential(0.3);
    Cplx z(1.9, 0.4);
    for (int k = 1; k <= 4; ++k) {
        Jet j = bes.f0(z);
        Cplx fd = stencil([&](Cplx w) { return bes.f0(w).v; }, z, k);
        CHECK(std::abs(j[k] - fd) < 1e-6 * std::max(1.0, std::abs(j[k])));
        Jet j2 = bes.f2(z);
        Cplx fd2 = stencil([&](Cplx w) { return bes.f2(w).v; }, z, k);
        CHECK(std::abs(j2[k] - fd2) < 1e-6 * std::max(1.0, std::abs(j2[k])));
    }
}

TEST_CASE("domain errors") {
    auto bes = make_bessel_potential(0.0);
    CHECK_THROWS_AS(compute_xi(bes, Cplx(0.5, 0.0)), DomainError);
    CHECK_THROWS_AS(compute_xi(bes, Cplx(-2.0, 0.0)), DomainError);
}
