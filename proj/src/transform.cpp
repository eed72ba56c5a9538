#include "borelwkb/transform.hpp"
#include "borelwkb/quadrature.hpp"
#include "borelwkb/errors.hpp"

#include <cmath>
#include <algorithm>

namespace borelwkb {

namespace {

void check_domain(const PotentialTriple& pot, Cplx z) {
    if (pot.in_domain && !pot.in_domain(z))
        throw DomainError("z = (" + fmt17(z.real()) + "," + fmt17(z.imag()) + ") outside the declared domain");
}

} // namespace

XiPoint compute_xi(const PotentialTriple& pot, Cplx z, const std::vector<Cplx>& contour_hint) {
    if (z == pot.z0) {
        // empty integral; the branch data is whatever the hint pins there
        XiPoint pt;
        pt.z = z;
        pt.xi = 0.0;
        Cplx f0 = pot.f0(z).v;
        pt.sqrt_f0 = std::abs(f0) >= pot.f0_floor
                         ? (pot.sqrt_f0_hint ? pot.sqrt_f0_hint(z) : std::sqrt(f0))
                         : Cplx(0.0);
        pt.weight = pt.sqrt_f0 == Cplx(0.0) ? Cplx(0.0) : 1.0 / std::sqrt(pt.sqrt_f0);
        return pt;
    }
    check_domain(pot, z);
    for (Cplx w : contour_hint) check_domain(pot, w);

    std::vector<Cplx> pts;
    pts.push_back(pot.z0);
    for (Cplx w : contour_hint) pts.push_back(w);
    pts.push_back(z);

    Cplx xi = 0.0;
    Cplx sq = 0.0, quarter = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Cplx za = pts[i], zb = pts[i + 1];
        if (za == zb) continue;
        bool regularize = false;
        if (i == 0) {
            Cplx f00 = pot.f0(za).v;
            regularize = std::abs(f00) < 1e-8;
            if (regularize) {
                Cplx znear = za + 1e-6 * (zb - za);
                sq = pot.sqrt_f0_hint ? pot.sqrt_f0_hint(znear) : std::sqrt(pot.f0(znear).v);
                quarter = std::sqrt(sq);
            } else {
                sq = pot.sqrt_f0_hint ? pot.sqrt_f0_hint(za) : std::sqrt(f00);
                quarter = std::sqrt(sq);
            }
        }
        SqrtContourResult r = integrate_sqrt_segment(
            [&](Cplx w) { return pot.f0(w).v; }, za, zb, sq, quarter, 1e-12, pot.f0_floor, regularize);
        xi += r.integral;
        sq = r.sqrt_end;
        quarter = r.quarter_end;
        err += r.err;
    }

    XiPoint pt;
    pt.z = z;
    pt.xi = xi;
    Cplx f0z = pot.f0(z).v;
    if (std::abs(f0z) < pot.f0_floor)
        throw DomainError("f0 vanishes at the query point");
    pt.sqrt_f0 = sqrt_near(f0z, sq);
    pt.weight = 1.0 / sqrt_near(pt.sqrt_f0, quarter);
    return pt;
}

std::pair<Cplx, Cplx> phi_psi_at(const PotentialTriple& pot, const XiPoint& pt) {
    Jet f0 = pot.f0(pt.z);
    if (std::abs(f0.v) < pot.f0_floor)
        throw DomainError("f0 below floor in phi_psi_at");
    Jet f1 = pot.f1(pt.z);
    Jet f2 = pot.f2(pt.z);
    Cplx phi = f1.v / f0.v;
    Cplx f0c = f0.v * f0.v * f0.v;
    Cplx psi = f2.v / f0.v + (4.0 * f0.v * f0.d2 - 5.0 * f0.d1 * f0.d1) / (16.0 * f0c);
    return {phi, psi};
}

Cplx phi_prime_at(const PotentialTriple& pot, const XiPoint& pt) {
    Jet f0 = pot.f0(pt.z);
    Jet f1 = pot.f1(pt.z);
    if (std::abs(f0.v) < pot.f0_floor)
        throw DomainError("f0 below floor in phi_prime_at");
    Cplx dphi_dz = (f1.d1 * f0.v - f1.v * f0.d1) / (f0.v * f0.v);
    return dphi_dz / pt.sqrt_f0;
}

PhiPsiDerivs phi_psi_derivs(const PotentialTriple& pot, const XiPoint& pt, int order) {
    using taylor::Series;
    const int K = order;
    // z-space series about pt.z (psi needs two extra f0 orders)
    Series f0s = pot.series_of(0, pt.z, K + 2);
    Series f1s = pot.series_of(1, pt.z, K);
    Series f2s = pot.series_of(2, pt.z, K);
    if (std::abs(f0s[0]) < pot.f0_floor)
        throw DomainError("f0 below floor in phi_psi_derivs");

    Series f0K(f0s.begin(), f0s.begin() + (K + 1));
    Series phi_z = taylor::div(f1s, f0K, K);
    Series f0p = taylor::derivative(f0s);  // order K+1
    Series f0pp = taylor::derivative(f0p); // order K
    Series num(K + 1, Cplx(0.0));
    {
        Series t1 = taylor::mul(f0s, f0pp, K);
        Series t2 = taylor::mul(f0p, f0p, K);
        for (int k = 0; k <= K; ++k) num[k] = 4.0 * t1[k] - 5.0 * t2[k];
    }
    Series f0cube = taylor::mul(taylor::mul(f0K, f0K, K), f0K, K);
    for (Cplx& c : f0cube) c *= 16.0;
    Series psi_z = taylor::div(f2s, f0K, K);
    {
        Series corr = taylor::div(num, f0cube, K);
        for (int k = 0; k <= K; ++k) psi_z[k] += corr[k];
    }

    // xi(z) - xi0 as a series in h = z - pt.z, then invert to h(xi)
    Series sq = taylor::sqrt(f0K, pt.sqrt_f0, K);
    Series xis = taylor::antiderivative(sq); // [0]=0, length K+2
    xis.resize(K + 2);
    Series h_of_xi = taylor::invert(xis, K + 1);

    Series phi_xi = taylor::compose(phi_z, h_of_xi, K);
    Series psi_xi = taylor::compose(psi_z, h_of_xi, K);

    PhiPsiDerivs out;
    out.phi = taylor::to_derivatives(phi_xi);
    out.psi = taylor::to_derivatives(psi_xi);
    return out;
}

namespace {

// Dormand-Prince 5(4) pair
struct DP45 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

struct RayIntegrator {
    const PotentialTriple& pot;
    double sigma;
    Cplx sqrt_ref;
    Cplx quarter_ref;

    Cplx rhs(Cplx z, Cplx ref) const {
        Cplx f0 = pot.f0(z).v;
        if (std::abs(f0) < pot.f0_floor)
            throw SingularityHit("|f0| fell below floor while tracing a ray");
        return sigma / sqrt_near(f0, ref);
    }

    // One adaptive step from (s, z); returns the step actually taken.
    double step(double& s, Cplx& z, double& h, double s_stop, double rtol) {
        bool clipped = false;
        for (int tries = 0; tries < 60; ++tries) {
            double hh = h;
            if (s + hh >= s_stop) {
                hh = s_stop - s;
                clipped = true;
            }
            Cplx k1 = rhs(z, sqrt_ref);
            Cplx k2 = rhs(z + hh * DP45::a21 * k1, sqrt_ref);
            Cplx k3 = rhs(z + hh * (DP45::a31 * k1 + DP45::a32 * k2), sqrt_ref);
            Cplx k4 = rhs(z + hh * (DP45::a41 * k1 + DP45::a42 * k2 + DP45::a43 * k3), sqrt_ref);
            Cplx k5 = rhs(z + hh * (DP45::a51 * k1 + DP45::a52 * k2 + DP45::a53 * k3 + DP45::a54 * k4), sqrt_ref);
            Cplx k6 = rhs(z + hh * (DP45::a61 * k1 + DP45::a62 * k2 + DP45::a63 * k3 + DP45::a64 * k4 +
                                    DP45::a65 * k5),
                          sqrt_ref);
            Cplx z5 = z + hh * (DP45::b1 * k1 + DP45::b3 * k3 + DP45::b4 * k4 + DP45::b5 * k5 + DP45::b6 * k6);
            Cplx k7 = rhs(z5, sqrt_ref);
            double err = std::abs(hh * (DP45::e1 * k1 + DP45::e3 * k3 + DP45::e4 * k4 + DP45::e5 * k5 +
                                        DP45::e6 * k6 + DP45::e7 * k7));
            double tol = rtol * std::max(1.0, std::abs(z5));
            if (err <= tol || hh <= 1e-14 * std::max(1.0, std::abs(s))) {
                s += hh;
                z = z5;
                Cplx f0 = pot.f0(z).v;
                sqrt_ref = sqrt_near(f0, sqrt_ref);
                quarter_ref = sqrt_near(sqrt_ref, quarter_ref);
                double grow = (err > 0) ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
                h = hh * std::clamp(grow, 0.2, 5.0);
                if (clipped) h = std::max(h, hh * 2.0);
                return hh;
            }
            h = hh * std::clamp(0.9 * std::pow(tol / err, 0.25), 0.1, 0.9);
        }
        throw StepFailure("ray tracer could not meet tolerance");
    }
};

} // namespace

RayPath trace_ray_at(const PotentialTriple& pot, const XiPoint& start, Sign sign,
                     const std::vector<double>& s_targets) {
    RayPath path;
    path.sign = sign;
    path.anchor = start;
    const double sigma = sign_sigma(sign);

    RayIntegrator integ{pot, sigma, start.sqrt_f0, 1.0 / start.weight};

    double s = 0.0;
    Cplx z = start.z;
    double h = 1e-3;
    for (double st : s_targets) {
        if (st < s)
            throw ValidationError("ray sample arclengths must be non-decreasing");
        long long guard = 0;
        while (s < st) {
            integ.step(s, z, h, st, 1e-12);
            if (++guard > 4000000)
                throw StepFailure("ray tracer exceeded step budget");
        }
        XiPoint pt;
        pt.z = z;
        pt.xi = start.xi + sigma * st;
        Cplx f0 = pot.f0(z).v;
        pt.sqrt_f0 = sqrt_near(f0, integ.sqrt_ref);
        pt.weight = 1.0 / sqrt_near(pt.sqrt_f0, integ.quarter_ref);
        path.samples.push_back(pt);
        path.s.push_back(st);
    }
    path.truncation_abscissa = start.xi.real() + sigma * (s_targets.empty() ? 0.0 : s_targets.back());
    return path;
}

RayPath trace_ray(const PotentialTriple& pot, const XiPoint& start, Sign sign,
                  double length, int n_samples) {
    if (length < 0.0) throw ValidationError("ray length must be >= 0");
    std::vector<double> s;
    if (length == 0.0 || n_samples <= 1) {
        s = {0.0};
    } else {
        s.resize(n_samples);
        for (int i = 0; i < n_samples; ++i) s[i] = length * i / (n_samples - 1.0);
    }
    return trace_ray_at(pot, start, sign, s);
}

} // namespace borelwkb
