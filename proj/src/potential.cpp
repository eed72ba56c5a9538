#include "borelwkb/potential.hpp"

#include <cmath>

namespace borelwkb {

taylor::Series PotentialTriple::series_of(int which, Cplx z, int order) const {
    const auto& hi = which == 0 ? f0_series : (which == 1 ? f1_series : f2_series);
    if (hi) return hi(z, order);
    const auto& jet = which == 0 ? f0 : (which == 1 ? f1 : f2);
    if (order <= 4) {
        Jet j = jet(z);
        taylor::Series s(order + 1);
        double fact = 1.0;
        for (int k = 0; k <= order; ++k) {
            if (k > 0) fact *= k;
            s[k] = j[k] / fact;
        }
        return s;
    }
    // circular Cauchy stencil on the value lane
    const int n = std::max(32, 4 * order);
    const double r = series_radius;
    taylor::Series s(order + 1, Cplx(0.0));
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * kPi * j / n;
        Cplx w = std::polar(r, th);
        Cplx fv = jet(z + w).v;
        for (int k = 0; k <= order; ++k) s[k] += fv * std::exp(Cplx(0.0, -k * th));
    }
    for (int k = 0; k <= order; ++k) s[k] /= static_cast<double>(n) * std::pow(r, k);
    return s;
}

namespace {

// jets of c * z^{-2}
Jet inv_sq_jet(Cplx z, Cplx c) {
    Jet j;
    Cplx z2 = z * z;
    j.v = c / z2;
    j.d1 = -2.0 * c / (z2 * z);
    j.d2 = 6.0 * c / (z2 * z2);
    j.d3 = -24.0 * c / (z2 * z2 * z);
    j.d4 = 120.0 * c / (z2 * z2 * z2);
    return j;
}

// series of c * z^{-2} about z: c * (-1)^k (k+1) z^{-(k+2)}
taylor::Series inv_sq_series(Cplx z, Cplx c, int order) {
    taylor::Series s(order + 1);
    Cplx zp = c / (z * z);
    for (int k = 0; k <= order; ++k) {
        s[k] = zp * static_cast<double>(k + 1);
        zp = -zp / z;
    }
    return s;
}

bool upper_cut_domain(Cplx z) {
    // |arg(z-1)| < pi : the cut runs from 1 to -infinity
    Cplx w = z - 1.0;
    return !(w.imag() == 0.0 && w.real() <= 0.0);
}

Cplx sqrt_z2m1(Cplx z) {
    // (z^2-1)^{1/2} as sqrt(z-1)*sqrt(z+1), continuous on |arg(z-1)| < pi
    return std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
}

} // namespace

PotentialTriple make_bessel_potential(Cplx kappa) {
    PotentialTriple pot;
    pot.z0 = 1.0;
    pot.f0 = [](Cplx z) {
        Jet j = inv_sq_jet(z, 1.0);
        j.v -= 1.0;
        return j;
    };
    pot.f1 = [kappa](Cplx z) { return inv_sq_jet(z, 2.0 * kappa); };
    pot.f2 = [kappa](Cplx z) { return inv_sq_jet(z, (4.0 * kappa * kappa - 1.0) / 4.0); };
    pot.sqrt_f0_hint = [](Cplx z) { return Cplx(0.0, 1.0) * sqrt_z2m1(z) / z; };
    pot.in_domain = upper_cut_domain;
    pot.branch_notes = "cut along (-inf,1]; f0^{1/2} = i (z^2-1)^{1/2} / z with product-principal sqrt";
    pot.f1_identically_zero = (kappa == 0.0);
    pot.f0_series = [](Cplx z, int order) {
        taylor::Series s = inv_sq_series(z, 1.0, order);
        s[0] -= 1.0;
        return s;
    };
    pot.f1_series = [kappa](Cplx z, int order) { return inv_sq_series(z, 2.0 * kappa, order); };
    pot.f2_series = [kappa](Cplx z, int order) {
        return inv_sq_series(z, (4.0 * kappa * kappa - 1.0) / 4.0, order);
    };
    return pot;
}

PotentialTriple make_oscillator_potential(Cplx lambda, int ell) {
    PotentialTriple pot;
    pot.z0 = 1.0;
    pot.f0 = [](Cplx z) {
        Jet j;
        Cplx w = z - 1.0;
        j.v = w * w / 4.0;
        j.d1 = w / 2.0;
        j.d2 = 0.5;
        return j;
    };
    pot.f1 = [lambda](Cplx) {
        Jet j;
        j.v = -(lambda + 0.5);
        return j;
    };
    const double l2 = static_cast<double>(ell) * (ell + 1);
    pot.f2 = [l2](Cplx z) { return inv_sq_jet(z, l2); };
    pot.sqrt_f0_hint = [](Cplx z) { return (z - 1.0) / 2.0; };
    pot.in_domain = upper_cut_domain;
    pot.branch_notes = "cut along (-inf,1]; f0^{1/2} = (z-1)/2";
    pot.f1_identically_zero = (lambda == Cplx(-0.5));
    pot.f0_series = [](Cplx z, int order) {
        taylor::Series s(order + 1, Cplx(0.0));
        Cplx w = z - 1.0;
        s[0] = w * w / 4.0;
        if (order >= 1) s[1] = w / 2.0;
        if (order >= 2) s[2] = 0.25;
        return s;
    };
    pot.f1_series = [lambda](Cplx, int order) {
        taylor::Series s(order + 1, Cplx(0.0));
        s[0] = -(lambda + 0.5);
        return s;
    };
    pot.f2_series = [l2](Cplx z, int order) { return inv_sq_series(z, l2, order); };
    return pot;
}

EquationSpec make_bessel_equation(Cplx kappa, double d, double epsilon) {
    EquationSpec eq;
    eq.pot = make_bessel_potential(kappa);
    eq.cond = Condition::cond1;
    eq.rho = 1.0;
    eq.d = d;
    eq.epsilon = epsilon;
    eq.app = "bessel";
    eq.kappa = kappa;
    eq.xi_closed = [](Cplx z) {
        return Cplx(0.0, 1.0) * (sqrt_z2m1(z) - std::acos(1.0 / z));
    };
    eq.xi_singular = {Cplx(0.0, 0.0), Cplx(0.0, -kPi)};
    return eq;
}

EquationSpec make_oscillator_equation(Cplx lambda, int ell, double d, double epsilon) {
    EquationSpec eq;
    eq.pot = make_oscillator_potential(lambda, ell);
    eq.cond = Condition::cond2;
    eq.rho = 0.5;
    eq.d = d;
    eq.epsilon = epsilon;
    eq.app = "oscillator";
    eq.lambda = lambda;
    eq.ell = ell;
    eq.xi_closed = [](Cplx z) {
        Cplx w = z - 1.0;
        return w * w / 4.0;
    };
    eq.xi_singular = {Cplx(0.0, 0.0)}; // the z=0 image (|xi|=1/4 on the far sheets) is gated in z
    return eq;
}

bool gamma_member(const EquationSpec& eq, Cplx xi, Sign sign, double d, double eps) {
    const double thr = d + eps;
    auto in_cut = [&](Cplx s) {
        if (std::abs(xi - s) <= thr) return true;
        if (sign == Sign::plus)
            return xi.real() >= s.real() && std::abs(xi.imag() - s.imag()) <= thr;
        return xi.real() <= s.real() && std::abs(xi.imag() - s.imag()) <= thr;
    };
    for (const Cplx& s : eq.xi_singular)
        if (in_cut(s)) return false;
    if (eq.app == "bessel") {
        // below Im = -pi only a sliver of the covering belongs to G
        if (xi.imag() < -kPi) {
            if (sign == Sign::minus && xi.real() <= thr) return false;
            if (sign == Sign::plus && xi.real() >= -thr) return false;
        }
        if (xi.imag() <= -kPi + thr && (sign == Sign::plus ? xi.real() >= 0.0 : xi.real() <= 0.0))
            return false;
    }
    return true;
}

} // namespace borelwkb
