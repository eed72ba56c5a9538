#ifndef BORELWKB_POTENTIAL_HPP
#define BORELWKB_POTENTIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "borelwkb/cplx.hpp"
#include "borelwkb/poly.hpp"
#include "borelwkb/taylor.hpp"

namespace borelwkb {

// Value and derivatives at a point, up to fourth order.
struct Jet {
    Cplx v{0.0}, d1{0.0}, d2{0.0}, d3{0.0}, d4{0.0};
    Cplx operator[](int k) const {
        switch (k) {
            case 0: return v;
            case 1: return d1;
            case 2: return d2;
            case 3: return d3;
            default: return d4;
        }
    }
};

using JetFn = std::function<Jet(Cplx)>;

// The z-space data of an equation w'' = u^2 (f0 + f1/u + f2/u^2) w.
struct PotentialTriple {
    JetFn f0, f1, f2;
    Cplx z0{1.0, 0.0};
    // Branch pin for f0^{1/2} on the principal region; may be empty for
    // custom potentials (principal square root is then used to seed).
    std::function<Cplx(Cplx)> sqrt_f0_hint;
    std::function<bool(Cplx)> in_domain; // may be empty (no restriction)
    std::string branch_notes;
    double f0_floor = 1e-12;
    bool f1_identically_zero = false;

    // Taylor series of f_i about a point, to the requested order. Closed-form
    // for the built-ins; when empty, synthesized from the value lane by a
    // circular Cauchy stencil of radius series_radius.
    std::function<taylor::Series(Cplx, int)> f0_series, f1_series, f2_series;
    double series_radius = 0.25;

    taylor::Series series_of(int which, Cplx z, int order) const;
};

enum class Condition { cond1, cond2 };

// An equation instance bundled with its domain bookkeeping. xi_closed and
// xi_singular come from the application's closed-form transform and drive
// condition certification and Gamma(d)-membership checks.
struct EquationSpec {
    PotentialTriple pot;
    Condition cond = Condition::cond1;
    double rho = 1.0;
    double d = 0.25;
    double epsilon = 0.1;
    std::string app; // "bessel", "oscillator" or "custom"
    Cplx kappa{0.0};
    Cplx lambda{0.0};
    int ell = 0;
    std::function<Cplx(Cplx)> xi_closed;       // z -> xi, principal sheet
    std::vector<Cplx> xi_singular;             // singular xi values (as principal values)
    bool phi_identically_zero() const { return pot.f1_identically_zero; }
};

PotentialTriple make_bessel_potential(Cplx kappa);
PotentialTriple make_oscillator_potential(Cplx lambda, int ell);

EquationSpec make_bessel_equation(Cplx kappa, double d, double epsilon);
EquationSpec make_oscillator_equation(Cplx lambda, int ell, double d, double epsilon);

// Membership in Gamma^{+-}(d): at distance > d + eps from each singular xi
// and outside the horizontal cut each singular point throws toward the
// +inf (plus) or -inf (minus) side.
bool gamma_member(const EquationSpec& eq, Cplx xi, Sign sign, double d, double eps);

} // namespace borelwkb

#endif
