#include "borelwkb/quadrature.hpp"
#include "borelwkb/errors.hpp"

#include <cmath>
#include <vector>
#include <algorithm>

namespace borelwkb {

namespace {

// G7/K15 nodes on [-1,1] in ascending order, with Kronrod and Gauss weights
// (Gauss weight zero on the Kronrod-only nodes).
constexpr int kN = 15;
constexpr double kNode[kN] = {
    -0.99145537112081263921, -0.94910791234275852453, -0.86486442335976907279,
    -0.74153118559939443986, -0.58608723546769113029, -0.40584515137739716691,
    -0.20778495500789846760,  0.0,
     0.20778495500789846760,  0.40584515137739716691,  0.58608723546769113029,
     0.74153118559939443986,  0.86486442335976907279,  0.94910791234275852453,
     0.99145537112081263921};
constexpr double kWK[kN] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801,
    0.20443294007529889241, 0.19035057806478540991, 0.16900472663926790283,
    0.14065325971552591875, 0.10479001032225018384, 0.06309209262997855329,
    0.02293532201052922496};
constexpr double kWG[kN] = {
    0.0, 0.12948496616886969327, 0.0, 0.27970539148927666790, 0.0,
    0.38183005050511894495, 0.0, 0.41795918367346938776, 0.0,
    0.38183005050511894495, 0.0, 0.27970539148927666790, 0.0,
    0.12948496616886969327, 0.0};

struct Panel {
    Cplx value;
    double err;
};

Panel gk15(const std::function<Cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    Cplx k = 0.0, g = 0.0;
    for (int i = 0; i < kN; ++i) {
        Cplx fv = f(m + h * kNode[i]);
        k += kWK[i] * fv;
        g += kWG[i] * fv;
    }
    Panel p;
    p.value = k * h;
    double diff = std::abs((k - g) * h);
    p.err = std::pow(200.0 * diff, 1.5);
    if (!std::isfinite(p.err)) p.err = diff;
    p.err = std::max(p.err, diff * 1e-6);
    return p;
}

Cplx adapt(const std::function<Cplx(double)>& f, double a, double b,
           double tol_abs, double tol_rel, int depth, int max_depth, double& err_out,
           double scale_hint) {
    Panel p = gk15(f, a, b);
    double scale = std::max(scale_hint, std::abs(p.value));
    if (p.err <= std::max(tol_abs, tol_rel * scale) || depth >= max_depth) {
        err_out += p.err;
        return p.value;
    }
    double m = 0.5 * (a + b);
    Cplx left = adapt(f, a, m, 0.5 * tol_abs, tol_rel, depth + 1, max_depth, err_out, scale);
    Cplx right = adapt(f, m, b, 0.5 * tol_abs, tol_rel, depth + 1, max_depth, err_out, scale);
    return left + right;
}

} // namespace

QuadResult integrate_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_depth) {
    QuadResult r{0.0, 0.0};
    if (a == b) return r;
    r.value = adapt(f, a, b, abs_tol, rel_tol, 0, max_depth, r.err, 0.0);
    return r;
}

double integrate_adaptive_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_depth) {
    auto fc = [&](double t) { return Cplx(f(t), 0.0); };
    return integrate_adaptive(fc, a, b, abs_tol, rel_tol, max_depth).value.real();
}

SqrtContourResult integrate_sqrt_segment(const std::function<Cplx(Cplx)>& f0,
                                         Cplx za, Cplx zb,
                                         Cplx sqrt_seed, Cplx quarter_seed,
                                         double tol, double f0_floor,
                                         bool regularize_start) {
    // Parametrize z(t), t in [0,1]; with the start regularized, z = za + t^2 dz.
    const Cplx dz = zb - za;
    auto zof = [&](double t) { return regularize_start ? za + (t * t) * dz : za + t * dz; };
    auto jac = [&](double t) { return regularize_start ? 2.0 * t * dz : dz; };

    // Intervals are processed strictly left to right so the branch state is a
    // plain marching variable.
    Cplx sq_ref = sqrt_seed, q_ref = quarter_seed;
    bool ref_live = std::abs(sq_ref) > 0.0;

    struct Seg { double a, b; int depth; };
    std::vector<Seg> stack;
    stack.push_back({0.0, 1.0, 0});
    Cplx total = 0.0;
    double err_total = 0.0;
    const int max_depth = 48;

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double h = 0.5 * (s.b - s.a), m = 0.5 * (s.a + s.b);

        // Evaluate in ascending t, continuing the branch across nodes.
        Cplx local_sq = sq_ref, local_q = q_ref;
        bool local_live = ref_live;
        Cplx k = 0.0, g = 0.0;
        double max_step_rot = 0.0;
        bool ok = true;
        Cplx vals_sq[kN];
        for (int i = 0; i < kN && ok; ++i) {
            double t = m + h * kNode[i];
            Cplx w = f0(zof(t));
            if (std::abs(w) < f0_floor) {
                // A vanishing f0 in the interior of the contour cannot be
                // continued; a (regularized) zero at the start is fine.
                if (!(regularize_start && t < 0.05)) {
                    throw BranchAmbiguity("f0 vanishes on the contour near z = (" +
                                          fmt17(zof(t).real()) + "," + fmt17(zof(t).imag()) + ")");
                }
            }
            Cplx r;
            if (local_live) {
                r = sqrt_near(w, local_sq);
                if (std::abs(r) > 0 && std::abs(local_sq) > 0) {
                    double rot = std::abs(std::arg(r / local_sq));
                    max_step_rot = std::max(max_step_rot, rot);
                }
            } else {
                r = std::sqrt(w);
                local_live = true;
            }
            local_sq = r;
            local_q = sqrt_near(r, local_q == 0.0 ? std::sqrt(r) : local_q);
            vals_sq[i] = r;
            Cplx fv = r * jac(t);
            k += kWK[i] * fv;
            g += kWG[i] * fv;
        }
        (void)vals_sq;
        Cplx val = k * h;
        double perr = std::abs((k - g) * h);
        perr = std::max(std::pow(200.0 * perr, 1.5), perr * 1e-6);
        if (!std::isfinite(perr)) perr = std::abs((k - g) * h);

        bool accept = ok && max_step_rot < kPi / 3.0 &&
                      (perr <= tol * std::max(1.0, std::abs(total)) * (s.b - s.a) || s.depth >= max_depth);
        if (accept) {
            total += val;
            err_total += perr;
            // advance the branch reference to the segment's right endpoint
            Cplx wend = f0(zof(s.b));
            if (std::abs(wend) >= f0_floor) {
                sq_ref = sqrt_near(wend, local_sq);
                q_ref = sqrt_near(sq_ref, local_q);
                ref_live = true;
            } else {
                sq_ref = local_sq;
                q_ref = local_q;
            }
        } else {
            stack.push_back({m, s.b, s.depth + 1});
            stack.push_back({s.a, m, s.depth + 1});
        }
    }

    SqrtContourResult res;
    res.integral = total;
    res.err = err_total;
    res.sqrt_end = sq_ref;
    res.quarter_end = q_ref;
    return res;
}

} // namespace borelwkb
