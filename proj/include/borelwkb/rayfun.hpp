#ifndef BORELWKB_RAYFUN_HPP
#define BORELWKB_RAYFUN_HPP

#include <memory>
#include <vector>

#include "borelwkb/transform.hpp"
#include "borelwkb/chebyshev.hpp"

namespace borelwkb {

// A Chebyshev chart on the full half-line P(∓inf, xi_anchor), compactified by
//   s = S (1+zeta)/(1-zeta)^2,  zeta in (-1, 1),
// sampled at the Chebyshev-Gauss points (interior only, so s = +inf is never
// evaluated). The map is linear near the anchor (stable repeated d/ds) and
// quadratic toward infinity, which turns half-integer far-field powers into
// integer powers of (1-zeta).
struct RayChart {
    Sign sign = Sign::minus;
    XiPoint anchor;
    double S = 2.0;
    int M = 128;
    int jet_order = 1;
    std::vector<double> zeta;   // ascending in s
    std::vector<double> snode;  // ascending
    RayPath path;               // samples at snode
    std::vector<Cplx> phi, dphi, psi;       // m = 0 (and 1) views
    std::vector<std::vector<Cplx>> phi_d;   // [node][m], m <= jet_order
    std::vector<std::vector<Cplx>> psi_d;

    double sigma() const { return sign_sigma(sign); }
    double s_of_zeta(double z) const;
    double zeta_of_s(double s) const;
    double dsdzeta(double z) const;
    Cplx xi_of_s(double s) const { return anchor.xi + sigma() * s; }
};

using RayChartPtr = std::shared_ptr<const RayChart>;

RayChartPtr build_ray_chart(const EquationSpec& eq, const XiPoint& anchor, Sign sign,
                            int M = 128, double S = 2.0, int jet_order = 12);

// A function known at the chart nodes, manipulated spectrally.
class RayFunction {
public:
    RayFunction() = default;
    RayFunction(RayChartPtr chart, std::vector<Cplx> values);

    static RayFunction constant(RayChartPtr chart, Cplx value);

    const RayChartPtr& chart() const { return chart_; }
    const std::vector<Cplx>& values() const { return vals_; }
    const std::vector<Cplx>& coeffs() const;

    Cplx eval_s(double s) const;
    Cplx at_anchor() const { return eval_zeta(-1.0); }
    Cplx eval_zeta(double zeta) const;

    RayFunction deriv_xi() const;

    // H(xi) = int over P(∓inf, xi) of this function; H -> 0 at the far end.
    RayFunction integrate_from_far() const;

    // |dt| version: int over P(∓inf, xi(s)) of |f| |dt| (real, via |values|)
    std::vector<double> abs_integral_from_far() const;

    double far_value_abs() const { return std::abs(vals_.back()); }
    double max_abs() const;
    double cheb_tail_rel() const;

    friend RayFunction operator+(const RayFunction& a, const RayFunction& b);
    friend RayFunction operator-(const RayFunction& a, const RayFunction& b);
    friend RayFunction operator*(const RayFunction& a, const RayFunction& b); // pointwise
    RayFunction scaled(Cplx s) const;

private:
    RayChartPtr chart_;
    std::vector<Cplx> vals_;
    mutable std::vector<Cplx> coeffs_;
    mutable bool have_coeffs_ = false;
};

} // namespace borelwkb

#endif
