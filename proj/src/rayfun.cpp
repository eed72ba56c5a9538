#include "borelwkb/rayfun.hpp"
#include "borelwkb/errors.hpp"

#include <cmath>
#include <algorithm>

namespace borelwkb {

double RayChart::s_of_zeta(double z) const {
    double om = 1.0 - z;
    return S * (1.0 + z) / (om * om);
}

double RayChart::zeta_of_s(double s) const {
    s = std::max(s, 0.0);
    return 2.0 * (s - S) / (2.0 * s + S + std::sqrt(S * (8.0 * s + S)));
}

double RayChart::dsdzeta(double z) const {
    double om = 1.0 - z;
    return S * (3.0 + z) / (om * om * om);
}

RayChartPtr build_ray_chart(const EquationSpec& eq, const XiPoint& anchor, Sign sign,
                            int M, double S, int jet_order) {
    auto chart = std::make_shared<RayChart>();
    chart->sign = sign;
    chart->anchor = anchor;
    chart->S = S;
    chart->M = M;
    chart->jet_order = jet_order;

    std::vector<double> nodes = cheb::gauss_nodes(M); // descending
    chart->zeta.assign(nodes.rbegin(), nodes.rend()); // ascending
    chart->snode.resize(M);
    for (int j = 0; j < M; ++j) chart->snode[j] = chart->s_of_zeta(chart->zeta[j]);

    chart->path = trace_ray_at(eq.pot, anchor, sign, chart->snode);

    chart->phi.resize(M);
    chart->dphi.resize(M);
    chart->psi.resize(M);
    chart->phi_d.resize(M);
    chart->psi_d.resize(M);
    for (int j = 0; j < M; ++j) {
        const XiPoint& pt = chart->path.samples[j];
        PhiPsiDerivs pd = phi_psi_derivs(eq.pot, pt, jet_order);
        chart->phi_d[j] = std::move(pd.phi);
        chart->psi_d[j] = std::move(pd.psi);
        chart->phi[j] = chart->phi_d[j][0];
        chart->dphi[j] = chart->phi_d[j].size() > 1 ? chart->phi_d[j][1] : Cplx(0.0);
        chart->psi[j] = chart->psi_d[j][0];
    }
    return chart;
}

RayFunction::RayFunction(RayChartPtr chart, std::vector<Cplx> values)
    : chart_(std::move(chart)), vals_(std::move(values)) {
    if (static_cast<int>(vals_.size()) != chart_->M)
        throw ValidationError("RayFunction values must match chart nodes");
}

RayFunction RayFunction::constant(RayChartPtr chart, Cplx value) {
    int M = chart->M;
    return RayFunction(std::move(chart), std::vector<Cplx>(M, value));
}

const std::vector<Cplx>& RayFunction::coeffs() const {
    if (!have_coeffs_) {
        // DCT order is descending in zeta; our storage ascends
        std::vector<Cplx> rev(vals_.rbegin(), vals_.rend());
        coeffs_ = cheb::coeffs_from_values(rev);
        // zero the sub-roundoff tail; repeated spectral differentiation in
        // the coefficient recursions would otherwise amplify it by O(M^2)
        // per level
        double mx = 0.0;
        for (const Cplx& c : coeffs_) mx = std::max(mx, std::abs(c));
        const double floor = 1e-14 * mx;
        for (Cplx& c : coeffs_)
            if (std::abs(c) < floor) c = 0.0;
        have_coeffs_ = true;
    }
    return coeffs_;
}

Cplx RayFunction::eval_zeta(double z) const { return cheb::clenshaw(coeffs(), z); }

Cplx RayFunction::eval_s(double s) const { return eval_zeta(chart_->zeta_of_s(s)); }

RayFunction RayFunction::deriv_xi() const {
    std::vector<Cplx> dv = cheb::derivative(coeffs());
    std::vector<Cplx> out(chart_->M);
    const double sigma = chart_->sigma();
    for (int j = 0; j < chart_->M; ++j)
        out[j] = sigma * cheb::clenshaw(dv, chart_->zeta[j]) / chart_->dsdzeta(chart_->zeta[j]);
    return RayFunction(chart_, std::move(out));
}

RayFunction RayFunction::integrate_from_far() const {
    const int M = chart_->M;
    std::vector<Cplx> q(M);
    for (int j = 0; j < M; ++j) q[j] = vals_[j] * chart_->dsdzeta(chart_->zeta[j]);
    std::vector<Cplx> rev(q.rbegin(), q.rend());
    std::vector<Cplx> Q = cheb::antiderivative(cheb::coeffs_from_values(rev));
    const Cplx Q1 = cheb::clenshaw(Q, 1.0);
    const double sigma = chart_->sigma();
    std::vector<Cplx> out(M);
    for (int j = 0; j < M; ++j)
        out[j] = -sigma * (Q1 - cheb::clenshaw(Q, chart_->zeta[j]));
    return RayFunction(chart_, std::move(out));
}

std::vector<double> RayFunction::abs_integral_from_far() const {
    const int M = chart_->M;
    std::vector<Cplx> q(M);
    for (int j = 0; j < M; ++j) q[j] = std::abs(vals_[j]) * chart_->dsdzeta(chart_->zeta[j]);
    std::vector<Cplx> rev(q.rbegin(), q.rend());
    std::vector<Cplx> Q = cheb::antiderivative(cheb::coeffs_from_values(rev));
    const Cplx Q1 = cheb::clenshaw(Q, 1.0);
    std::vector<double> out(M);
    for (int j = 0; j < M; ++j)
        out[j] = (Q1 - cheb::clenshaw(Q, chart_->zeta[j])).real();
    return out;
}

double RayFunction::max_abs() const {
    double m = 0.0;
    for (const Cplx& v : vals_) m = std::max(m, std::abs(v));
    return m;
}

double RayFunction::cheb_tail_rel() const {
    const auto& c = coeffs();
    double mx = 0.0;
    for (const Cplx& v : c) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return 0.0;
    return cheb::tail_magnitude(c, 2) / mx;
}

RayFunction operator+(const RayFunction& a, const RayFunction& b) {
    std::vector<Cplx> v(a.vals_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.vals_[i] + b.vals_[i];
    return RayFunction(a.chart_, std::move(v));
}

RayFunction operator-(const RayFunction& a, const RayFunction& b) {
    std::vector<Cplx> v(a.vals_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.vals_[i] - b.vals_[i];
    return RayFunction(a.chart_, std::move(v));
}

RayFunction operator*(const RayFunction& a, const RayFunction& b) {
    std::vector<Cplx> v(a.vals_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.vals_[i] * b.vals_[i];
    return RayFunction(a.chart_, std::move(v));
}

RayFunction RayFunction::scaled(Cplx s) const {
    std::vector<Cplx> v(vals_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * vals_[i];
    return RayFunction(chart_, std::move(v));
}

} // namespace borelwkb
