#include "borelwkb/bounds.hpp"
#include "borelwkb/errors.hpp"
#include "borelwkb/quadrature.hpp"

#include <cmath>
#include <random>
#include <algorithm>

namespace borelwkb {

namespace {

bool delta_member(const EquationSpec& eq, Cplx z, Cplx xi, double eps) {
    if (eq.app == "bessel") {
        return std::abs(xi) > eps && std::abs(xi + Cplx(0.0, kPi)) > eps;
    }
    if (eq.app == "oscillator") {
        if (std::abs(xi) <= eps) return false;
        // the z=0 image sits at |xi| = 1/4 on the far sheets; gate in z
        if (std::abs(z) < 0.5 && std::abs(xi - 0.25) <= eps) return false;
        return true;
    }
    for (const Cplx& s : eq.xi_singular)
        if (std::abs(xi - s) <= eps) return false;
    return true;
}

struct CondQuantities {
    double q_phi, q_dphi, q_psi;
};

CondQuantities condition_quantities(const EquationSpec& eq, const XiPoint& pt) {
    auto [phi, psi] = phi_psi_at(eq.pot, pt);
    Cplx dphi = phi_prime_at(eq.pot, pt);
    double axi = std::abs(pt.xi);
    CondQuantities q;
    if (eq.cond == Condition::cond1) {
        double w = 1.0 + std::pow(axi, 1.0 + eq.rho);
        q.q_phi = std::abs(phi) * w;
        q.q_dphi = 0.0;
        q.q_psi = std::abs(psi) * w;
    } else {
        q.q_phi = std::abs(phi) * (1.0 + std::pow(axi, 0.5 + eq.rho));
        q.q_dphi = std::abs(dphi) * (1.0 + std::pow(axi, 1.0 + eq.rho));
        q.q_psi = std::abs(psi) * (1.0 + std::pow(axi, 1.0 + eq.rho));
    }
    return q;
}

} // namespace

ConditionCert certify_conditions(const EquationSpec& eq, const CertGrid& grid) {
    if (!eq.xi_closed)
        throw ValidationError("certify_conditions needs the closed-form xi map of the application");
    ConditionCert cert;
    cert.which = eq.cond;
    cert.rho = eq.rho;
    cert.d = eq.d;
    cert.epsilon = eq.epsilon;

    double sup = 0.0, sup_outer = 0.0, sup_inner = 0.0;
    int count = 0;
    const double lr0 = std::log(grid.r_min), lr1 = std::log(grid.r_max);
    for (int i = 0; i < grid.n_r; ++i) {
        double r = std::exp(lr0 + (lr1 - lr0) * i / (grid.n_r - 1.0));
        for (int j = 0; j < grid.n_theta; ++j) {
            double th = -kPi + 2.0 * kPi * (j + 0.5) / grid.n_theta;
            Cplx z = 1.0 + std::polar(r, th);
            if (eq.pot.in_domain && !eq.pot.in_domain(z)) continue;
            if (std::abs(eq.pot.f0(z).v) < eq.pot.f0_floor) continue;
            Cplx xi = eq.xi_closed(z);
            if (!delta_member(eq, z, xi, eq.epsilon)) continue;
            XiPoint pt;
            pt.z = z;
            pt.xi = xi;
            pt.sqrt_f0 = eq.pot.sqrt_f0_hint ? eq.pot.sqrt_f0_hint(z) : std::sqrt(eq.pot.f0(z).v);
            CondQuantities q = condition_quantities(eq, pt);
            double m = std::max({q.q_phi, q.q_dphi, q.q_psi});
            if (!std::isfinite(m)) continue;
            sup = std::max(sup, m);
            if (std::abs(xi) > 0.3 * grid.r_max)
                sup_outer = std::max(sup_outer, m);
            else
                sup_inner = std::max(sup_inner, m);
            ++count;
        }
    }
    if (count == 0) throw ValidationError("certification grid produced no admissible samples");
    if (sup_outer > 1.02 * sup_inner && sup_outer > 0.0)
        throw ConditionViolated("condition quantity still growing at the largest |xi| sampled");
    cert.sup_raw = sup;
    cert.c = std::max(1.1 * sup, 1e-12);
    cert.n_samples = count;
    return cert;
}

ConstantsChain constants_chain(const ConditionCert& cert) {
    ConstantsChain ch;
    const double c = cert.c, rho = cert.rho, d = cert.d;
    const double mc = std::max(c, c * c);
    ch.c1 = mc * std::pow(1.0 + d, rho);
    ch.c2 = 4.0 * mc * (1.0 + rho) * (1.0 + std::pow(1.0 + d, 1.0 + rho)) / rho;
    ch.c3 = 1.0 + 1.75 * ch.c2;
    ch.C1d = 1.0 + 0.5 * ch.c1 + 1.25 * ch.c1 * d;
    return ch;
}

std::vector<double> C_n_sequence_log(const ConstantsChain& chain, double d, int N) {
    std::vector<double> lg(N);
    lg[0] = std::log(chain.C1d);
    for (int n = 1; n < N; ++n) {
        double k = n; // recurrence index
        double factor = 1.0 + chain.c2 / (2.0 * k) + (chain.c1 + 2.25 * chain.c2) * d / k +
                        1.75 * chain.c1 * d * d / (k * k);
        lg[n] = lg[n - 1] + std::log(factor);
    }
    return lg;
}

double C_n_majorant_log(const ConstantsChain& chain, double d, int n) {
    const double gamma_e = 0.57721566490153286061;
    double expo = chain.c2 / 2.0 + (chain.c1 + 2.25 * chain.c2) * d;
    return std::log(chain.C1d) + gamma_e * expo + (7.0 * kPi * kPi / 24.0) * chain.c1 * d * d +
           expo * std::log(static_cast<double>(std::max(1, n)));
}

std::vector<double> C_n_sequence(const ConstantsChain& chain, double d, int N) {
    std::vector<double> lg = C_n_sequence_log(chain, d, N);
    std::vector<double> out(N);
    for (int i = 0; i < N; ++i) out[i] = std::exp(lg[i]);
    return out;
}

double weight_factor(Sign sign, double rho, Cplx xi) {
    double sg = xi.real() > 0.0 ? 1.0 : (xi.real() < 0.0 ? -1.0 : 0.0);
    double mp = (sign == Sign::minus) ? 1.0 : -1.0; // ∓sgn: minus branch keeps +sgn
    return std::max(1.0, mp * sg * std::pow(std::abs(xi.real()), rho));
}

double V_weight(const EquationSpec& eq, RayChartPtr chart, double s_from, double sigma) {
    if (sigma <= 0.0) throw ValidationError("V_weight needs sigma > 0");
    const double pm = (chart->sign == Sign::plus) ? 1.0 : -1.0;
    RayFunction phi(chart, chart->phi);
    RayFunction dphi(chart, chart->dphi);
    RayFunction psi(chart, chart->psi);
    const bool phi_zero = eq.phi_identically_zero();
    auto integrand = [&](double zeta) -> double {
        double dsd = chart->dsdzeta(zeta);
        if (phi_zero) {
            return std::abs(psi.eval_zeta(zeta)) * dsd;
        }
        Cplx ph = phi.eval_zeta(zeta);
        Cplx dp = dphi.eval_zeta(zeta);
        Cplx ps = psi.eval_zeta(zeta);
        return (0.25 * std::abs(ph * ph) + std::abs(0.5 * dp + pm * ps)) * dsd;
    };
    double z0 = chart->zeta_of_s(s_from);
    double I = integrate_adaptive_real([&](double z) { return integrand(z); }, z0, 1.0, 1e-13, 1e-11);
    return (phi_zero ? 1.0 : 6.0) * I / sigma;
}

double C_sampled(const CoeffTable& table, const EquationSpec& eq, RayChartPtr chart,
                 double r, double rho, const ConstantsChain& chain, double d,
                 std::uint64_t seed) {
    if (!(r > 0.0 && r < d)) throw ValidationError("C_sampled needs 0 < r < d");
    const int Ntab = table.order();
    // Gevrey majorant tail: sum_{n >= Ntab} (c3/2) C_{n+1}(d) (r/d)^n
    std::vector<double> lg = C_n_sequence_log(chain, d, Ntab + 400);
    const double lq = std::log(r / d);
    double tail = 0.0;
    for (int n = Ntab; n < Ntab + 400; ++n)
        tail += std::exp(std::log(chain.c3 / 2.0) + lg[n] + n * lq);
    double head0 = chain.c3 / 2.0 * chain.C1d;
    if (!(tail < 1e-10 * std::max(1.0, head0)))
        throw TailNotNegligible("coefficient table too short for |t| = 2r");

    auto G_at = [&](Cplx point, Cplx t) {
        Cplx acc = 0.0;
        double fact = 1.0;
        Cplx tp = 1.0;
        for (int n = 0; n + 1 <= Ntab; ++n) {
            if (n > 0) {
                fact *= n;
                tp *= t;
            }
            acc += table.eval(n + 1, point) * tp / fact;
        }
        return acc;
    };

    double sup = 0.0;
    const int n_angles = 32;
    auto consider = [&](Cplx point, Cplx xi) {
        double w = weight_factor(table.sign, rho, xi);
        for (int a = 0; a < n_angles; ++a) {
            Cplx t = std::polar(2.0 * r, 2.0 * kPi * a / n_angles);
            sup = std::max(sup, w * std::abs(G_at(point, t)));
        }
    };

    if (table.is_poly()) {
        for (int j = 0; j < chart->M; j += 2) {
            const XiPoint& pt = chart->path.samples[j];
            consider(1.0 / (pt.z * pt.sqrt_f0), pt.xi);
        }
        // seeded cloud near the anchor
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ur(0.0, 1.0);
        int accepted = 0;
        for (int tries = 0; tries < 4000 && accepted < 64; ++tries) {
            double rad = 0.05 + 0.35 * ur(rng);
            double th = 2.0 * kPi * ur(rng);
            Cplx z = chart->anchor.z + std::polar(rad, th);
            if (eq.pot.in_domain && !eq.pot.in_domain(z)) continue;
            if (!eq.xi_closed) break;
            Cplx xi = eq.xi_closed(z);
            if (!delta_member(eq, z, xi, eq.epsilon)) continue;
            if (!gamma_member(eq, xi, table.sign, d, eq.epsilon)) continue;
            Cplx sq = eq.pot.sqrt_f0_hint ? eq.pot.sqrt_f0_hint(z) : std::sqrt(eq.pot.f0(z).v);
            consider(1.0 / (z * sq), xi);
            ++accepted;
        }
    } else {
        for (int j = 0; j < chart->M; j += 2)
            consider(Cplx(chart->snode[j], 0.0), chart->path.samples[j].xi);
    }
    return 2.0 * sup;
}

double C_upper_log(const ConstantsChain& chain, double d, double r) {
    if (!(r > 0.0 && r < d)) throw ValidationError("C_upper needs 0 < r < d");
    const double lq = std::log(r / d);
    // log-sum-exp over n of log C_{n+1} + n log(r/d)
    const int chunk = 512;
    double lse = -1e300;
    std::vector<double> lg = C_n_sequence_log(chain, d, 1);
    double lgn = lg[0];
    int n = 0;
    double prev_term = -1e300;
    while (n < 2000000) {
        double term = lgn + n * lq;
        double mx = std::max(lse, term);
        lse = mx + std::log(std::exp(lse - mx) + std::exp(term - mx));
        if (term < lse - 40.0 && term < prev_term) break; // geometric tail exhausted
        prev_term = term;
        ++n;
        double k = n;
        lgn += std::log(1.0 + chain.c2 / (2.0 * k) + (chain.c1 + 2.25 * chain.c2) * d / k +
                        1.75 * chain.c1 * d * d / (k * k));
        (void)chunk;
    }
    return std::log(chain.c3) + lse;
}

double remainder_bound(double C, double V, double weight, double r, double sigma,
                       int N, Cplx u) {
    if (!(u.real() > sigma)) throw ParameterOrder("remainder_bound needs Re u > sigma");
    if (!(N >= 1)) throw ValidationError("remainder_bound needs N >= 1");
    double pref = 2.0 * r / N + 1.0 / (u.real() - sigma);
    double logb = std::log(C) + std::log(pref) + V - std::log(weight) + std::lgamma(N + 1.0) -
                  N * std::log(2.0 * r * std::abs(u));
    return std::exp(logb);
}

GevreyReport gevrey_bound_check(const EquationSpec& eq, RayChartPtr chart,
                                const ConstantsChain& chain, double d, int n_max) {
    RayJetTable jets = coeffs_collocation_jets(eq, chart, n_max, 1);
    std::vector<double> lg = C_n_sequence_log(chain, d, n_max);
    GevreyReport rep;
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 0; m <= 1; ++m) {
            for (int j = 0; j < chart->M; ++j) {
                double lhs = std::abs(jets.d[n][j][m]);
                if (lhs == 0.0) continue;
                double w = weight_factor(chart->sign, eq.rho, chart->path.samples[j].xi);
                double logrhs = std::log(chain.c3) + lg[n - 1] - n * std::log(2.0) +
                                std::lgamma(n + m) - (n + m - 1) * std::log(d) - std::log(w);
                double slack = std::exp(std::log(lhs) - logrhs);
                if (slack > rep.max_slack) {
                    rep.max_slack = slack;
                    rep.worst_n = n;
                    rep.worst_m = m;
                    rep.worst_xi = chart->path.samples[j].xi;
                }
            }
        }
    }
    rep.pass = rep.max_slack < 1.0;
    if (!rep.pass)
        throw BoundViolated("Gevrey bound violated at n=" + std::to_string(rep.worst_n) +
                            ", m=" + std::to_string(rep.worst_m));
    return rep;
}

std::pair<BigInt, BigInt> lemma3_identity(int n, int m) {
    if (n < 1 || m < 0) throw ValidationError("lemma3 needs n >= 1, m >= 0");
    auto fact = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    BigInt lhs = 0;
    for (int j = 0; j <= m; ++j) {
        BigInt binom = fact(m) / (fact(j) * fact(m - j));
        lhs += binom * fact(j) * fact(n + m - j - 1);
    }
    BigInt rhs = fact(n + m) / n;
    return {lhs, rhs};
}

} // namespace borelwkb
