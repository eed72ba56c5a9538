#include "borelwkb/taylor.hpp"
#include "borelwkb/errors.hpp"

namespace borelwkb {
namespace taylor {

Series mul(const Series& a, const Series& b, int K) {
    Series r(K + 1, Cplx(0.0));
    for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

Series div(const Series& a, const Series& b, int K) {
    if (b.empty() || b[0] == 0.0) throw ValidationError("taylor::div by series with zero constant term");
    Series r(K + 1, Cplx(0.0));
    for (int k = 0; k <= K; ++k) {
        Cplx s = (k < static_cast<int>(a.size())) ? a[k] : Cplx(0.0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) s -= b[j] * r[k - j];
        r[k] = s / b[0];
    }
    return r;
}

Series sqrt(const Series& a, Cplx root0, int K) {
    if (a.empty() || a[0] == 0.0) throw ValidationError("taylor::sqrt at a zero");
    Series r(K + 1, Cplx(0.0));
    r[0] = root0;
    for (int k = 1; k <= K; ++k) {
        Cplx s = (k < static_cast<int>(a.size())) ? a[k] : Cplx(0.0);
        for (int j = 1; j < k; ++j) s -= r[j] * r[k - j];
        r[k] = s / (2.0 * root0);
    }
    return r;
}

Series compose(const Series& a, const Series& b, int K) {
    if (!b.empty() && b[0] != 0.0) throw ValidationError("taylor::compose requires b[0] == 0");
    // Horner on truncated series
    Series r(K + 1, Cplx(0.0));
    int na = static_cast<int>(a.size()) - 1;
    if (na < 0) return r;
    r[0] = a[std::min(na, K)];
    for (int k = std::min(na, K) - 1; k >= 0; --k) {
        r = mul(r, b, K);
        r[0] += a[k];
    }
    return r;
}

Series invert(const Series& a, int K) {
    if (a.size() < 2 || a[0] != 0.0 || a[1] == 0.0)
        throw ValidationError("taylor::invert requires a[0]=0, a[1]!=0");
    Series g(K + 1, Cplx(0.0));
    g[1] = 1.0 / a[1];
    // Newton-like coefficient peeling: match a(g(y)) = y order by order
    for (int k = 2; k <= K; ++k) {
        // compute composition up to order k with current g (g_k unknown -> 0)
        Series comp = compose(a, g, k);
        // coefficient of y^k of a(g) with g_k included is a1*g_k + comp[k]
        g[k] = -comp[k] / a[1];
    }
    return g;
}

Series derivative(const Series& a) {
    if (a.size() <= 1) return Series{Cplx(0.0)};
    Series r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = static_cast<double>(k) * a[k];
    return r;
}

Series antiderivative(const Series& a) {
    Series r(a.size() + 1, Cplx(0.0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
    return r;
}

std::vector<Cplx> to_derivatives(const Series& a) {
    std::vector<Cplx> d(a.size());
    double f = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k > 0) f *= static_cast<double>(k);
        d[k] = a[k] * f;
    }
    return d;
}

} // namespace taylor
} // namespace borelwkb
