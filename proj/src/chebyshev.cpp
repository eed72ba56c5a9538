#include "borelwkb/chebyshev.hpp"

#include <cmath>
#include <algorithm>

namespace borelwkb {
namespace cheb {

std::vector<double> gauss_nodes(int M) {
    std::vector<double> x(M);
    for (int j = 0; j < M; ++j) x[j] = std::cos(kPi * (2 * j + 1) / (2.0 * M));
    return x;
}

std::vector<Cplx> coeffs_from_values(const std::vector<Cplx>& v) {
    const int M = static_cast<int>(v.size());
    std::vector<Cplx> c(M);
    for (int k = 0; k < M; ++k) {
        Cplx s = 0.0;
        for (int j = 0; j < M; ++j)
            s += v[j] * std::cos(kPi * k * (2 * j + 1) / (2.0 * M));
        c[k] = s * (2.0 / M);
    }
    return c;
}

Cplx clenshaw(const std::vector<Cplx>& c, double x) {
    const int M = static_cast<int>(c.size());
    Cplx b1 = 0.0, b2 = 0.0;
    for (int k = M - 1; k >= 1; --k) {
        Cplx b0 = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + 0.5 * c[0];
}

std::vector<Cplx> derivative(const std::vector<Cplx>& c) {
    const int M = static_cast<int>(c.size());
    std::vector<Cplx> d(M, Cplx(0.0));
    if (M < 2) return d;
    d[M - 2] = 2.0 * (M - 1) * c[M - 1];
    for (int k = M - 3; k >= 0; --k)
        d[k] = d[k + 2] + 2.0 * (k + 1) * c[k + 1];
    return d;
}

std::vector<Cplx> antiderivative(const std::vector<Cplx>& c) {
    const int M = static_cast<int>(c.size());
    std::vector<Cplx> a(M + 1, Cplx(0.0));
    auto src = [&](int k) -> Cplx { return (k >= 0 && k < M) ? c[k] : Cplx(0.0); };
    for (int k = 1; k <= M; ++k)
        a[k] = (src(k - 1) - src(k + 1)) / (2.0 * k);
    Cplx at0 = clenshaw(a, 0.0);
    a[0] -= 2.0 * at0;
    return a;
}

Cplx integrate(const std::vector<Cplx>& c) {
    const int M = static_cast<int>(c.size());
    Cplx s = c[0]; // (c0/2) * 2
    for (int k = 2; k < M; k += 2)
        s += c[k] * (2.0 / (1.0 - static_cast<double>(k) * k));
    return s;
}

double tail_magnitude(const std::vector<Cplx>& c, int count) {
    const int M = static_cast<int>(c.size());
    double t = 0.0;
    for (int k = std::max(0, M - count); k < M; ++k) t = std::max(t, std::abs(c[k]));
    return t;
}

} // namespace cheb
} // namespace borelwkb
