#include "doctest.h"

#include <cmath>
#include "borelwkb/chebyshev.hpp"

using namespace borelwkb;

TEST_CASE("gauss nodes reproduce a polynomial exactly") {
    int M = 16;
    auto x = cheb::gauss_nodes(M);
    std::vector<Cplx> v(M);
    auto f = [](double t) { return Cplx(t * t * t - 0.5 * t + 2.0, -t * t); };
    for (int j = 0; j < M; ++j) v[j] = f(x[j]);
    auto c = cheb::coeffs_from_values(v);
    for (double t : {-0.9, -0.3, 0.0, 0.7, 0.99})
        CHECK(std::abs(cheb::clenshaw(c, t) - f(t)) < 1e-13);
}

TEST_CASE("derivative and antiderivative invert each other") {
    int M = 32;
    auto x = cheb::gauss_nodes(M);
    std::vector<Cplx> v(M);
    for (int j = 0; j < M; ++j) v[j] = std::exp(Cplx(0.0, 2.0) * x[j]);
    auto c = cheb::coeffs_from_values(v);
    auto d = cheb::derivative(c);
    for (double t : {-0.8, 0.1, 0.6}) {
        Cplx expect = Cplx(0.0, 2.0) * std::exp(Cplx(0.0, 2.0) * t);
        CHECK(std::abs(cheb::clenshaw(d, t) - expect) < 1e-11);
    }
    auto a = cheb::antiderivative(c);
    for (double t : {-0.5, 0.4}) {
        Cplx expect = (std::exp(Cplx(0.0, 2.0) * t) - 1.0) / Cplx(0.0, 2.0);
        CHECK(std::abs(cheb::clenshaw(a, t) - expect) < 1e-12);
    }
}

TEST_CASE("definite integral over [-1,1]") {
    int M = 24;
    auto x = cheb::gauss_nodes(M);
    std::vector<Cplx> v(M);
    for (int j = 0; j < M; ++j) v[j] = std::cos(3.0 * x[j]);
    auto c = cheb::coeffs_from_values(v);
    double expect = 2.0 * std::sin(3.0) / 3.0;
    CHECK(std::abs(cheb::integrate(c) - Cplx(expect)) < 1e-12);
}
