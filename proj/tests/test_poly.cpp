#include "doctest.h"

#include "borelwkb/poly.hpp"

using namespace borelwkb;

TEST_CASE("PolyC arithmetic and calculus") {
    PolyC a(std::vector<Cplx>{1.0, 2.0, 3.0}); // 1 + 2x + 3x^2
    PolyC b(std::vector<Cplx>{0.0, 1.0});      // x
    PolyC s = a + b;
    CHECK(s.eval(2.0) == Cplx(1 + 4 + 12 + 2));
    PolyC m = a * b;
    CHECK(m.degree() == 3);
    CHECK(std::abs(m.eval(Cplx(0, 1)) - Cplx(0, 1) * a.eval(Cplx(0, 1))) < 1e-15);
    PolyC d = a.derivative();
    CHECK(d.eval(5.0) == Cplx(2.0 + 30.0));
    PolyC ad = a.antiderivative();
    CHECK(ad.eval(0.0) == Cplx(0.0));
    CHECK(std::abs(ad.eval(1.0) - Cplx(1.0 + 1.0 + 1.0)) < 1e-15);
}

TEST_CASE("exact lane tracks doubles and trims") {
    PolyC one = PolyC::constant_exact(Rational(1));
    PolyC x = one.antiderivative();        // x
    PolyC x2 = (x * x);                    // x^2
    PolyC q = x2.scaled_exact(Rational(5, 3));
    REQUIRE(q.has_exact());
    CHECK((*q.exact)[2] == Rational(5, 3));
    CHECK(std::abs(q.c[2].real() - 5.0 / 3.0) < 1e-15);
    PolyC z = q - q;
    CHECK(z.is_zero());
    PolyC r = x2.reflect();
    CHECK(r.eval(2.0) == x2.eval(-2.0));
}
