#ifndef BORELWKB_POLY_HPP
#define BORELWKB_POLY_HPP

#include <vector>
#include <optional>
#include <boost/multiprecision/cpp_int.hpp>

#include "borelwkb/cplx.hpp"

namespace borelwkb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

enum class Sign { plus, minus };
inline int sign_sigma(Sign s) { return s == Sign::minus ? +1 : -1; } // direction of increasing Re xi along P(∓inf, xi)

enum class VarTag { p, invzm1, xi, t };

// Dense univariate polynomial over C, with an optional exact-rational lane
// carried in parallel for the real-rational cases (Bessel tables at rational
// kappa). Index = degree; canonical zero is the empty coefficient vector.
class PolyC {
public:
    std::vector<Cplx> c;
    std::optional<std::vector<Rational>> exact;
    VarTag var = VarTag::t;

    PolyC() = default;
    explicit PolyC(std::vector<Cplx> coeffs, VarTag v = VarTag::t) : c(std::move(coeffs)), var(v) { trim(); }

    static PolyC constant(Cplx a, VarTag v = VarTag::t);
    static PolyC constant_exact(const Rational& a, VarTag v = VarTag::t);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool has_exact() const { return exact.has_value(); }

    Cplx eval(Cplx x) const;
    Rational eval_exact(const Rational& x) const;

    PolyC derivative() const;
    PolyC antiderivative() const; // vanishing at 0

    // coefficient reflection x -> -x
    PolyC reflect() const;

    void trim();

    friend PolyC operator+(const PolyC& a, const PolyC& b);
    friend PolyC operator-(const PolyC& a, const PolyC& b);
    friend PolyC operator*(const PolyC& a, const PolyC& b);
    PolyC scaled(Cplx s) const;            // drops the exact lane
    PolyC scaled_exact(const Rational& s) const;
};

} // namespace borelwkb

#endif
