#ifndef BORELWKB_CPLX_HPP
#define BORELWKB_CPLX_HPP

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>

namespace borelwkb {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Square root of w on the branch closest to ref. Used for continuous branch
// tracking of f0^{1/2} along contours and rays.
inline Cplx sqrt_near(Cplx w, Cplx ref) {
    Cplx r = std::sqrt(w);
    if (std::norm(r - ref) > std::norm(r + ref)) return -r;
    return r;
}

inline Cplx pow_principal(Cplx base, Cplx expo) {
    return std::exp(expo * std::log(base));
}

inline bool finite(Cplx w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

// 17 significant digits: round-trips a double exactly in decimal.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace borelwkb

#endif
