#ifndef BORELWKB_TAYLOR_HPP
#define BORELWKB_TAYLOR_HPP

#include <vector>
#include "borelwkb/cplx.hpp"

namespace borelwkb {

// Truncated Taylor series c[0..K] about a point (c[k] = k-th coefficient,
// not the derivative). All operations truncate to the shorter length's
// order; lengths are fixed by the caller.
namespace taylor {

using Series = std::vector<Cplx>;

Series mul(const Series& a, const Series& b, int K);
// a / b, requires b[0] != 0
Series div(const Series& a, const Series& b, int K);
// square root with the branch fixed by root0 (root0^2 = a[0])
Series sqrt(const Series& a, Cplx root0, int K);
// composition a(b(x) - b[0]) ... caller must pass b with b[0] == 0
Series compose(const Series& a, const Series& b_no_const, int K);
// functional inverse of a series with a[0] == 0, a[1] != 0:
// returns g with a(g(y)) = y + O(y^{K+1}), g[0] = 0
Series invert(const Series& a, int K);
// term-by-term derivative / antiderivative (with zero constant)
Series derivative(const Series& a);
Series antiderivative(const Series& a);

// coefficients -> derivative values  (d_k = k! c_k)
std::vector<Cplx> to_derivatives(const Series& a);

} // namespace taylor
} // namespace borelwkb

#endif
