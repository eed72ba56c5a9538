#ifndef BORELWKB_CHEBYSHEV_HPP
#define BORELWKB_CHEBYSHEV_HPP

#include <vector>
#include <complex>
#include "borelwkb/cplx.hpp"

namespace borelwkb {

// Chebyshev machinery on the Gauss (first-kind) nodes
//   x_j = cos(theta_j), theta_j = (2j+1)pi/(2M), j = 0..M-1,
// descending in x. Interior nodes only, so endpoint limits of mapped
// semi-infinite rays never have to be evaluated.
//
// Coefficient convention: p(x) = c[0]/2 + sum_{k>=1} c[k] T_k(x).
namespace cheb {

std::vector<double> gauss_nodes(int M);

// Values at the Gauss nodes (same order as gauss_nodes) -> coefficients.
std::vector<Cplx> coeffs_from_values(const std::vector<Cplx>& v);

Cplx clenshaw(const std::vector<Cplx>& c, double x);

// Coefficients of d/dx.
std::vector<Cplx> derivative(const std::vector<Cplx>& c);

// Coefficients of the antiderivative with an arbitrary constant (c[0] term
// chosen so the value at x = 0 is 0; callers normalize as needed).
std::vector<Cplx> antiderivative(const std::vector<Cplx>& c);

// integral over [-1, 1]
Cplx integrate(const std::vector<Cplx>& c);

// max |c_k| over the last `count` coefficients, as a resolution check
double tail_magnitude(const std::vector<Cplx>& c, int count = 2);

} // namespace cheb
} // namespace borelwkb

#endif
