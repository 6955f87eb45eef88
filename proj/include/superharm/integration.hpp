#pragma once

#include "superharm/superpoly.hpp"

namespace superharm {

// O(m)-invariant measure on S^{m-1}: 0 for any odd exponent, otherwise
// 2 prod Gamma((a_i+1)/2) / Gamma((|a|+m)/2)
Scalar sphere_moment(int m, std::vector<int> const &exponents);

// int_{R^m} x^a exp(-r^2) dV = prod Gamma((a_i+1)/2) for even a, else 0
Scalar gaussian_moment_b(int m, std::vector<int> const &exponents);

// Pizzetti supersphere functional:
// int_SS f = sum_k 2 pi^{M/2} / (2^{2k} k! Gamma(k+M/2)) (nabla^{2k} f)(0).
// 1/Gamma is taken as the entire reciprocal, so terms at Gamma poles
// contribute zero.
Scalar pizzetti(SuperPolynomial const &f);

// pizzetti(f*g) for homogeneous f, g without materializing the product
Scalar pizzetti_of_product(SuperPolynomial const &f, SuperPolynomial const &g);

// the same functional through radial derivatives, the sphere measure and the
// Berezin integral; requires m >= 1 and must agree with pizzetti
Scalar supersphere_alt(SuperPolynomial const &f);
// as above but without the cross-check against pizzetti
Scalar supersphere_alt_raw(SuperPolynomial const &f);

// int f exp(-R^2) = sum over homogeneous components P_k of
// 1/2 Gamma((k+M)/2) int_SS P_k; components with vanishing Pizzetti value
// contribute zero without evaluating Gamma
Scalar gaussian_super(SuperPolynomial const &f);

} // namespace superharm
