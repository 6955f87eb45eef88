#pragma once

#include "superharm/products.hpp"

namespace superharm {

// reproducing kernel F_k of H_k^f inside Lambda_4n:
// sum_j c_j^k <x',y'>^{k-2j} theta_x^2j theta_y^2j with
// c_j^k = 2^{k-2j} pi^n (n+1-k) / ((k-2j)! j! (n+1+j-k)!)
GrassmannElement fermionic_kernel(int n, int k);

struct CheckReport {
	bool pass = true;
	std::string detail;
};

// pairing in y' against every basis harmonic gives tilde(H)/(2^{n-k}(n-k)!),
// and the coefficients match the C^(-n-1) Gegenbauer expansion
CheckReport kernel_reproduces(int n, int k);

// homogenized reproducing kernel of H_k in doubled variables:
// pre (R^2 R_y^2)^{(k-2i)/2-free form} C_k^{(M-2)/2}(<x,y>) with
// pre = Gamma(M/2)/(2 pi^{M/2}) and the (2k+M-2)/(M-2) prefactor absorbed
// through the renormalized Gegenbauer coefficients
SuperPolynomial super_kernel(int k, Dims d);

// (a) int_{SS,x} H_l(x) G_k(x,y) = delta_{kl} H_l(y) mod (R_y^2 - 1) for
// l <= k+2; (b) sum_l T(H^l)(x) H^l(y) / nu_l equals the homogenized kernel
CheckReport super_kernel_check(int k, Dims d);

// doubled-variable building blocks
SuperPolynomial pairing_super(Dims d);  // <x,y> = sum x_i y_i + <x',y'>
SuperPolynomial R2_x(Dims d);
SuperPolynomial R2_y(Dims d);
SuperPolynomial embed_poly_x(SuperPolynomial const &p);
SuperPolynomial embed_poly_y(SuperPolynomial const &p);
// Pizzetti functional in the x-half; the result lives in the y variables
SuperPolynomial partial_pizzetti_x(SuperPolynomial const &f);
// move a y-only doubled polynomial back to single mode
SuperPolynomial strip_to_y(SuperPolynomial const &p);

struct MehlerReport {
	std::string identity;
	int m = 0, n = 0;
	int degree = -1; // -1 for exact identities
	bool equal = false;
	std::string first_diff;
	double wall_time = 0;

	std::string to_json() const;
};

// exact identity in Lambda_4n (x) Q(t)[s]
MehlerReport mehler_fermionic_verify(int n);
// the alpha = +-pi/2 specialization over the Gaussian rationals
MehlerReport mehler_fourier_point(int n, int sign);
// coefficient-wise identity truncated at total degree D and t-order
// 2 floor(D/2) + 2
MehlerReport mehler_super_verify(Dims d, int D);
// the O(m) reduction as an identity in the three scalars (a^2, b^2, c)
MehlerReport mehler_classical_abc(int m, int D);

struct EigenCheck {
	int j, k;
	Scalar eigenvalue; // t^{2j+k}
	bool energy_consistent;
	bool composition_consistent;
};

struct FracFourierResult {
	bool pass = true;
	std::vector<EigenCheck> checks;
};

// the fractional Fourier transform on the spherical Hermite basis:
// eigenvalues t^{2j+k}, consistency against the oscillator energies and the
// composition law
FracFourierResult frac_fourier_eigencheck(Dims d, int degree);

} // namespace superharm
