#pragma once

#include "superharm/harmonics.hpp"

namespace superharm {

// univariate polynomial with Scalar coefficients, ascending degree
class OrthoPoly {
  public:
	std::vector<Scalar> c;

	int degree() const { return (int)c.size() - 1; }
	void trim()
	{
		while (!c.empty() && c.back().is_zero())
			c.pop_back();
	}
	Scalar coeff(int i) const { return i < (int)c.size() ? c[i] : Scalar(); }

	// substitute a superpolynomial for the variable
	SuperPolynomial eval_at(SuperPolynomial const &x) const;
	Scalar eval_scalar(Scalar const &x) const;

	friend bool operator==(OrthoPoly const &a, OrthoPoly const &b) { return a.c == b.c; }
};

// H_k(t) = sum_j (-1)^j 2^{k-2j} k! / ((k-2j)! j!) t^{k-2j}
OrthoPoly hermite_1d(int k);

// L_k^(alpha)(t) = sum_j (j+alpha+1)_{k-j} / (j! (k-j)!) (-t)^j; the
// Pochhammer form keeps negative integer alpha exact
OrthoPoly laguerre(int k, HalfInteger alpha);

// C_k^(alpha)(t) = sum_j (-1)^j (alpha)_{k-j} / (j! (k-2j)!) (2t)^{k-2j}
OrthoPoly gegenbauer(int k, HalfInteger alpha);

// ((k+alpha)/alpha) C_k^(alpha)(t) continued to alpha = 0 through
// (alpha)_{k-j} = alpha (alpha+1)_{k-j-1}; used by the reproducing kernels
OrthoPoly gegenbauer_renormalized(int k, HalfInteger alpha);

struct CartesianBasisFunction {
	GaussianWrapped psi;  // unnormalized: prod (x_i - d_i)^{k_i} prod b_j^+ exp(-R^2/2)
	Scalar normsq;        // predicted <psi|psi>_1 = 2^{sum k} prod k_i! pi^{M/2}
	std::vector<int> occ_b;
	std::vector<int> occ_f;
};

CartesianBasisFunction cartesian_basis(Dims d, std::vector<int> const &bos_occ,
                                       std::vector<int> const &ferm_occ);

// spherical Hermite function: (-nabla^2 - R^2 + 2E + M)^j H exp(-R^2/2),
// cross-checked against 2^{2j} j! L_j^{M/2+k-1}(R^2) H exp(-R^2/2) whenever
// the Laguerre route applies (M not in -2N, or m = 0)
GaussianWrapped spherical_hermite(int j, SuperPolynomial const &harmonic, Dims d);

// creation/annihilation building blocks on wrapped functions
GaussianWrapped apply_araise(int i, GaussianWrapped const &w);          // x_i - d_i
GaussianWrapped apply_braise(int j, GaussianWrapped const &w);          // fermionic raising operator
GaussianWrapped apply_hamiltonian(GaussianWrapped const &w);            // (-nabla^2 + R^2)/2
GaussianWrapped apply_lowering(GaussianWrapped const &w, Dims d);       // nabla^2 + R^2 + 2E + M

// eigenvalue of the harmonic oscillator on an eigenfunction
Scalar oscillator_check(GaussianWrapped const &phi, Dims d);

} // namespace superharm
