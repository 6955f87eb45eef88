#pragma once

#include "superharm/integration.hpp"

namespace superharm {

// true when M = m-2n is a negative even integer. M = 0 is rejected lazily,
// by the vanishing-Pochhammer guards, because the degeneration there only
// hits even degrees >= 2.
inline bool bad_super_dimension(Dims d)
{
	int M = d.super_dimension();
	return M < 0 && M % 2 == 0;
}

// harmonic projection P_0^k = sum_j (-1)^j/(4^j j!) 1/((k+M/2-j-1)_j) R^2j nabla^2j
SuperPolynomial project_h0(SuperPolynomial const &P);

// Gamma(l+M/2+j)/Gamma(l+M/2+j-i) * 4^i j!/(j-i)! from the action of nabla^2i
// on R^2j H_l
Rat radial_laplacian_constant(int i, int j, int l, Dims d);
// fermionic variant (-1)^i 4^i j!/(j-i)! (n+i-j-k)!/(n-j-k)!
Rat fermionic_radial_constant(int i, int j, int k, int n);

struct FischerDecomposition {
	// pairs (j, harmonic h_{k-2j}) with P = sum_j R^2j h_{k-2j}
	std::vector<std::pair<int, SuperPolynomial>> components;
};

FischerDecomposition fischer_decompose(SuperPolynomial const &P);
SuperPolynomial fischer_reassemble(FischerDecomposition const &dec, Dims d);
// reduction mod (R^2 - 1): sum of the harmonic components
SuperPolynomial fischer_reduce_mod_sphere(SuperPolynomial const &P);

long dim_P(Dims d, int k);
long dim_H(Dims d, int k); // dim P_k - dim P_{k-2}
long dim_Hb(int m, int p);
long dim_Hf(int n, int k); // C(2n,k) - C(2n,k-2)

// basis of fermionic spherical harmonics by the Sp(2) x Sp(2n-2) recursion;
// rational coefficients, not orthogonalized
std::vector<GrassmannElement> fermionic_harmonic_basis(int n, int k);

struct FermionicBasisElement {
	GrassmannElement h;
	Scalar normsq; // 2^{n-k} (n-k)! <h|h>, so the reference basis has norm 1
};
// Gram-Schmidt of the recursion basis under <.|.> on Lambda_2n
std::vector<FermionicBasisElement> fermionic_orthogonal_basis(int n, int k)
;

struct BosonicBasisElement {
	SuperPolynomial h; // purely bosonic polynomial
	Scalar normsq;     // exact squared norm over S^{m-1}
};
std::vector<BosonicBasisElement> bosonic_harmonic_basis(int m, int p);

// sphere pairing of two purely bosonic polynomials
Scalar sphere_pair(SuperPolynomial const &f, SuperPolynomial const &g);

// f_{k,p,q}(r^2, theta^2): the radial factor joining H_p^b and H_q^f into a
// super harmonic
SuperPolynomial f_kpq(int k, int p, int q, Dims d);

Scalar a_kpq(int k, int p, int q, Dims d);
Scalar b_kpq(int k, int p, int q, Dims d);

// one irreducible block f_{i,p,q} H_p^b H_q^f of the decomposition of H_k
struct HarmonicBlock {
	int i = 0, p = 0, q = 0;
	SuperPolynomial hb;
	GrassmannElement hf;
	Scalar normsq_b;
	Scalar normsq_f;
	Dims dims;

	SuperPolynomial assembled() const;   // f_{i,p,q} hb hf
	SuperPolynomial t_assembled() const; // (-1)^i f_{i,p,q} hb tilde(hf)
	int degree() const { return 2 * i + p + q; }
};

std::vector<HarmonicBlock> super_harmonic_basis(int k, Dims d);

} // namespace superharm
