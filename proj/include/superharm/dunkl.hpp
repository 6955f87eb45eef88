#pragma once

#include "superharm/superpoly.hpp"
#include <map>
#include <vector>

namespace superharm {

// polynomials here are purely bosonic with rational coefficients
using Poly = SuperPolynomial;

struct RootSystem {
	int m = 0;                            // ambient dimension
	std::vector<std::vector<Rat>> roots;  // positive roots, arbitrary scale
	std::vector<int> orbit;               // orbit id per root
	std::map<int, Rat> kappa;             // multiplicity per orbit

	Rat gamma_sum() const
	{
		Rat g = 0;
		for (size_t i = 0; i < roots.size(); ++i)
			g += kappa.at(orbit[i]);
		return g;
	}
	Rat dunkl_dimension() const { return Rat(m) + 2 * gamma_sum(); } // mu = m + 2 gamma

	// shipped families
	static RootSystem Z2m(int m, std::vector<Rat> kappas); // one orbit per coordinate
	static RootSystem A(int m);                            // A_{m-1} inside Q^m, single orbit
	static RootSystem B(int m);                            // short + long orbits
	static RootSystem D(int m);                            // single orbit
	void set_kappa(std::vector<Rat> const &per_orbit);

	// verify the reflection of each root permutes +-R and that kappa is
	// orbit-constant; throws on violation
	void validate() const;

	std::string to_json() const;
	static RootSystem from_json(std::string const &text);
};

// reflection r_alpha(x) = x - 2 <alpha,x>/|alpha|^2 alpha applied to a polynomial
Poly reflect(std::vector<Rat> const &alpha, Poly const &p);

// Dunkl operator T_i = d_i + sum_alpha kappa_alpha alpha_i (f - f(r_alpha x))/<alpha,x>
Poly dunkl_T(int i, Poly const &p, RootSystem const &rs);

// Delta_kappa = sum T_i^2
Poly dunkl_laplacian(Poly const &p, RootSystem const &rs);

// Fischer pairing [p,q]_kappa = (p(T/2) q)(0)
Rat fischer_kappa(Poly const &p, Poly const &q, RootSystem const &rs);

// Roesler's generalized Hermite polynomial 2^{|nu|} e^{-Delta_kappa/4} p_nu
Poly rosler_hermite(Poly const &p, RootSystem const &rs);

struct DunklBasisElement {
	Poly p;
	Rat normsq; // [p,p]_kappa
};

// Gram-Schmidt of the monomials under the Fischer pairing, degree by degree
std::vector<DunklBasisElement> fischer_orthogonal_basis(RootSystem const &rs, int degree);

// exact division of (f - f(r_alpha x)) by <alpha,x>; remainder must vanish
Poly divided_difference(std::vector<Rat> const &alpha, Poly const &p);

long dim_dunkl_harmonics(RootSystem const &rs, int k, int max_probe_degree = -1);

} // namespace superharm
