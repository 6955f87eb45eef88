#pragma once

#include "superharm/harmonics.hpp"
#include "superharm/hermite.hpp"
#include <functional>
#include <optional>

namespace superharm {

// canonical inner product <f|g>_1 = int f (star conj(g)) on P exp(-R^2/2);
// the implicit Gaussian powers must combine to exp(-r^2)
Scalar inner1(GaussianWrapped const &f, GaussianWrapped const &g);

// element of P exp(-R^2/2) in Fischer-structured form
// sum_c R^{2 i_c} h_c exp(-R^2/2) with harmonic h_c and its T image cached
struct StructuredComponent {
	int radial_power = 0;
	SuperPolynomial h;  // harmonic
	SuperPolynomial th; // T(h)
};

struct StructuredElement {
	Dims dims;
	std::vector<StructuredComponent> comps;

	GaussianWrapped to_wrapped() const;
};

// T on the block basis: (-1)^i and a fermionic tilde; radial factors pass
// through
StructuredElement T_map(StructuredElement const &e);

// spherical Hermite function phi_{j,B} over a harmonic block, in structured
// form: 2^{2j} j! L_j^{M/2+k-1}(R^2) B exp(-R^2/2)
StructuredElement structured_spherical_hermite(int j, HarmonicBlock const &B);
// a single block as a structured element
StructuredElement structured_block(HarmonicBlock const &B, int radial_power = 0);
// Fischer decomposition + Pizzetti block projection of a raw polynomial
StructuredElement structure_raw(SuperPolynomial const &p);

// <f|g>_2 = int f conj(T(g)) exp(-R^2), through the structured form; M > 0
Scalar inner2(StructuredElement const &f, StructuredElement const &g);

// operators acting on structured elements (the sl2 action preserves the
// Fischer blocks)
StructuredElement structured_mul_R2(StructuredElement const &e);
StructuredElement structured_nabla2(StructuredElement const &e);
StructuredElement structured_two_euler_plus_M(StructuredElement const &e);

struct AdjointReport {
	bool pass = true;
	std::string witness; // first failing pair, if any
	long pairs_checked = 0;
};

// <A f|g> = <f|B g> over a spanning set
AdjointReport adjoint_check_f(std::function<GrassmannElement(GrassmannElement const &)> opA,
                              std::function<GrassmannElement(GrassmannElement const &)> opB, int n);
AdjointReport adjoint_check_1(std::function<GaussianWrapped(GaussianWrapped const &)> opA,
                              std::function<GaussianWrapped(GaussianWrapped const &)> opB, Dims d,
                              int degree);
AdjointReport adjoint_check_2(std::function<StructuredElement(StructuredElement const &)> opA,
                              std::function<StructuredElement(StructuredElement const &)> opB, Dims d,
                              int degree);

struct GramReport {
	std::vector<std::string> labels;
	std::vector<std::vector<Scalar>> matrix;
	std::vector<Scalar> diagonal_prediction; // empty when not requested
	bool off_diagonal_zero = true;

	bool diagonal_matches() const;
	std::string to_csv() const;
	std::string to_json() const;
};

// Gram of the fermionic spherical Hermite functions phi^f_{j,k,l}, j <= n-k,
// with predictions 4^{2j} j!/(n-k-j)! times the tracked basis norms
GramReport gram_fermionic(int n);

// Gram of the cartesian basis under <.|.>_1, occupations with total degree
// <= max_total, with predictions 2^{sum k} prod k_i! pi^{M/2}
GramReport gram_cartesian(Dims d, int max_total);

// Gram of spherical Hermite functions phi_{j,B}, j <= jmax, deg B <= kmax
// under <.|.>_2, with predictions 1/2 4^{2j} j! Gamma(j+k+M/2) times the
// tracked block norms
GramReport gram_spherical_2(Dims d, int jmax, int kmax);

// same set under <.|.>_1 together with the block-pattern predicate of the
// partial-orthogonality lemma: entries vanish unless the two functions share
// the bosonic and fermionic basis element and j+i agrees
struct Gram1Entry {
	int j1, b1, j2, b2;
	bool predicate;
	Scalar value;
};
struct Gram1Report {
	std::vector<Gram1Entry> entries;
	bool pattern_holds = true;     // value != 0 implies predicate
	bool has_offdiag_nonzero = false;
};
Gram1Report gram_spherical_1(Dims d, int jmax, int kmax);

struct NogoReport {
	int m = 0, n = 0, M = 0;
	std::vector<std::pair<int, Rat>> factors; // (j, 8j(2j+M-2)) at k = 0
	int violating_j = -1;
	bool degenerate = false; // factor zero (M = 0) rather than negative
};

// recursion factors certifying that no inner product with self-adjoint R^2
// and nabla^2 exists for M <= 0
NogoReport nogo_witness(int m, int n);

// theta^{2n+2} vanishes identically: the witness against (theta^2)+ = theta^2
bool nogo_theta_witness(int n);

// no inner product on Lambda_2n is invariant under all determinant-one
// substitutions: on the degree-one block the constraints R^T Q R = Q for the
// elementary transvections force Q = 0; returns true when the exact null
// space is trivial
bool nogo_covariance_witness(int n);

} // namespace superharm
