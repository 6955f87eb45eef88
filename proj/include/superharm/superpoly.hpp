#pragma once

#include "superharm/grassmann.hpp"
#include <functional>
#include <vector>

namespace superharm {

struct Dims {
	int m = 0; // commuting variables
	int n = 0; // anticommuting generator pairs
	int super_dimension() const { return m - 2 * n; }
	friend bool operator==(Dims a, Dims b) { return a.m == b.m && a.n == b.n; }
};

class SuperMonomial {
  public:
	std::vector<int> bos; // exponents of x_1..x_m
	FermionicMonomial ferm = 0;

	SuperMonomial() = default;
	SuperMonomial(std::vector<int> b, FermionicMonomial f) : bos(std::move(b)), ferm(f) {}

	int bdegree() const
	{
		int d = 0;
		for (int e : bos)
			d += e;
		return d;
	}
	int degree() const { return bdegree() + fdegree(ferm); }

	friend bool operator==(SuperMonomial const &a, SuperMonomial const &b)
	{
		return a.bos == b.bos && a.ferm == b.ferm;
	}
	// graded ordering so terms print lowest degree first
	friend bool operator<(SuperMonomial const &a, SuperMonomial const &b)
	{
		int da = a.degree(), db = b.degree();
		if (da != db)
			return da < db;
		if (a.bos != b.bos)
			return a.bos < b.bos;
		return a.ferm < b.ferm;
	}
};

// Sparse element of R[x_1..x_m] (x) Lambda_2n with Scalar coefficients.
// Doubled mode carries 2m commuting and 4n anticommuting variables for
// kernel computations in (x, y).
class SuperPolynomial {
  public:
	Dims dims;
	GrassmannMode mode = GrassmannMode::Single;
	std::map<SuperMonomial, Scalar> terms;

	SuperPolynomial() = default;
	explicit SuperPolynomial(Dims d, GrassmannMode mode_ = GrassmannMode::Single) : dims(d), mode(mode_) {}

	int bvars() const { return mode == GrassmannMode::Single ? dims.m : 2 * dims.m; }
	int fgens() const { return mode == GrassmannMode::Single ? 2 * dims.n : 4 * dims.n; }

	static SuperPolynomial one(Dims d, GrassmannMode mode = GrassmannMode::Single)
	{
		SuperPolynomial r(d, mode);
		r.terms[SuperMonomial(std::vector<int>(r.bvars(), 0), 0)] = Scalar(1);
		return r;
	}
	static SuperPolynomial constant(Dims d, Scalar const &c, GrassmannMode mode = GrassmannMode::Single)
	{
		SuperPolynomial r(d, mode);
		if (!c.is_zero())
			r.terms[SuperMonomial(std::vector<int>(r.bvars(), 0), 0)] = c;
		return r;
	}
	static SuperPolynomial variable(Dims d, int i, GrassmannMode mode = GrassmannMode::Single);  // x_{i+1}
	static SuperPolynomial generator(Dims d, int j, GrassmannMode mode = GrassmannMode::Single); // x'_{j+1}

	bool is_zero() const { return terms.empty(); }
	int degree() const
	{
		int d = 0;
		for (auto const &[m, c] : terms)
			d = std::max(d, m.degree());
		return d;
	}
	bool is_homogeneous(int *deg_out = nullptr) const;

	void add_term(SuperMonomial const &m, Scalar const &c)
	{
		if (c.is_zero())
			return;
		auto it = terms.find(m);
		if (it == terms.end())
			terms.emplace(m, c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	friend bool operator==(SuperPolynomial const &a, SuperPolynomial const &b)
	{
		return a.dims == b.dims && a.mode == b.mode && a.terms == b.terms;
	}

	std::string to_string() const;
	std::string to_json() const;
};

SuperPolynomial sadd(SuperPolynomial const &a, SuperPolynomial const &b);
SuperPolynomial sneg(SuperPolynomial const &a);
SuperPolynomial sscale(Scalar const &c, SuperPolynomial const &a);
SuperPolynomial smul(SuperPolynomial const &a, SuperPolynomial const &b);

inline SuperPolynomial operator+(SuperPolynomial const &a, SuperPolynomial const &b) { return sadd(a, b); }
inline SuperPolynomial operator-(SuperPolynomial const &a, SuperPolynomial const &b)
{
	return sadd(a, sneg(b));
}
inline SuperPolynomial operator*(SuperPolynomial const &a, SuperPolynomial const &b) { return smul(a, b); }
inline SuperPolynomial operator*(Scalar const &c, SuperPolynomial const &a) { return sscale(c, a); }

SuperPolynomial bderiv(int i, SuperPolynomial const &a); // d/dx_{i+1}
SuperPolynomial sfderiv(int j, SuperPolynomial const &a);

SuperPolynomial nabla2_b(SuperPolynomial const &a);
SuperPolynomial nabla2_f(SuperPolynomial const &a);
SuperPolynomial nabla2(SuperPolynomial const &a);
SuperPolynomial euler_b(SuperPolynomial const &a);
SuperPolynomial sfeuler(SuperPolynomial const &a);
SuperPolynomial euler(SuperPolynomial const &a);

SuperPolynomial r2(Dims d, GrassmannMode mode = GrassmannMode::Single);
SuperPolynomial stheta2(Dims d, GrassmannMode mode = GrassmannMode::Single);
SuperPolynomial R2(Dims d, GrassmannMode mode = GrassmannMode::Single);

// lift of a pure Grassmann element
SuperPolynomial from_grassmann(Dims d, GrassmannElement const &g);
// extract homogeneous component of given total degree
SuperPolynomial homogeneous_component(SuperPolynomial const &a, int degree);
// coefficient of the fermionic-free constant monomial
Scalar constant_term(SuperPolynomial const &a);
// substitute x_i -> 0 and x'_j -> 0 for the x-half (doubled mode helper)
SuperPolynomial kill_x_half(SuperPolynomial const &a);

// star map acting on the fermionic factor only (single mode)
SuperPolynomial star_fermionic(SuperPolynomial const &a);
// tilde on the fermionic factor (single mode)
SuperPolynomial tilde_fermionic(SuperPolynomial const &a);
// conjugate all coefficients (t -> 1/t)
SuperPolynomial conj_coefficients(SuperPolynomial const &a);

// linear substitution by an (m+2n)x(m+2n) matrix per A f(x) = f(A^T x),
// block upper-left bosonic, lower-right fermionic; optional validation of
// A^T G A = G with G = diag(I_m, J)
SuperPolynomial osp_apply(std::vector<std::vector<Scalar>> const &A, SuperPolynomial const &a,
                          bool validate = false);

// exp of a nilpotent (purely fermionic-content) even element
SuperPolynomial sexp_nilpotent(SuperPolynomial const &a);
// exp(-theta^2/2) as a polynomial
SuperPolynomial fermionic_gaussian(Dims d, GrassmannMode mode = GrassmannMode::Single);

struct Sl2Report {
	bool ok = true;
	std::string first_failure;
	long monomials_checked = 0;
};

// verify [H,E]=2E, [H,F]=-2F, [E,F]=H with E=R^2/2, F=-nabla^2/2,
// H=E_op+M/2 on every monomial of total degree <= max_degree
Sl2Report check_sl2(Dims d, int max_degree, bool allow_large = false);

// all monomials of total degree exactly d / at most d
std::vector<SuperMonomial> monomials_of_degree(Dims dims, int d, GrassmannMode mode = GrassmannMode::Single);
std::vector<SuperMonomial> monomials_up_to_degree(Dims dims, int d,
                                                  GrassmannMode mode = GrassmannMode::Single);

constexpr int kDefaultDegreeCap = 12;
void require_degree_cap(int degree, bool allow_large = false);

// A super polynomial together with an implicit bosonic Gaussian factor
// exp(-g r^2 / 2); the fermionic Gaussian is always expanded into poly.
class GaussianWrapped {
  public:
	SuperPolynomial poly;
	int gauss_half_power = 1; // g in exp(-g r^2/2)

	GaussianWrapped() = default;
	GaussianWrapped(SuperPolynomial p, int g = 1) : poly(std::move(p)), gauss_half_power(g) {}

	friend bool operator==(GaussianWrapped const &a, GaussianWrapped const &b)
	{
		return a.gauss_half_power == b.gauss_half_power && a.poly == b.poly;
	}
};

// H_k exp(-R^2/2) for a harmonic (or any) polynomial H
GaussianWrapped wrap_with_gaussian(SuperPolynomial const &h);

GaussianWrapped wadd(GaussianWrapped const &a, GaussianWrapped const &b);
GaussianWrapped wscale(Scalar const &c, GaussianWrapped const &a);
GaussianWrapped wmul_poly(SuperPolynomial const &p, GaussianWrapped const &a);
// operators through the Gaussian: d_i(P e^{-g r^2/2}) = (d_i P - g x_i P) e^{..}
GaussianWrapped wbderiv(int i, GaussianWrapped const &a);
GaussianWrapped wsfderiv(int j, GaussianWrapped const &a);
GaussianWrapped wnabla2(GaussianWrapped const &a);
GaussianWrapped weuler(GaussianWrapped const &a);

} // namespace superharm
