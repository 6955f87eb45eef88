#pragma once

#include "superharm/scalar.hpp"
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace superharm {

// Anticommuting monomial over up to 64 generators, as a bit set. Generator i
// (0-based) corresponds to the 1-based index i+1; the canonical coefficient
// convention is generators in increasing index order.
using FermionicMonomial = std::uint64_t;

inline int fdegree(FermionicMonomial a) { return std::popcount(a); }

// sign of merging two disjoint ascending monomials a*b into ascending order;
// 0 if they overlap
inline int merge_sign(FermionicMonomial a, FermionicMonomial b)
{
	if (a & b)
		return 0;
	int inv = 0;
	FermionicMonomial rest = b;
	while (rest)
	{
		int i = std::countr_zero(rest);
		rest &= rest - 1;
		inv += std::popcount(a >> (i + 1));
	}
	return (inv & 1) ? -1 : 1;
}

enum class GrassmannMode { Single, Doubled }; // 2n or 4n generators

class GrassmannElement {
  public:
	int n = 0;
	GrassmannMode mode = GrassmannMode::Single;
	std::map<FermionicMonomial, Scalar> terms; // no zero coefficients

	GrassmannElement() = default;
	GrassmannElement(int n_, GrassmannMode mode_ = GrassmannMode::Single) : n(n_), mode(mode_) {}

	int generators() const { return mode == GrassmannMode::Single ? 2 * n : 4 * n; }

	static GrassmannElement one(int n, GrassmannMode mode = GrassmannMode::Single)
	{
		GrassmannElement r(n, mode);
		r.terms[0] = Scalar(1);
		return r;
	}
	static GrassmannElement generator(int n, int j, GrassmannMode mode = GrassmannMode::Single)
	{
		GrassmannElement r(n, mode);
		if (j < 0 || j >= r.generators())
			fail(Errc::IndexOutOfRange, "generator index out of range");
		r.terms[FermionicMonomial(1) << j] = Scalar(1);
		return r;
	}

	bool is_zero() const { return terms.empty(); }
	void add_term(FermionicMonomial m, Scalar const &c)
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

	friend bool operator==(GrassmannElement const &a, GrassmannElement const &b)
	{
		return a.n == b.n && a.mode == b.mode && a.terms == b.terms;
	}

	std::string to_string() const;
	std::string to_json() const;
};

GrassmannElement gadd(GrassmannElement const &a, GrassmannElement const &b);
GrassmannElement gneg(GrassmannElement const &a);
GrassmannElement gscale(Scalar const &c, GrassmannElement const &a);
GrassmannElement gmul(GrassmannElement const &a, GrassmannElement const &b);

inline GrassmannElement operator+(GrassmannElement const &a, GrassmannElement const &b) { return gadd(a, b); }
inline GrassmannElement operator-(GrassmannElement const &a, GrassmannElement const &b)
{
	return gadd(a, gneg(b));
}
inline GrassmannElement operator*(GrassmannElement const &a, GrassmannElement const &b) { return gmul(a, b); }
inline GrassmannElement operator*(Scalar const &c, GrassmannElement const &a) { return gscale(c, a); }

// left derivative d/dx'_{j+1}
GrassmannElement fderiv(int j, GrassmannElement const &a);

// pi^-n times the coefficient of the top monomial x'_1...x'_2n
Scalar berezin(GrassmannElement const &a);

// theta^2 = -sum x'_{2j-1} x'_{2j}
GrassmannElement theta2(int n, GrassmannMode mode = GrassmannMode::Single);
// theta_y^2 on the y-half of a doubled algebra
GrassmannElement theta2_y(int n);
// <x',y'> = -1/2 sum (x'_{2j-1} y'_{2j} - x'_{2j} y'_{2j-1}), doubled mode
GrassmannElement pairing_xy(int n);

// nabla_f^2 = -4 sum d_{x'_{2j-1}} d_{x'_{2j}}
GrassmannElement nabla2_f(GrassmannElement const &a);
// Euler operator sum_j x'_j d_{x'_j}
GrassmannElement euler_f(GrassmannElement const &a);

// star map, fixed by x'_A (star x'_A) = 2^{k-n} x'_1...x'_2n
GrassmannElement star(GrassmannElement const &a);

// x'_{2i-1} -> x'_{2i}, x'_{2i} -> -x'_{2i-1}, with product order reversal
GrassmannElement tilde(GrassmannElement const &a);

// <f|g> = int_B f (star conj(g)) = (2 pi)^-n sum_A 2^|A| f_A conj(g_A);
// both routes are computed and cross-checked
Scalar inner_f(GrassmannElement const &f, GrassmannElement const &g);

// substitute generators by linear combinations: x'_j -> sum_k A[k][j] x'_k
// (the action A f(x') = f(A^T x')); optionally validate A^T J A = J
GrassmannElement symplectic_apply(std::vector<std::vector<Scalar>> const &A, GrassmannElement const &a,
                                  bool validate = false);

// embeddings of Lambda_2n into the x-/y-halves of Lambda_4n
GrassmannElement embed_x(GrassmannElement const &a);
GrassmannElement embed_y(GrassmannElement const &a);

Scalar grassmann_det(std::vector<std::vector<Scalar>> const &A);

// exp of a nilpotent even element (finite Taylor expansion)
GrassmannElement gexp(GrassmannElement const &a);

} // namespace superharm
