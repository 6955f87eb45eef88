#pragma once

#include "superharm/rational.hpp"
#include <map>
#include <string>

namespace superharm {

// k/2 represented exactly
class HalfInteger {
  public:
	long twice = 0;

	HalfInteger() = default;
	HalfInteger(long integer_value) : twice(2 * integer_value) {}
	static HalfInteger halves(long twice_value)
	{
		HalfInteger h;
		h.twice = twice_value;
		return h;
	}
	bool is_integer() const { return twice % 2 == 0; }
	long as_integer() const { return twice / 2; }
	Rat as_rational() const { return make_rat(twice, 2); }
	bool is_gamma_pole() const { return is_integer() && twice <= 0; }
	friend HalfInteger operator+(HalfInteger a, long b) { return halves(a.twice + 2 * b); }
	friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
};

// Element of Q(t)[s, s^-1]: a finite sum sum_k c_k(t) s^k with c_k in Q(t).
// t stands for e^{i alpha} and s for pi^(1/2); neither is ever evaluated
// numerically.
class Scalar {
  public:
	std::map<int, TRat> terms; // s-exponent -> coefficient, no zero entries

	Scalar() = default;
	Scalar(Rat const &a)
	{
		if (a != 0)
			terms[0] = TRat(a);
	}
	Scalar(long a) : Scalar(Rat(a)) {}
	Scalar(int a) : Scalar(Rat(a)) {}
	Scalar(TRat const &a)
	{
		if (!a.is_zero())
			terms[0] = a;
	}

	static Scalar s_power(int k)
	{
		Scalar r;
		r.terms[k] = TRat(Rat(1));
		return r;
	}
	static Scalar t_power(int k)
	{
		Scalar r;
		r.terms[0] = TRat(TPoly::t(k), TPoly(Rat(1)));
		return r;
	}
	static Scalar t() { return t_power(1); }

	bool is_zero() const { return terms.empty(); }
	bool is_rational() const
	{
		return terms.empty() || (terms.size() == 1 && terms.count(0) && terms.at(0).is_rational());
	}
	Rat as_rational() const
	{
		if (terms.empty())
			return 0;
		if (!is_rational())
			fail(Errc::ParamOutOfRange, "scalar is not a plain rational");
		return terms.at(0).as_rational();
	}
	// single-term scalars c(t) s^k are the invertible elements
	bool is_monomial() const { return terms.size() == 1; }

	friend Scalar operator+(Scalar const &a, Scalar const &b)
	{
		Scalar r = a;
		for (auto const &[e, c] : b.terms)
		{
			auto it = r.terms.find(e);
			if (it == r.terms.end())
				r.terms.emplace(e, c);
			else
			{
				it->second = it->second + c;
				if (it->second.is_zero())
					r.terms.erase(it);
			}
		}
		return r;
	}
	friend Scalar operator-(Scalar const &a, Scalar const &b) { return a + (-b); }
	Scalar operator-() const
	{
		Scalar r = *this;
		for (auto &[e, c] : r.terms)
			c = -c;
		return r;
	}
	friend Scalar operator*(Scalar const &a, Scalar const &b)
	{
		Scalar r;
		for (auto const &[ea, ca] : a.terms)
			for (auto const &[eb, cb] : b.terms)
			{
				TRat p = ca * cb;
				if (p.is_zero())
					continue;
				auto it = r.terms.find(ea + eb);
				if (it == r.terms.end())
					r.terms.emplace(ea + eb, p);
				else
				{
					it->second = it->second + p;
					if (it->second.is_zero())
						r.terms.erase(it);
				}
			}
		return r;
	}
	Scalar &operator+=(Scalar const &b) { return *this = *this + b; }
	Scalar &operator-=(Scalar const &b) { return *this = *this - b; }
	Scalar &operator*=(Scalar const &b) { return *this = *this * b; }

	// division by an invertible (single-term) scalar
	friend Scalar operator/(Scalar const &a, Scalar const &b)
	{
		if (b.is_zero())
			fail(Errc::DivisionByZero, "scalar division by zero");
		if (!b.is_monomial())
			fail(Errc::DivisionByZero, "scalar divisor is not invertible in Q(t)[s,1/s]");
		auto const &[eb, cb] = *b.terms.begin();
		Scalar r;
		for (auto const &[ea, ca] : a.terms)
			r.terms.emplace(ea - eb, ca / cb);
		return r;
	}
	Scalar inverse() const { return Scalar(Rat(1)) / *this; }

	friend bool operator==(Scalar const &a, Scalar const &b) { return a.terms == b.terms; }

	// complex conjugation: t = e^{i alpha} has modulus one, so t -> 1/t;
	// s and rationals are fixed
	Scalar conj() const
	{
		Scalar r;
		for (auto const &[e, c] : terms)
			r.terms[e] = c.conj();
		return r;
	}

	// drop t-powers above order N; every coefficient must be polynomial in t
	Scalar truncate_t(int order) const
	{
		Scalar r;
		for (auto const &[e, c] : terms)
		{
			if (c.den.degree() != 0)
				fail(Errc::ParamOutOfRange, "truncate_t needs polynomial coefficients");
			TPoly num = c.num;
			if (num.degree() > order)
			{
				num.c.resize(order + 1);
				num.trim();
			}
			if (!num.is_zero())
				r.terms.emplace(e, TRat(num, c.den));
		}
		return r;
	}

	std::string to_string() const;
	std::string to_json() const;
};

// evaluate t at a rational point, keeping the s-structure
Scalar specialize_t(Scalar const &a, Rat const &q);

// Gamma at a half-integer argument; pole for x in {0,-1,-2,...}
Scalar gamma_half(HalfInteger x);

// 1/Gamma, entire: returns 0 at the poles of Gamma
Scalar recip_gamma_half(HalfInteger x);

// (a)_j for half-integer a
Rat pochhammer_half(HalfInteger a, long j);

} // namespace superharm
