#pragma once

#include "superharm/error.hpp"
#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace superharm {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize on its own
inline Rat make_rat(long num, long den)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline Int factorial(long n)
{
	Int r = 1;
	for (long i = 2; i <= n; ++i)
		r *= i;
	return r;
}

inline Int binomial(long n, long k)
{
	if (k < 0 || k > n)
		return 0;
	Int r = 1;
	for (long i = 0; i < k; ++i)
	{
		r *= (n - i);
		r /= (i + 1);
	}
	return r;
}

// (a)_j = a(a+1)...(a+j-1), empty product for j = 0
inline Rat pochhammer(Rat const &a, long j)
{
	Rat r = 1;
	for (long i = 0; i < j; ++i)
		r *= a + i;
	return r;
}

// a(a-1)...(a-j+1)
inline Rat falling_factorial(Rat const &a, long j)
{
	Rat r = 1;
	for (long i = 0; i < j; ++i)
		r *= a - i;
	return r;
}

inline Rat rat_pow(Rat base, long e)
{
	if (e < 0)
	{
		if (base == 0)
			fail(Errc::DivisionByZero, "0^negative");
		base = 1 / base;
		e = -e;
	}
	Rat r = 1;
	while (e)
	{
		if (e & 1)
			r *= base;
		base *= base;
		e >>= 1;
	}
	return r;
}

// dense univariate polynomial over Q, used for rational functions in the
// formal parameter t
class TPoly {
  public:
	std::vector<Rat> c; // ascending degree; trailing zeros stripped

	TPoly() = default;
	TPoly(Rat const &a)
	{
		if (a != 0)
			c = {a};
	}
	static TPoly t(int power = 1)
	{
		TPoly p;
		p.c.assign(power + 1, Rat(0));
		p.c[power] = 1;
		return p;
	}

	bool is_zero() const { return c.empty(); }
	int degree() const { return (int)c.size() - 1; } // -1 for zero
	void trim()
	{
		while (!c.empty() && c.back() == 0)
			c.pop_back();
	}

	friend TPoly operator+(TPoly const &a, TPoly const &b)
	{
		TPoly r;
		r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
		for (size_t i = 0; i < a.c.size(); ++i)
			r.c[i] += a.c[i];
		for (size_t i = 0; i < b.c.size(); ++i)
			r.c[i] += b.c[i];
		r.trim();
		return r;
	}
	friend TPoly operator-(TPoly const &a, TPoly const &b)
	{
		TPoly r;
		r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
		for (size_t i = 0; i < a.c.size(); ++i)
			r.c[i] += a.c[i];
		for (size_t i = 0; i < b.c.size(); ++i)
			r.c[i] -= b.c[i];
		r.trim();
		return r;
	}
	friend TPoly operator*(TPoly const &a, TPoly const &b)
	{
		if (a.is_zero() || b.is_zero())
			return {};
		TPoly r;
		r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
		for (size_t i = 0; i < a.c.size(); ++i)
			for (size_t j = 0; j < b.c.size(); ++j)
				r.c[i + j] += a.c[i] * b.c[j];
		r.trim();
		return r;
	}
	friend bool operator==(TPoly const &a, TPoly const &b) { return a.c == b.c; }

	// euclidean division, b != 0
	static void divmod(TPoly a, TPoly const &b, TPoly &q, TPoly &r)
	{
		q = TPoly();
		if (b.is_zero())
			fail(Errc::DivisionByZero, "polynomial division by zero");
		int db = b.degree();
		while (!a.is_zero() && a.degree() >= db)
		{
			int d = a.degree() - db;
			Rat f = a.c.back() / b.c.back();
			if ((int)q.c.size() < d + 1)
				q.c.resize(d + 1, Rat(0));
			q.c[d] += f;
			for (int i = 0; i <= db; ++i)
				a.c[i + d] -= f * b.c[i];
			a.trim();
		}
		q.trim();
		r = a;
	}

	static TPoly gcd(TPoly a, TPoly b)
	{
		while (!b.is_zero())
		{
			TPoly q, r;
			divmod(a, b, q, r);
			a = b;
			b = r;
		}
		if (!a.is_zero())
		{
			Rat lead = a.c.back();
			for (auto &x : a.c)
				x /= lead;
		}
		return a;
	}

	TPoly reversed() const
	{
		TPoly r = *this;
		std::reverse(r.c.begin(), r.c.end());
		r.trim();
		return r;
	}

	Rat eval(Rat const &x) const
	{
		Rat r = 0;
		for (size_t i = c.size(); i-- > 0;)
			r = r * x + c[i];
		return r;
	}
};

// reduced fraction of TPolys, denominator monic and nonzero
class TRat {
  public:
	TPoly num, den;

	TRat() : den(Rat(1)) {}
	TRat(Rat const &a) : num(a), den(Rat(1)) {}
	TRat(TPoly n, TPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

	bool is_zero() const { return num.is_zero(); }
	bool is_rational() const { return num.degree() <= 0 && den.degree() == 0; }
	Rat as_rational() const { return num.is_zero() ? Rat(0) : num.c[0]; }

	void reduce()
	{
		if (den.is_zero())
			fail(Errc::DivisionByZero, "zero denominator");
		if (num.is_zero())
		{
			den = TPoly(Rat(1));
			return;
		}
		TPoly g = TPoly::gcd(num, den);
		if (g.degree() > 0)
		{
			TPoly q, r;
			TPoly::divmod(num, g, q, r);
			num = q;
			TPoly::divmod(den, g, q, r);
			den = q;
		}
		Rat lead = den.c.back();
		if (lead != 1)
		{
			for (auto &x : den.c)
				x /= lead;
			for (auto &x : num.c)
				x /= lead;
		}
	}

	friend TRat operator+(TRat const &a, TRat const &b)
	{
		return TRat(a.num * b.den + b.num * a.den, a.den * b.den);
	}
	friend TRat operator-(TRat const &a, TRat const &b)
	{
		return TRat(a.num * b.den - b.num * a.den, a.den * b.den);
	}
	friend TRat operator*(TRat const &a, TRat const &b) { return TRat(a.num * b.num, a.den * b.den); }
	friend TRat operator/(TRat const &a, TRat const &b)
	{
		if (b.is_zero())
			fail(Errc::DivisionByZero, "division by zero rational function");
		return TRat(a.num * b.den, a.den * b.num);
	}
	TRat operator-() const
	{
		TRat r = *this;
		for (auto &x : r.num.c)
			x = -x;
		return r;
	}
	friend bool operator==(TRat const &a, TRat const &b) { return a.num == b.num && a.den == b.den; }

	// t -> 1/t
	TRat conj() const
	{
		if (is_zero())
			return {};
		int dn = num.degree(), dd = den.degree();
		TPoly n = num.reversed(), d = den.reversed();
		if (dd > dn)
			n = n * TPoly::t(dd - dn);
		else if (dn > dd)
			d = d * TPoly::t(dn - dd);
		return TRat(n, d);
	}

	// substitute a rational value for t; the denominator must not vanish there
	Rat eval(Rat const &q) const
	{
		Rat d = den.eval(q);
		if (d == 0)
			fail(Errc::PoleAtPoint, "pole of rational function at evaluation point");
		return num.eval(q) / d;
	}
};

} // namespace superharm
