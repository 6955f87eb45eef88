#include "superharm/scalar.hpp"
#include <sstream>

namespace superharm {

namespace {

std::string poly_to_string(TPoly const &p)
{
	if (p.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (int i = p.degree(); i >= 0; --i)
	{
		Rat c = p.c[i];
		if (c == 0)
			continue;
		if (!first)
			os << (c > 0 ? " + " : " - ");
		else if (c < 0)
			os << "-";
		first = false;
		Rat a = abs(c);
		if (i == 0)
			os << a.get_str();
		else
		{
			if (a != 1)
				os << a.get_str() << "*";
			os << "t";
			if (i > 1)
				os << "^" << i;
		}
	}
	return os.str();
}

} // namespace

std::string Scalar::to_string() const
{
	if (terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto const &[e, c] : terms)
	{
		if (!first)
			os << " + ";
		first = false;
		bool frac = c.den.degree() > 0;
		bool sum = c.num.degree() > 0 || frac;
		if (sum && e != 0)
			os << "(";
		os << poly_to_string(c.num);
		if (frac)
			os << "/(" << poly_to_string(c.den) << ")";
		if (sum && e != 0)
			os << ")";
		if (e != 0)
		{
			os << (sum ? "*" : "*") << "pi^(" << e << "/2)";
		}
	}
	return os.str();
}

std::string Scalar::to_json() const
{
	// term list {s_exp, num, den} with integer coefficient arrays; numbers
	// outside int64 are emitted as strings
	auto emit_poly = [](std::ostringstream &os, TPoly const &p) {
		os << "[";
		// scale to integers: multiply by lcm of denominators
		Int l = 1;
		for (auto const &c : p.c)
			l = lcm(l, c.get_den());
		for (size_t i = 0; i < p.c.size(); ++i)
		{
			if (i)
				os << ",";
			Int v = p.c[i].get_num() * (l / p.c[i].get_den());
			if (v.fits_slong_p())
				os << v.get_str();
			else
				os << '"' << v.get_str() << '"';
		}
		if (p.c.empty())
			os << "0";
		os << "]";
		return l;
	};
	std::ostringstream os;
	os << "[";
	bool first = true;
	for (auto const &[e, c] : terms)
	{
		if (!first)
			os << ",";
		first = false;
		// common integer scaling of num and den
		TPoly num = c.num, den = c.den;
		Int ln = 1, ld = 1;
		for (auto const &x : num.c)
			ln = lcm(ln, x.get_den());
		for (auto const &x : den.c)
			ld = lcm(ld, x.get_den());
		Int scale = lcm(ln, ld);
		for (auto &x : num.c)
			x *= scale;
		for (auto &x : den.c)
			x *= scale;
		os << "{\"s_exp\":" << e << ",\"num\":";
		emit_poly(os, num);
		os << ",\"den\":";
		emit_poly(os, den);
		os << "}";
	}
	os << "]";
	return os.str();
}

Scalar specialize_t(Scalar const &a, Rat const &q)
{
	Scalar r;
	for (auto const &[e, c] : a.terms)
	{
		Rat v = c.eval(q); // throws PoleAtPoint on vanishing denominator
		if (v != 0)
			r.terms[e] = TRat(v);
	}
	return r;
}

Scalar gamma_half(HalfInteger x)
{
	if (x.is_gamma_pole())
		fail(Errc::GammaPole, "Gamma pole at " + std::to_string(x.twice) + "/2");
	if (x.is_integer())
	{
		// Gamma(k) = (k-1)!
		return Scalar(Rat(factorial(x.as_integer() - 1)));
	}
	// half-integer: walk to Gamma(1/2 + k), k >= 0, then
	// Gamma(1/2+k) = (2k)!/(4^k k!) sqrt(pi)
	Rat factor = 1;
	long tw = x.twice;
	while (tw < 1)
	{
		// Gamma(x) = Gamma(x+1)/x
		factor /= make_rat(tw, 2);
		tw += 2;
	}
	long k = (tw - 1) / 2;
	Rat val = Rat(factorial(2 * k)) / (rat_pow(Rat(4), k) * Rat(factorial(k)));
	Scalar r = Scalar::s_power(1);
	return r * Scalar(factor * val);
}

Scalar recip_gamma_half(HalfInteger x)
{
	if (x.is_gamma_pole())
		return Scalar();
	return gamma_half(x).inverse();
}

Rat pochhammer_half(HalfInteger a, long j) { return pochhammer(a.as_rational(), j); }

} // namespace superharm
