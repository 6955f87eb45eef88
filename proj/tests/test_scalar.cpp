#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superharm/scalar.hpp"
#include <random>

using namespace superharm;

namespace {

Scalar s() { return Scalar::s_power(1); }
Scalar t() { return Scalar::t(); }

std::mt19937 rng(0);

Rat random_rat(int bound = 9)
{
	std::uniform_int_distribution<int> num(-bound, bound);
	std::uniform_int_distribution<int> den(1, bound);
	return make_rat(num(rng), den(rng));
}

Scalar random_scalar()
{
	std::uniform_int_distribution<int> nterms(1, 3), sexp(-2, 2), tdeg(0, 2);
	Scalar r;
	int k = nterms(rng);
	for (int i = 0; i < k; ++i)
	{
		TPoly num, den;
		for (int d = tdeg(rng); d >= 0; --d)
			num.c.push_back(random_rat());
		num.trim();
		if (num.is_zero())
			num = TPoly(Rat(1));
		den = TPoly(Rat(1));
		if (tdeg(rng) == 2)
			den = den + TPoly::t(1) * TPoly(random_rat());
		r += Scalar(TRat(num, den)) * Scalar::s_power(sexp(rng));
	}
	return r;
}

} // namespace

TEST_CASE("scalar basics")
{
	CHECK(s() + s() == Scalar(2) * s());
	// s*s stays formal: an s-exponent-2 term
	Scalar s2 = s() * s();
	CHECK(s2 == Scalar::s_power(2));
	CHECK(Scalar(Rat(3, 4)) * Scalar(Rat(4, 3)) == Scalar(1));
	CHECK(Scalar() + random_scalar() * Scalar(0) == Scalar());
	Scalar x = random_scalar();
	CHECK(Scalar() + x == x);
}

TEST_CASE("rational functions in t")
{
	// (1/(1-t^2)) + (t^2/(1-t^2)) = (1+t^2)/(1-t^2), canonical reduced form
	TPoly one(Rat(1));
	TPoly one_minus_t2 = one - TPoly::t(2);
	Scalar a(TRat(one, one_minus_t2));
	Scalar b(TRat(TPoly::t(2), one_minus_t2));
	Scalar expect(TRat(one + TPoly::t(2), one_minus_t2));
	CHECK(a + b == expect);
	// (1-t^2) * 1/(1-t^2) = 1
	CHECK(Scalar(TRat(one_minus_t2, one)) * a == Scalar(1));
}

TEST_CASE("field axioms on random scalars")
{
	for (int i = 0; i < 50; ++i)
	{
		Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a + (-a) == Scalar());
		// invertible elements: single-term scalars
		Scalar u = Scalar(TRat(TPoly(Rat(1)) + TPoly::t(1), TPoly(Rat(1)))) * Scalar::s_power(i % 5 - 2);
		CHECK(u * u.inverse() == Scalar(1));
	}
}

TEST_CASE("gamma at half integers")
{
	CHECK(gamma_half(HalfInteger::halves(1)) == s());       // Gamma(1/2) = sqrt(pi)
	CHECK(gamma_half(HalfInteger(3)) == Scalar(2));         // Gamma(3) = 2
	CHECK(gamma_half(HalfInteger::halves(5)) == Scalar(Rat(3, 4)) * s()); // Gamma(5/2)
	CHECK(gamma_half(HalfInteger::halves(-1)) == Scalar(-2) * s());       // Gamma(-1/2)
	CHECK_THROWS_AS(gamma_half(HalfInteger(0)), Error);
	CHECK_THROWS_AS(gamma_half(HalfInteger(-2)), Error);
	CHECK(recip_gamma_half(HalfInteger(-3)) == Scalar());
	// recursion Gamma(x+1) = x Gamma(x) for |2x| <= 40
	for (int tw = -39; tw <= 40; ++tw)
	{
		HalfInteger x = HalfInteger::halves(tw);
		if (x.is_gamma_pole() || (x + 1).is_gamma_pole())
			continue;
		CHECK(gamma_half(x + 1) == Scalar(x.as_rational()) * gamma_half(x));
	}
}

TEST_CASE("specialize_t")
{
	TPoly one(Rat(1));
	Scalar a(TRat(one, one - TPoly::t(2))); // 1/(1-t^2)
	CHECK(specialize_t(a, Rat(0)) == Scalar(1));
	CHECK(specialize_t(t(), Rat(1, 2)) == Scalar(Rat(1, 2)));
	CHECK_THROWS_AS(specialize_t(a, Rat(1)), Error);
	// s-structure preserved
	Scalar b = a * Scalar::s_power(3);
	CHECK(specialize_t(b, Rat(2)) == Scalar(Rat(-1, 3)) * Scalar::s_power(3));
}

TEST_CASE("conjugation is the t -> 1/t involution")
{
	for (int i = 0; i < 30; ++i)
	{
		Scalar a = random_scalar(), b = random_scalar();
		CHECK(a.conj().conj() == a);
		CHECK((a * b).conj() == a.conj() * b.conj());
		CHECK((a + b).conj() == a.conj() + b.conj());
	}
	CHECK(t().conj() * t() == Scalar(1));
	CHECK(s().conj() == s());
}

TEST_CASE("division")
{
	Scalar a = random_scalar();
	CHECK_THROWS_AS(a / Scalar(), Error);
	CHECK(a / Scalar(Rat(3)) * Scalar(Rat(3)) == a);
	CHECK((t() * s()) / (t() * s()) == Scalar(1));
}

TEST_CASE("printing and json")
{
	CHECK(Scalar(1).to_string() == "1");
	CHECK(s().to_string() == "1*pi^(1/2)");
	CHECK(Scalar::t().to_string() == "t");
	CHECK(Scalar(1).to_json() == "[{\"s_exp\":0,\"num\":[1],\"den\":[1]}]");
}
