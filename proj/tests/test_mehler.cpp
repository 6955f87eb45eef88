#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superharm/mehler.hpp"
#include "superharm/sampling.hpp"

using namespace superharm;

TEST_CASE("fermionic kernel constants")
{
	// F_0 = pi^n / n!
	for (int n = 1; n <= 3; ++n)
	{
		auto F0 = fermionic_kernel(n, 0);
		REQUIRE(F0.terms.size() == 1);
		CHECK(F0.terms.at(0) == Scalar(Rat(1) / Rat(factorial(n))) * Scalar::s_power(2 * n));
	}
	// F_1 = (2 pi^n/(n-1)!) <x',y'>
	for (int n = 1; n <= 3; ++n)
	{
		auto F1 = fermionic_kernel(n, 1);
		auto expect = gscale(Scalar(Rat(2) / Rat(factorial(n - 1))) * Scalar::s_power(2 * n),
		                     pairing_xy(n));
		CHECK(F1 == expect);
	}
	CHECK_THROWS_AS(fermionic_kernel(2, 3), Error);
}

TEST_CASE("fermionic kernel reproduces")
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 0; k <= n; ++k)
		{
			auto rep = kernel_reproduces(n, k);
			CHECK(rep.pass);
			if (!rep.pass)
				MESSAGE(rep.detail);
		}
}

TEST_CASE("super kernel")
{
	// k = 0: Gamma(M/2)/(2 pi^{M/2})
	Dims d{3, 1};
	auto G0 = super_kernel(0, d);
	REQUIRE(G0.terms.size() == 1);
	CHECK(G0.terms.begin()->second ==
	      Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(1)) * Scalar::s_power(-1));
	// k = 1 at (3,1): C_1^{(M-2)/2} = (M-2) t so G_1 = M Gamma(M/2)/(2 pi^{M/2}) <x,y>
	auto G1 = super_kernel(1, d);
	int M = d.super_dimension();
	auto expect = sscale(Scalar(Rat(M, 1)) * Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(M)) *
	                         Scalar::s_power(-M),
	                     pairing_super(d));
	CHECK(G1 == expect);
	CHECK_THROWS_AS(super_kernel(1, Dims{2, 1}), Error); // M = 0
}

TEST_CASE("super kernel reproduces and matches the basis sum")
{
	for (Dims d : {Dims{3, 1}, Dims{4, 1}})
		for (int k = 0; k <= 2; ++k)
		{
			auto rep = super_kernel_check(k, d);
			CHECK(rep.pass);
			if (!rep.pass)
				MESSAGE(rep.detail);
		}
}

TEST_CASE("partial pizzetti in x")
{
	// against the full functional: int_SS f(x) g(y) factorizes
	Dims d{2, 1};
	auto f = R2(d);
	auto g = SuperPolynomial::variable(d, 1);
	auto prod = smul(embed_poly_x(f), embed_poly_y(g));
	auto part = partial_pizzetti_x(prod);
	auto expect = sscale(pizzetti(f), embed_poly_y(g));
	CHECK(part == expect);
}

TEST_CASE("fermionic Mehler formula")
{
	for (int n = 1; n <= 2; ++n)
	{
		auto rep = mehler_fermionic_verify(n);
		CHECK(rep.equal);
		if (!rep.equal)
			MESSAGE(rep.first_diff);
	}
}

TEST_CASE("fermionic Mehler at the Fourier point")
{
	for (int n = 1; n <= 2; ++n)
		for (int sign : {+1, -1})
		{
			auto rep = mehler_fourier_point(n, sign);
			CHECK(rep.equal);
		}
}

TEST_CASE("symplectic invariance of both Mehler sides")
{
	// simultaneous symplectic substitution on x' and y' fixes each side
	int n = 2;
	std::mt19937_64 rng(5);
	auto lhs_like = fermionic_kernel(n, 2); // same structure as the series terms
	for (int rep = 0; rep < 3; ++rep)
	{
		ScalarMatrix A = random_symplectic(n, rng);
		// act on the doubled algebra: block diag(A, A)
		int g = 4 * n;
		ScalarMatrix AA(g, std::vector<Scalar>(g));
		for (int i = 0; i < 2 * n; ++i)
			for (int j = 0; j < 2 * n; ++j)
			{
				AA[i][j] = A[i][j];
				AA[2 * n + i][2 * n + j] = A[i][j];
			}
		GrassmannElement moved = symplectic_apply(AA, lhs_like);
		CHECK(moved == lhs_like);
		// and the full Mehler left-hand side via the pairing and thetas
		CHECK(symplectic_apply(AA, pairing_xy(n)) == pairing_xy(n));
		CHECK(symplectic_apply(AA, theta2(n, GrassmannMode::Doubled)) ==
		      theta2(n, GrassmannMode::Doubled));
		CHECK(symplectic_apply(AA, theta2_y(n)) == theta2_y(n));
	}
}

TEST_CASE("super Mehler truncated")
{
	auto rep = mehler_super_verify(Dims{3, 1}, 4);
	CHECK(rep.equal);
	if (!rep.equal)
		MESSAGE(rep.first_diff);
	// classical reduction n = 0
	auto repc = mehler_super_verify(Dims{3, 0}, 4);
	CHECK(repc.equal);
	// D = 0: constant terms as truncated t-series
	auto rep0 = mehler_super_verify(Dims{3, 1}, 0);
	CHECK(rep0.equal);
}

TEST_CASE("classical Mehler in the three scalars")
{
	for (int m : {3, 4, 5})
	{
		auto rep = mehler_classical_abc(m, 4);
		CHECK(rep.equal);
		if (!rep.equal)
			MESSAGE(rep.first_diff);
	}
}

TEST_CASE("fractional Fourier eigenstructure")
{
	Dims d{3, 1};
	auto res = frac_fourier_eigencheck(d, 4);
	CHECK(res.pass);
	bool saw_t3 = false;
	for (auto const &ec : res.checks)
		if (2 * ec.j + ec.k == 3)
		{
			CHECK(ec.eigenvalue == Scalar::t_power(3));
			saw_t3 = true;
		}
	CHECK(saw_t3);
}

TEST_CASE("mehler report json")
{
	auto rep = mehler_fermionic_verify(1);
	auto j = rep.to_json();
	CHECK(j.find("\"identity\":\"mehler-fermionic\"") != std::string::npos);
	CHECK(j.find("\"equal\":true") != std::string::npos);
}
