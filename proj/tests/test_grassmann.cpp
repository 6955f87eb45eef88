#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superharm/grassmann.hpp"
#include <random>

using namespace superharm;

namespace {

GrassmannElement x(int n, int j) { return GrassmannElement::generator(n, j - 1); } // 1-based

std::mt19937 rng(7);

GrassmannElement random_element(int n)
{
	std::uniform_int_distribution<int> coeff(-5, 5);
	GrassmannElement r(n);
	for (FermionicMonomial m = 0; m < (FermionicMonomial(1) << (2 * n)); ++m)
	{
		int c = coeff(rng);
		if (c)
			r.add_term(m, Scalar(Rat(c)));
	}
	return r;
}

// theta^2j by repeated multiplication (oracle for berezin checks)
GrassmannElement theta_pow(int n, int j)
{
	GrassmannElement r = GrassmannElement::one(n);
	for (int i = 0; i < j; ++i)
		r = gmul(r, theta2(n));
	return r;
}

Scalar top_coefficient(GrassmannElement const &a)
{
	FermionicMonomial top = (FermionicMonomial(1) << (2 * a.n)) - 1;
	auto it = a.terms.find(top);
	return it == a.terms.end() ? Scalar() : it->second;
}

} // namespace

TEST_CASE("multiplication")
{
	int n = 2;
	CHECK(gmul(x(n, 1), x(n, 2)) == gmul(gneg(x(n, 2)), x(n, 1)));
	CHECK(gmul(gmul(x(n, 1), x(n, 2)), x(n, 1)).is_zero());
	// associativity on random elements
	for (int i = 0; i < 10; ++i)
	{
		auto a = random_element(2), b = random_element(2), c = random_element(2);
		CHECK(gmul(gmul(a, b), c) == gmul(a, gmul(b, c)));
	}
	CHECK_THROWS_AS(gmul(GrassmannElement::one(1), GrassmannElement::one(2)), Error);
}

TEST_CASE("derivative")
{
	int n = 1;
	auto x12 = gmul(x(n, 1), x(n, 2));
	CHECK(fderiv(0, x12) == x(n, 2));
	CHECK(fderiv(1, x12) == gneg(x(n, 1)));
	CHECK(fderiv(0, x(n, 2)).is_zero());
	CHECK_THROWS_AS(fderiv(5, x(n, 1)), Error);
}

TEST_CASE("berezin")
{
	for (int n = 1; n <= 3; ++n)
	{
		GrassmannElement top = GrassmannElement::one(n);
		for (int j = 1; j <= 2 * n; ++j)
			top = gmul(top, x(n, j));
		CHECK(berezin(top) == Scalar::s_power(-2 * n));
		CHECK(berezin(GrassmannElement::one(n)).is_zero());
		// theta^{2n} = (-1)^n n! x'_1...x'_2n, both by expansion and berezin
		GrassmannElement tp = theta_pow(n, n);
		Rat cexp = Rat(factorial(n)) * ((n % 2) ? -1 : 1);
		CHECK(top_coefficient(tp) == Scalar(cexp));
		CHECK(berezin(tp) == Scalar(cexp) * Scalar::s_power(-2 * n));
		// berezin as iterated derivative and as nabla_f^2n / (4^n n!)
		GrassmannElement d = random_element(n);
		GrassmannElement expect = d;
		for (int j = 0; j < 2 * n; ++j)
			expect = fderiv(j, expect);
		GrassmannElement vian = d;
		for (int j = 0; j < n; ++j)
			vian = nabla2_f(vian);
		Scalar viaderiv = expect.terms.count(0) ? expect.terms.at(0) : Scalar();
		Scalar vianabla = vian.terms.count(0) ? vian.terms.at(0) : Scalar();
		CHECK(berezin(d) == viaderiv * Scalar::s_power(-2 * n));
		CHECK(berezin(d) ==
		      vianabla * Scalar(Rat(1) / (rat_pow(Rat(4), n) * Rat(factorial(n)))) * Scalar::s_power(-2 * n));
	}
}

TEST_CASE("operators")
{
	for (int n = 1; n <= 4; ++n)
	{
		// nabla_f^2 theta^2 = -4n on constants
		CHECK(nabla2_f(theta2(n)) == gscale(Scalar(Rat(-4) * n), GrassmannElement::one(n)));
		CHECK(euler_f(gmul(x(n, 1), x(n, 2))) == gscale(Scalar(2), gmul(x(n, 1), x(n, 2))));
		CHECK(nabla2_f(x(n, 1)).is_zero());
		// [nabla_f^2, theta^2] = 4 E_f - 4n on every monomial
		for (FermionicMonomial m = 0; m < (FermionicMonomial(1) << (2 * n)); ++m)
		{
			GrassmannElement p(n);
			p.terms[m] = Scalar(1);
			auto lhs = nabla2_f(gmul(theta2(n), p)) - gmul(theta2(n), nabla2_f(p));
			auto rhs = gscale(Scalar(4), euler_f(p)) - gscale(Scalar(Rat(4) * n), p);
			CHECK(lhs == rhs);
			// sl2: E = theta^2/2, F = -nabla_f^2/2, H = E_f - n
			auto E = [&](GrassmannElement const &q) { return gscale(Scalar(Rat(1, 2)), gmul(theta2(n), q)); };
			auto F = [&](GrassmannElement const &q) { return gscale(Scalar(Rat(-1, 2)), nabla2_f(q)); };
			auto H = [&](GrassmannElement const &q) { return euler_f(q) - gscale(Scalar(Rat(n)), q); };
			CHECK(H(E(p)) - E(H(p)) == gscale(Scalar(2), E(p)));
			CHECK(H(F(p)) - F(H(p)) == gscale(Scalar(-2), F(p)));
			CHECK(E(F(p)) - F(E(p)) == H(p));
		}
	}
}

TEST_CASE("star")
{
	for (int n = 1; n <= 3; ++n)
	{
		// *1 = 2^-n x'_1..x'_2n = (-1)^n theta^2n / (2^n n!)
		auto s1 = star(GrassmannElement::one(n));
		auto expect = gscale(Scalar(rat_pow(Rat(2), -n) * Rat((n % 2) ? -1 : 1) / Rat(factorial(n))),
		                     theta_pow(n, n));
		CHECK(s1 == expect);
		// defining identity and ** = (-1)^k on all monomials
		FermionicMonomial topm = (FermionicMonomial(1) << (2 * n)) - 1;
		for (FermionicMonomial m = 0; m <= topm; ++m)
		{
			GrassmannElement p(n);
			p.terms[m] = Scalar(1);
			int k = fdegree(m);
			auto prod = gmul(p, star(p));
			GrassmannElement top(n);
			top.terms[topm] = Scalar(rat_pow(Rat(2), k - n));
			CHECK(prod == top);
			CHECK(star(star(p)) == gscale(Scalar(Rat((k % 2) ? -1 : 1)), p));
		}
		// *(x'_1...x'_2n) = 2^n
		GrassmannElement topel(n);
		topel.terms[topm] = Scalar(1);
		CHECK(star(topel) == gscale(Scalar(rat_pow(Rat(2), n)), GrassmannElement::one(n)));
	}
}

TEST_CASE("tilde")
{
	int n = 2;
	CHECK(tilde(x(n, 1)) == x(n, 2));
	CHECK(tilde(x(n, 2)) == gneg(x(n, 1)));
	CHECK(tilde(gmul(x(n, 1), x(n, 2))) == gneg(gmul(x(n, 1), x(n, 2))));
	// anti-homomorphism tilde(ab) = tilde(b) tilde(a) on random pairs
	for (int i = 0; i < 20; ++i)
	{
		auto a = random_element(n), b = random_element(n);
		CHECK(tilde(gmul(a, b)) == gmul(tilde(b), tilde(a)));
	}
	// tilde(tilde(x_A)) = (-1)^k x_A
	for (FermionicMonomial m = 0; m < 16; ++m)
	{
		GrassmannElement p(n);
		p.terms[m] = Scalar(1);
		CHECK(tilde(tilde(p)) == gscale(Scalar(Rat((fdegree(m) % 2) ? -1 : 1)), p));
	}
	// tilde negates theta^2 (each pair picks up one sign)
	CHECK(tilde(theta2(n)) == gneg(theta2(n)));
}

TEST_CASE("fermionic inner product")
{
	for (int n = 1; n <= 3; ++n)
	{
		Scalar twopi_inv = Scalar(rat_pow(Rat(2), -n)) * Scalar::s_power(-2 * n);
		CHECK(inner_f(GrassmannElement::one(n), GrassmannElement::one(n)) == twopi_inv);
		CHECK(inner_f(x(n, 1), x(n, 1)) == Scalar(2) * twopi_inv);
		CHECK(inner_f(x(n, 1), x(n, 2)).is_zero());
	}
	// sesquilinearity in the t-coefficients: linear left, conjugate right
	{
		auto f = random_element(2), g = random_element(2);
		Scalar t = Scalar::t();
		CHECK(inner_f(gscale(t, f), g) == t * inner_f(f, g));
		CHECK(inner_f(f, gscale(t, g)) == t.conj() * inner_f(f, g));
	}
	// adjoint of the derivative is x'_j/2 on all monomial pairs (n = 2)
	int n = 2;
	for (FermionicMonomial a = 0; a < 16; ++a)
		for (FermionicMonomial b = 0; b < 16; ++b)
			for (int j = 0; j < 2 * n; ++j)
			{
				GrassmannElement f(n), g(n);
				f.terms[a] = Scalar(1);
				g.terms[b] = Scalar(1);
				auto lhs = inner_f(fderiv(j, f), g);
				auto rhs = inner_f(f, gscale(Scalar(Rat(1, 2)), gmul(x(n, j + 1), g)));
				CHECK(lhs == rhs);
			}
}

TEST_CASE("symplectic action")
{
	int n = 2, g = 2 * n;
	// identity
	std::vector<std::vector<Scalar>> id(g, std::vector<Scalar>(g));
	for (int i = 0; i < g; ++i)
		id[i][i] = Scalar(1);
	auto e = random_element(n);
	CHECK(symplectic_apply(id, e, true) == e);
	// J itself is symplectic and leaves theta^2 invariant
	std::vector<std::vector<Scalar>> J(g, std::vector<Scalar>(g));
	for (int i = 0; i < n; ++i)
	{
		J[2 * i][2 * i + 1] = Scalar(1);
		J[2 * i + 1][2 * i] = Scalar(-1);
	}
	CHECK(symplectic_apply(J, theta2(n), true) == theta2(n));
	// swapping the two pairs leaves theta^2 invariant
	std::vector<std::vector<Scalar>> P(g, std::vector<Scalar>(g));
	P[0][2] = Scalar(1);
	P[1][3] = Scalar(1);
	P[2][0] = Scalar(1);
	P[3][1] = Scalar(1);
	CHECK(symplectic_apply(P, theta2(n), true) == theta2(n));
	// a non-symplectic matrix is rejected when validation is requested
	std::vector<std::vector<Scalar>> bad = id;
	bad[0][0] = Scalar(2);
	CHECK_THROWS_AS(symplectic_apply(bad, e, true), Error);
}

TEST_CASE("berezin covariance under substitution")
{
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (int n = 1; n <= 3; ++n)
	{
		int g = 2 * n;
		for (int rep = 0; rep < 5; ++rep)
		{
			std::vector<std::vector<Scalar>> A(g, std::vector<Scalar>(g));
			for (int i = 0; i < g; ++i)
				for (int j = 0; j < g; ++j)
					A[i][j] = Scalar(make_rat(coeff(rng), 1 + (rep % 2)));
			auto f = random_element(n);
			// f(A.y') via substitution x'_j -> sum_k A_jk y'_k, i.e. apply A^T
			std::vector<std::vector<Scalar>> At(g, std::vector<Scalar>(g));
			for (int i = 0; i < g; ++i)
				for (int j = 0; j < g; ++j)
					At[i][j] = A[j][i];
			auto fA = symplectic_apply(At, f);
			CHECK(berezin(fA) == grassmann_det(A) * berezin(f));
		}
	}
}

TEST_CASE("gexp")
{
	int n = 2;
	// exp(-theta^2/2) has the finite Taylor expansion sum (-1)^j theta^2j/(2^j j!)
	auto gauss = gexp(gscale(Scalar(Rat(-1, 2)), theta2(n)));
	GrassmannElement expect(n);
	for (int j = 0; j <= n; ++j)
	{
		Rat c = Rat((j % 2) ? -1 : 1) / (rat_pow(Rat(2), j) * Rat(factorial(j)));
		expect = gadd(expect, gscale(Scalar(c), theta_pow(n, j)));
	}
	CHECK(gauss == expect);
}
