#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superharm/hermite.hpp"
#include "superharm/products.hpp"

using namespace superharm;

namespace {

// moment oracles for the Appendix orthogonality relations
Scalar hermite_weight_moment(int p) // int t^p e^{-t^2} dt over R
{
	if (p % 2)
		return Scalar();
	return gamma_half(HalfInteger::halves(p + 1));
}

Scalar laguerre_weight_moment(HalfInteger alpha, int p) // int_0^inf t^{alpha+p} e^{-t} dt
{
	return gamma_half(HalfInteger::halves(alpha.twice + 2 * p + 2));
}

Scalar gegenbauer_weight_moment(HalfInteger alpha, int p) // int_-1^1 t^p (1-t^2)^{alpha-1/2} dt
{
	if (p % 2)
		return Scalar();
	return gamma_half(HalfInteger::halves(p + 1)) * gamma_half(HalfInteger::halves(alpha.twice + 1)) *
	       recip_gamma_half(HalfInteger::halves(p + alpha.twice + 2));
}

template <class Moment> Scalar pair_poly(OrthoPoly const &a, OrthoPoly const &b, Moment &&mom)
{
	Scalar r;
	for (int i = 0; i <= a.degree(); ++i)
		for (int j = 0; j <= b.degree(); ++j)
		{
			Scalar c = a.coeff(i) * b.coeff(j);
			if (!c.is_zero())
				r += c * mom(i + j);
		}
	return r;
}

} // namespace

TEST_CASE("hermite polynomials")
{
	CHECK(hermite_1d(0).c == std::vector<Scalar>{Scalar(1)});
	CHECK(hermite_1d(2).c == std::vector<Scalar>{Scalar(-2), Scalar(), Scalar(4)});
	CHECK(hermite_1d(3).c == std::vector<Scalar>{Scalar(), Scalar(-12), Scalar(), Scalar(8)});
	// recurrence H_{k+1} = 2t H_k - 2k H_{k-1}
	for (int k = 1; k <= 8; ++k)
	{
		OrthoPoly next = hermite_1d(k + 1), hk = hermite_1d(k), hk1 = hermite_1d(k - 1);
		OrthoPoly rec;
		rec.c.assign(k + 2, Scalar());
		for (int i = 0; i <= hk.degree(); ++i)
			rec.c[i + 1] += Scalar(2) * hk.coeff(i);
		for (int i = 0; i <= hk1.degree(); ++i)
			rec.c[i] -= Scalar(Rat(2 * k)) * hk1.coeff(i);
		rec.trim();
		CHECK(next == rec);
	}
}

TEST_CASE("laguerre polynomials")
{
	// L_1^(alpha) = alpha + 1 - t
	OrthoPoly l1 = laguerre(1, HalfInteger::halves(5));
	CHECK(l1.c == std::vector<Scalar>{Scalar(Rat(7, 2)), Scalar(-1)});
	// negative integer parameter through the Pochhammer form: L_1^(-2) = -1 - t
	OrthoPoly l1n = laguerre(1, HalfInteger(-2));
	CHECK(l1n.c == std::vector<Scalar>{Scalar(-1), Scalar(-1)});
	CHECK(laguerre(0, HalfInteger(3)).c == std::vector<Scalar>{Scalar(1)});
}

TEST_CASE("gegenbauer polynomials")
{
	// C_1^(alpha) = 2 alpha t
	CHECK(gegenbauer(1, HalfInteger(2)).c == std::vector<Scalar>{Scalar(), Scalar(4)});
	// C_2^(1/2) = (3t^2 - 1)/2, the Legendre polynomial
	CHECK(gegenbauer(2, HalfInteger::halves(1)).c ==
	      std::vector<Scalar>{Scalar(Rat(-1, 2)), Scalar(), Scalar(Rat(3, 2))});
	// negative parameter continuation: C_k^(-n-1) equals the closed form
	// (-1)^k (n+1)! sum_j (2t)^{k-2j} / ((k-2j)! j! (n+1+j-k)!)
	for (int n = 1; n <= 3; ++n)
		for (int k = 0; k <= n; ++k)
		{
			OrthoPoly c = gegenbauer(k, HalfInteger(-n - 1));
			OrthoPoly expect;
			expect.c.assign(k + 1, Scalar());
			for (int j = 0; 2 * j <= k; ++j)
			{
				if (n + 1 + j - k < 0)
					continue;
				Rat v = Rat((k % 2) ? -1 : 1) * Rat(factorial(n + 1)) * rat_pow(Rat(2), k - 2 * j) /
				        (Rat(factorial(k - 2 * j)) * Rat(factorial(j)) * Rat(factorial(n + 1 + j - k)));
				expect.c[k - 2 * j] = Scalar(v);
			}
			expect.trim();
			CHECK(c == expect);
		}
	// renormalized form agrees with ((k+alpha)/alpha) C_k^(alpha) off alpha = 0
	for (int k = 1; k <= 5; ++k)
		for (int tw : {1, 2, 3, -1, -5})
		{
			HalfInteger a = HalfInteger::halves(tw);
			OrthoPoly lhs = gegenbauer_renormalized(k, a);
			OrthoPoly rhs = gegenbauer(k, a);
			Scalar f = Scalar((a.as_rational() + k) / a.as_rational());
			for (auto &c : rhs.c)
				c *= f;
			CHECK(lhs == rhs);
		}
	// and is the Chebyshev limit 2 T_k at alpha = 0
	CHECK(gegenbauer_renormalized(2, HalfInteger(0)).c ==
	      std::vector<Scalar>{Scalar(-2), Scalar(), Scalar(4)});
}

TEST_CASE("appendix orthogonality")
{
	// Hermite: delta_kl k! 2^k sqrt(pi)
	for (int k = 0; k <= 8; ++k)
		for (int l = 0; l <= k; ++l)
		{
			Scalar v = pair_poly(hermite_1d(k), hermite_1d(l), hermite_weight_moment);
			if (k != l)
				CHECK(v.is_zero());
			else
				CHECK(v == Scalar(Rat(factorial(k)) * rat_pow(Rat(2), k)) * Scalar::s_power(1));
		}
	// Laguerre with weight t^alpha e^{-t}: delta Gamma(k+alpha+1)/k!
	for (int twalpha : {0, 1, 2, 3})
		for (int k = 0; k <= 6; ++k)
			for (int l = 0; l <= k; ++l)
			{
				HalfInteger alpha = HalfInteger::halves(twalpha);
				Scalar v = pair_poly(laguerre(k, alpha), laguerre(l, alpha),
				                     [&](int p) { return laguerre_weight_moment(alpha, p); });
				if (k != l)
					CHECK(v.is_zero());
				else
					CHECK(v == gamma_half(HalfInteger::halves(2 * k + twalpha + 2)) *
					               Scalar(Rat(1) / Rat(factorial(k))));
			}
	// Gegenbauer with weight (1-t^2)^{alpha-1/2}:
	// delta pi 2^{1-2alpha} Gamma(k+2alpha) / (k! (k+alpha) Gamma(alpha)^2)
	for (int twalpha : {1, 2, 3})
		for (int k = 0; k <= 6; ++k)
			for (int l = 0; l <= k; ++l)
			{
				HalfInteger alpha = HalfInteger::halves(twalpha);
				Scalar v = pair_poly(gegenbauer(k, alpha), gegenbauer(l, alpha),
				                     [&](int p) { return gegenbauer_weight_moment(alpha, p); });
				if (k != l)
					CHECK(v.is_zero());
				else
				{
					Scalar expect = Scalar::s_power(2) * Scalar(rat_pow(Rat(2), 1 - twalpha)) *
					                gamma_half(HalfInteger::halves(2 * k + 2 * twalpha)) *
					                Scalar(Rat(1) / Rat(factorial(k))) *
					                Scalar(make_rat(2, 2 * k + twalpha)) *
					                recip_gamma_half(alpha) * recip_gamma_half(alpha);
					CHECK(v == expect);
				}
			}
}

TEST_CASE("hermite-laguerre parity identities")
{
	for (int k = 0; k <= 4; ++k)
	{
		// H_2k(t) = (-1)^k 2^{2k} k! L_k^{-1/2}(t^2)
		OrthoPoly lhs = hermite_1d(2 * k);
		OrthoPoly lk = laguerre(k, HalfInteger::halves(-1));
		OrthoPoly rhs;
		rhs.c.assign(2 * k + 1, Scalar());
		Scalar c = Scalar(Rat((k % 2) ? -1 : 1) * rat_pow(Rat(2), 2 * k) * Rat(factorial(k)));
		for (int i = 0; i <= lk.degree(); ++i)
			rhs.c[2 * i] = c * lk.coeff(i);
		rhs.trim();
		CHECK(lhs == rhs);
		// H_{2k+1}(t) = (-1)^k 2^{2k+1} k! t L_k^{1/2}(t^2)
		OrthoPoly lhs2 = hermite_1d(2 * k + 1);
		OrthoPoly lk2 = laguerre(k, HalfInteger::halves(1));
		OrthoPoly rhs2;
		rhs2.c.assign(2 * k + 2, Scalar());
		Scalar c2 = Scalar(Rat((k % 2) ? -1 : 1) * rat_pow(Rat(2), 2 * k + 1) * Rat(factorial(k)));
		for (int i = 0; i <= lk2.degree(); ++i)
			rhs2.c[2 * i + 1] = c2 * lk2.coeff(i);
		rhs2.trim();
		CHECK(lhs2 == rhs2);
	}
}

TEST_CASE("cartesian basis functions")
{
	// all-zero occupation: the Gaussian itself, norm pi^{M/2}
	Dims d{1, 1};
	auto psi0 = cartesian_basis(d, {0}, {0, 0});
	CHECK(psi0.psi.poly == fermionic_gaussian(d));
	CHECK(psi0.normsq == Scalar::s_power(d.super_dimension()));
	// (m,n) = (1,0), k = 1: polynomial part 2 x1
	Dims d10{1, 0};
	auto psi1 = cartesian_basis(d10, {1}, {});
	CHECK(psi1.psi.poly == sscale(Scalar(2), SuperPolynomial::variable(d10, 0)));
	// (m,n) = (0,1): b_1^+ exp(-theta^2/2) = x'_1
	Dims d01{0, 1};
	auto psib = cartesian_basis(d01, {}, {1, 0});
	CHECK(psib.psi.poly == SuperPolynomial::generator(d01, 0));
	CHECK_THROWS_AS(cartesian_basis(d, {0}, {2, 0}), Error);
	// predicted norms match inner1 exactly
	for (Dims dd : {Dims{1, 1}, Dims{2, 1}})
	{
		std::vector<std::vector<int>> bos =
		    dd.m == 1 ? std::vector<std::vector<int>>{{0}, {1}, {2}, {3}}
		              : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}};
		for (auto const &b : bos)
			for (int l1 : {0, 1})
				for (int l2 : {0, 1})
				{
					auto f = cartesian_basis(dd, b, {l1, l2});
					CHECK(inner1(f.psi, f.psi) == f.normsq);
				}
	}
}

TEST_CASE("spherical hermite functions")
{
	// j=1 on H_0 = 1: 4 L_1^{M/2-1}(R^2) e^{-R^2/2} = 4(M/2 - R^2) e^{-R^2/2}
	Dims d{3, 1};
	int M = d.super_dimension();
	auto phi = spherical_hermite(1, SuperPolynomial::one(d), d);
	auto expect = wrap_with_gaussian(
	    sscale(Scalar(4), SuperPolynomial::constant(d, Scalar(make_rat(M, 2))) - R2(d)));
	CHECK(phi == expect);
	// j=0 is H e^{-R^2/2}
	auto H = SuperPolynomial::variable(d, 0);
	CHECK(spherical_hermite(0, H, d) == wrap_with_gaussian(H));
	// fermionic case (m=0): 4 L_1^{-2}(theta^2) = 4(-1 - theta^2)
	Dims d01{0, 1};
	auto phif = spherical_hermite(1, SuperPolynomial::one(d01), d01);
	auto expectf = wrap_with_gaussian(
	    sscale(Scalar(4), sneg(SuperPolynomial::one(d01)) - stheta2(d01)));
	CHECK(phif == expectf);
	CHECK_THROWS_AS(spherical_hermite(1, R2(d), d), Error); // not harmonic
}

TEST_CASE("oscillator eigenvalues")
{
	Dims d{3, 1};
	Rat Mh = make_rat(d.super_dimension(), 2);
	// phi_{0,0}: M/2, phi_{1,0}: M/2 + 2
	CHECK(oscillator_check(spherical_hermite(0, SuperPolynomial::one(d), d), d) == Scalar(Mh));
	CHECK(oscillator_check(spherical_hermite(1, SuperPolynomial::one(d), d), d) == Scalar(Mh + 2));
	// cartesian k1 = 1: M/2 + 1
	auto f = cartesian_basis(d, {1, 0, 0}, {0, 0});
	CHECK(oscillator_check(f.psi, d) == Scalar(Mh + 1));
	// energy M/2 + sum k_i + sum l_i in general
	auto f2 = cartesian_basis(d, {2, 1, 0}, {1, 0});
	CHECK(oscillator_check(f2.psi, d) == Scalar(Mh + 4));
	// non-eigenfunctions are rejected
	auto bad = wrap_with_gaussian(SuperPolynomial::one(d) + SuperPolynomial::variable(d, 0));
	CHECK_THROWS_AS(oscillator_check(bad, d), Error);
}

TEST_CASE("lowering identity")
{
	// (nabla^2+R^2+2E+M) phi_{j,k,l} = -8j(2j+M+2k-2) phi_{j-1,k,l}, all (m,n)
	for (Dims d : {Dims{2, 1}, Dims{3, 1}, Dims{0, 2}})
	{
		int M = d.super_dimension();
		int kmax = d.m > 0 ? 3 : d.n;
		for (int k = 0; k <= kmax; ++k)
		{
			// harmonics: super blocks for m > 0, fermionic harmonics for m = 0
			std::vector<SuperPolynomial> harms;
			if (d.m > 0)
			{
				for (auto const &B : super_harmonic_basis(k, d))
					harms.push_back(B.assembled());
			}
			else if (k <= d.n)
			{
				for (auto const &h : fermionic_harmonic_basis(d.n, k))
					harms.push_back(from_grassmann(d, h));
			}
			for (auto const &H : harms)
				for (int j = 1; j <= 3; ++j)
				{
					auto phi = spherical_hermite(j, H, d);
					auto prev = spherical_hermite(j - 1, H, d);
					auto low = apply_lowering(phi, d);
					Scalar c = Scalar(Rat(-8 * j) * Rat(2 * j + M + 2 * k - 2));
					CHECK(low.poly == sscale(c, prev.poly));
				}
		}
	}
}

TEST_CASE("operator route equals laguerre route across dimensions")
{
	// RouteMismatch would throw inside spherical_hermite; exercise a spread
	// of (m, n, j, k)
	for (Dims d : {Dims{1, 0}, Dims{3, 1}, Dims{4, 1}, Dims{5, 2}, Dims{0, 2}, Dims{0, 3}})
	{
		int kmax = d.m > 0 ? 2 : d.n;
		for (int k = 0; k <= kmax; ++k)
		{
			std::vector<SuperPolynomial> harms;
			if (d.m > 0)
			{
				auto blocks = super_harmonic_basis(k, d);
				if (blocks.empty())
					continue;
				harms.push_back(blocks.front().assembled());
			}
			else if (k <= d.n)
			{
				harms.push_back(from_grassmann(d, fermionic_harmonic_basis(d.n, k).front()));
			}
			for (auto const &H : harms)
				for (int j = 0; j <= 3; ++j)
				{
					if (d.m == 0 && j + k > d.n)
						continue;
					CHECK_NOTHROW(spherical_hermite(j, H, d));
				}
		}
	}
}
