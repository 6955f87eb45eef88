#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superharm/superpoly.hpp"

using namespace superharm;

namespace {

SuperPolynomial xv(Dims d, int i) { return SuperPolynomial::variable(d, i - 1); }
SuperPolynomial xg(Dims d, int j) { return SuperPolynomial::generator(d, j - 1); }

} // namespace

TEST_CASE("ring operations")
{
	Dims d{2, 1};
	CHECK(smul(xv(d, 1), xg(d, 1)) == smul(xg(d, 1), xv(d, 1)));
	CHECK(smul(xg(d, 1), xg(d, 1)).is_zero());
	// (x1 + x'1 x'2)^2 = x1^2 + 2 x1 x'1 x'2
	auto e = xv(d, 1) + smul(xg(d, 1), xg(d, 2));
	auto sq = smul(e, e);
	auto expect = smul(xv(d, 1), xv(d, 1)) + sscale(Scalar(2), smul(xv(d, 1), smul(xg(d, 1), xg(d, 2))));
	CHECK(sq == expect);
}

TEST_CASE("operators")
{
	Dims d{3, 1};
	int M = d.super_dimension();
	// nabla^2 R^2 = 2M
	CHECK(nabla2(R2(d)) == SuperPolynomial::constant(d, Scalar(Rat(2 * M))));
	CHECK(nabla2(smul(xv(d, 1), xv(d, 1))) == SuperPolynomial::constant(d, Scalar(2)));
	CHECK(nabla2(smul(xv(d, 1), xg(d, 1))).is_zero());
	// R^2 for (1,1) = x1^2 - x'1 x'2
	Dims d11{1, 1};
	CHECK(R2(d11) == smul(xv(d11, 1), xv(d11, 1)) - smul(xg(d11, 1), xg(d11, 2)));
	// Euler operator
	auto p = smul(smul(xv(d, 1), xv(d, 1)), xg(d, 1));
	CHECK(euler(p) == sscale(Scalar(3), p));
	CHECK(euler(SuperPolynomial::one(d)).is_zero());
}

TEST_CASE("sl2 relations")
{
	CHECK(check_sl2(Dims{2, 1}, 6).ok);
	CHECK(check_sl2(Dims{0, 2}, 4).ok);
	CHECK(check_sl2(Dims{3, 0}, 4).ok);
}

TEST_CASE("osp action")
{
	Dims d{2, 1};
	int N = d.m + 2 * d.n;
	std::vector<std::vector<Scalar>> A(N, std::vector<Scalar>(N));
	for (int i = 0; i < N; ++i)
		A[i][i] = Scalar(1);
	auto p = R2(d) + xv(d, 1);
	CHECK(osp_apply(A, p, true) == p);
	// rational rotation by the (3/5, 4/5) pair in (x1, x2)
	auto B = A;
	B[0][0] = Scalar(Rat(3, 5));
	B[0][1] = Scalar(Rat(-4, 5));
	B[1][0] = Scalar(Rat(4, 5));
	B[1][1] = Scalar(Rat(3, 5));
	CHECK(osp_apply(B, r2(d), true) == r2(d));
	CHECK(osp_apply(B, R2(d), true) == R2(d));
	// J block on the fermionic part leaves theta^2 invariant
	auto C = A;
	C[2][2] = Scalar();
	C[3][3] = Scalar();
	C[2][3] = Scalar(1);
	C[3][2] = Scalar(-1);
	CHECK(osp_apply(C, stheta2(d), true) == stheta2(d));
	// operators commute with validated transformations on low degrees
	auto BC = B;
	BC[2][3] = Scalar(1);
	BC[3][2] = Scalar(-1);
	BC[2][2] = Scalar();
	BC[3][3] = Scalar();
	for (auto const &mon : monomials_up_to_degree(d, 4))
	{
		SuperPolynomial q(d);
		q.terms[mon] = Scalar(1);
		CHECK(osp_apply(BC, nabla2(q)) == nabla2(osp_apply(BC, q)));
		CHECK(osp_apply(BC, euler(q)) == euler(osp_apply(BC, q)));
		CHECK(osp_apply(BC, smul(R2(d), q)) == smul(R2(d), osp_apply(BC, q)));
	}
	// a metric-violating matrix is rejected
	auto bad = A;
	bad[0][0] = Scalar(2);
	CHECK_THROWS_AS(osp_apply(bad, p, true), Error);
}

TEST_CASE("gaussian conjugation identities")
{
	// exp(R^2/2) nabla^2 exp(-R^2/2) = nabla^2 + R^2 - 2E - M and
	// exp(R^2/2)(nabla^2 + R^2 + 2E + M) exp(-R^2/2) = nabla^2,
	// both read off the wrapped representation
	for (Dims d : {Dims{2, 1}, Dims{1, 0}, Dims{0, 2}})
	{
		Scalar M = Scalar(Rat(d.super_dimension()));
		auto fg = fermionic_gaussian(d);
		for (auto const &mon : monomials_up_to_degree(d, 5))
		{
			SuperPolynomial p(d);
			p.terms[mon] = Scalar(1);
			GaussianWrapped w = wrap_with_gaussian(p);
			auto conjugated = nabla2(p) + smul(R2(d), p) - sscale(Scalar(2), euler(p)) - sscale(M, p);
			CHECK(wnabla2(w).poly == smul(fg, conjugated));
			auto lhs2 =
			    wnabla2(w).poly + smul(R2(d), w.poly) + sscale(Scalar(2), weuler(w).poly) + sscale(M, w.poly);
			CHECK(lhs2 == smul(fg, nabla2(p)));
		}
	}
}

TEST_CASE("wrapped arithmetic guards")
{
	Dims d{1, 1};
	GaussianWrapped a = wrap_with_gaussian(SuperPolynomial::one(d));
	GaussianWrapped b = a;
	b.gauss_half_power = 2;
	CHECK_THROWS_AS(wadd(a, b), Error);
}

TEST_CASE("degree cap guard")
{
	CHECK_THROWS_AS(require_degree_cap(13), Error);
	CHECK_NOTHROW(require_degree_cap(13, true));
	CHECK_NOTHROW(require_degree_cap(12));
}

TEST_CASE("monomial enumeration")
{
	// dim P_k = sum_{i+j=k} C(m-1+i, i) C(2n, j)
	Dims d{2, 1};
	auto dimP = [&](int k) {
		long s = 0;
		for (int j = 0; j <= std::min(2 * d.n, k); ++j)
			s += (long)binomial(d.m - 1 + (k - j), k - j).get_si() * binomial(2 * d.n, j).get_si();
		return s;
	};
	for (int k = 0; k <= 6; ++k)
		CHECK((long)monomials_of_degree(d, k).size() == dimP(k));
}
