#include "superharm/grassmann.hpp"
#include <sstream>

namespace superharm {

namespace {

void require_compatible(GrassmannElement const &a, GrassmannElement const &b)
{
	if (a.n != b.n || a.mode != b.mode)
		fail(Errc::ModeMismatch, "grassmann elements of different algebras");
}

} // namespace

std::string GrassmannElement::to_string() const
{
	if (terms.empty())
		return "0";
	// graded order, generators ascending within a monomial
	std::vector<std::pair<FermionicMonomial, Scalar>> v(terms.begin(), terms.end());
	std::stable_sort(v.begin(), v.end(), [](auto const &a, auto const &b) {
		int da = fdegree(a.first), db = fdegree(b.first);
		return da != db ? da < db : a.first < b.first;
	});
	std::ostringstream os;
	bool first = true;
	for (auto const &[m, c] : v)
	{
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.to_string() << ")";
		FermionicMonomial rest = m;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			os << "*x'" << (i + 1);
		}
	}
	return os.str();
}

std::string GrassmannElement::to_json() const
{
	std::vector<std::pair<FermionicMonomial, Scalar>> v(terms.begin(), terms.end());
	std::stable_sort(v.begin(), v.end(), [](auto const &a, auto const &b) {
		int da = fdegree(a.first), db = fdegree(b.first);
		return da != db ? da < db : a.first < b.first;
	});
	std::ostringstream os;
	os << "[";
	bool first = true;
	for (auto const &[m, c] : v)
	{
		os << (first ? "" : ",") << "{\"generators\":[";
		FermionicMonomial rest = m;
		bool g1 = true;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			os << (g1 ? "" : ",") << (i + 1);
			g1 = false;
		}
		os << "],\"coeff\":" << c.to_json() << "}";
		first = false;
	}
	os << "]";
	return os.str();
}

GrassmannElement gadd(GrassmannElement const &a, GrassmannElement const &b)
{
	require_compatible(a, b);
	GrassmannElement r = a;
	for (auto const &[m, c] : b.terms)
		r.add_term(m, c);
	return r;
}

GrassmannElement gneg(GrassmannElement const &a)
{
	GrassmannElement r = a;
	for (auto &[m, c] : r.terms)
		c = -c;
	return r;
}

GrassmannElement gscale(Scalar const &c, GrassmannElement const &a)
{
	GrassmannElement r(a.n, a.mode);
	if (c.is_zero())
		return r;
	for (auto const &[m, x] : a.terms)
		r.add_term(m, c * x);
	return r;
}

GrassmannElement gmul(GrassmannElement const &a, GrassmannElement const &b)
{
	require_compatible(a, b);
	GrassmannElement r(a.n, a.mode);
	for (auto const &[ma, ca] : a.terms)
		for (auto const &[mb, cb] : b.terms)
		{
			int s = merge_sign(ma, mb);
			if (s == 0)
				continue;
			Scalar c = ca * cb;
			if (s < 0)
				c = -c;
			r.add_term(ma | mb, c);
		}
	return r;
}

GrassmannElement fderiv(int j, GrassmannElement const &a)
{
	if (j < 0 || j >= a.generators())
		fail(Errc::IndexOutOfRange, "derivative index out of range");
	GrassmannElement r(a.n, a.mode);
	FermionicMonomial bit = FermionicMonomial(1) << j;
	FermionicMonomial below = bit - 1;
	for (auto const &[m, c] : a.terms)
	{
		if (!(m & bit))
			continue;
		int s = std::popcount(m & below) & 1 ? -1 : 1;
		r.add_term(m ^ bit, s < 0 ? -c : c);
	}
	return r;
}

Scalar berezin(GrassmannElement const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "berezin integral needs single mode");
	FermionicMonomial top = (a.n == 32) ? ~FermionicMonomial(0) : ((FermionicMonomial(1) << (2 * a.n)) - 1);
	auto it = a.terms.find(top);
	if (it == a.terms.end())
		return Scalar();
	return it->second * Scalar::s_power(-2 * a.n);
}

GrassmannElement theta2(int n, GrassmannMode mode)
{
	GrassmannElement r(n, mode);
	for (int j = 0; j < n; ++j)
		r.add_term((FermionicMonomial(3) << (2 * j)), Scalar(-1));
	return r;
}

GrassmannElement theta2_y(int n)
{
	GrassmannElement r(n, GrassmannMode::Doubled);
	for (int j = 0; j < n; ++j)
		r.add_term((FermionicMonomial(3) << (2 * n + 2 * j)), Scalar(-1));
	return r;
}

GrassmannElement pairing_xy(int n)
{
	GrassmannElement r(n, GrassmannMode::Doubled);
	Rat half(1, 2);
	for (int j = 0; j < n; ++j)
	{
		FermionicMonomial xo = FermionicMonomial(1) << (2 * j);     // x'_{2j+1}
		FermionicMonomial xe = FermionicMonomial(1) << (2 * j + 1); // x'_{2j+2}
		FermionicMonomial yo = FermionicMonomial(1) << (2 * n + 2 * j);
		FermionicMonomial ye = FermionicMonomial(1) << (2 * n + 2 * j + 1);
		r.add_term(xo | ye, Scalar(-half));
		r.add_term(xe | yo, Scalar(half));
	}
	return r;
}

GrassmannElement nabla2_f(GrassmannElement const &a)
{
	GrassmannElement r(a.n, a.mode);
	int pairs = a.mode == GrassmannMode::Single ? a.n : 2 * a.n;
	for (int j = 0; j < pairs; ++j)
	{
		GrassmannElement d = fderiv(2 * j, fderiv(2 * j + 1, a));
		for (auto const &[m, c] : d.terms)
			r.add_term(m, Scalar(Rat(-4)) * c);
	}
	return r;
}

GrassmannElement euler_f(GrassmannElement const &a)
{
	GrassmannElement r(a.n, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		long d = fdegree(m);
		if (d)
			r.add_term(m, Scalar(Rat(d)) * c);
	}
	return r;
}

GrassmannElement star(GrassmannElement const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "star map needs single mode");
	FermionicMonomial top = (FermionicMonomial(1) << (2 * a.n)) - 1;
	GrassmannElement r(a.n, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		FermionicMonomial comp = top & ~m;
		int eps = merge_sign(m, comp); // x'_A x'_Ac = eps * top
		int k = fdegree(m);
		Rat factor = rat_pow(Rat(2), k - a.n) * eps;
		r.add_term(comp, Scalar(factor) * c);
	}
	return r;
}

GrassmannElement tilde(GrassmannElement const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "tilde map needs single mode");
	GrassmannElement r(a.n, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		// substitute generator-wise, then account for product order reversal
		FermionicMonomial out = 0;
		int sign = 1;
		FermionicMonomial rest = m;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			int img = (i % 2 == 0) ? i + 1 : i - 1; // pair swap
			if (i % 2 == 1)
				sign = -sign; // x'_{2i} -> -x'_{2i-1}
			out |= FermionicMonomial(1) << img;
		}
		int k = fdegree(m);
		// reversal of a degree-k product
		if (((k * (k - 1) / 2) & 1))
			sign = -sign;
		// the substituted images ordered by original ascending index differ
		// from ascending order by swaps inside complete pairs only
		FermionicMonomial rest2 = m;
		while (rest2)
		{
			int i = std::countr_zero(rest2);
			if ((i % 2 == 0) && (rest2 & (FermionicMonomial(2) << i)))
			{
				// both members of the pair present: images come out as
				// (x'_{2i}, -x'_{2i-1}) i.e. descending, one transposition
				sign = -sign;
				rest2 &= ~(FermionicMonomial(3) << i);
			}
			else
				rest2 &= rest2 - 1;
		}
		r.add_term(out, sign < 0 ? -c : c);
	}
	return r;
}

Scalar inner_f(GrassmannElement const &f, GrassmannElement const &g)
{
	require_compatible(f, g);
	if (f.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "inner_f needs single mode");
	// direct formula
	Scalar direct;
	Scalar two_pi_inv = Scalar(rat_pow(Rat(2), -f.n)) * Scalar::s_power(-2 * f.n);
	for (auto const &[m, c] : f.terms)
	{
		auto it = g.terms.find(m);
		if (it == g.terms.end())
			continue;
		direct += Scalar(rat_pow(Rat(2), fdegree(m))) * c * it->second.conj();
	}
	direct = direct * two_pi_inv;
	// Berezin route, kept as an internal consistency check
	GrassmannElement gc = g;
	for (auto &[m, c] : gc.terms)
		c = c.conj();
	Scalar viaberezin = berezin(gmul(f, star(gc)));
	if (!(direct == viaberezin))
		fail(Errc::RouteMismatch, "inner_f: berezin route disagrees with coefficient formula");
	return direct;
}

GrassmannElement symplectic_apply(std::vector<std::vector<Scalar>> const &A, GrassmannElement const &a,
                                  bool validate)
{
	int g = a.generators();
	if ((int)A.size() != g)
		fail(Errc::IndexOutOfRange, "matrix size mismatch");
	for (auto const &row : A)
		if ((int)row.size() != g)
			fail(Errc::IndexOutOfRange, "matrix size mismatch");
	if (validate)
	{
		// A^T J A = J with J the standard pair form
		auto J = [&](int i, int j) -> int {
			if (i / 2 != j / 2)
				return 0;
			if (i == j)
				return 0;
			return (i % 2 == 0) ? 1 : -1;
		};
		for (int i = 0; i < g; ++i)
			for (int j = 0; j < g; ++j)
			{
				Scalar v;
				for (int k = 0; k < g; ++k)
					for (int l = 0; l < g; ++l)
						if (J(k, l))
							v += A[k][i] * A[l][j] * Scalar(Rat(J(k, l)));
				if (!(v == Scalar(Rat(J(i, j)))))
					fail(Errc::NotSymplectic, "matrix is not symplectic");
			}
	}
	// x'_j -> sum_k A[k][j] x'_k
	std::vector<GrassmannElement> images;
	images.reserve(g);
	for (int j = 0; j < g; ++j)
	{
		GrassmannElement im(a.n, a.mode);
		for (int k = 0; k < g; ++k)
			im.add_term(FermionicMonomial(1) << k, A[k][j]);
		images.push_back(im);
	}
	GrassmannElement r(a.n, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		GrassmannElement prod = GrassmannElement::one(a.n, a.mode);
		FermionicMonomial rest = m;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			prod = gmul(prod, images[i]);
		}
		for (auto const &[pm, pc] : prod.terms)
			r.add_term(pm, c * pc);
	}
	return r;
}

GrassmannElement embed_x(GrassmannElement const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "embed_x takes single mode");
	GrassmannElement r(a.n, GrassmannMode::Doubled);
	r.terms = a.terms;
	return r;
}

GrassmannElement embed_y(GrassmannElement const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "embed_y takes single mode");
	GrassmannElement r(a.n, GrassmannMode::Doubled);
	for (auto const &[m, c] : a.terms)
		r.terms.emplace(m << (2 * a.n), c);
	return r;
}

Scalar grassmann_det(std::vector<std::vector<Scalar>> const &A)
{
	// fraction-free would be overkill; scalars may carry t and s, so use
	// Laplace expansion over the first column with memoized minors instead
	// of pivoting. Sizes here are at most 6x6.
	size_t g = A.size();
	std::vector<int> cols(g);
	for (size_t i = 0; i < g; ++i)
		cols[i] = (int)i;
	struct Rec {
		static Scalar det(std::vector<std::vector<Scalar>> const &A, int row, std::vector<int> cols)
		{
			if (cols.empty())
				return Scalar(1);
			Scalar r;
			for (size_t i = 0; i < cols.size(); ++i)
			{
				Scalar const &a = A[row][cols[i]];
				if (a.is_zero())
					continue;
				std::vector<int> sub;
				for (size_t j = 0; j < cols.size(); ++j)
					if (j != i)
						sub.push_back(cols[j]);
				Scalar m = a * det(A, row + 1, sub);
				if (i & 1)
					r -= m;
				else
					r += m;
			}
			return r;
		}
	};
	return Rec::det(A, 0, cols);
}

GrassmannElement gexp(GrassmannElement const &a)
{
	if (a.terms.count(0))
		fail(Errc::ParamOutOfRange, "gexp needs a nilpotent argument");
	GrassmannElement r = GrassmannElement::one(a.n, a.mode);
	GrassmannElement pow = r;
	long max = a.generators();
	for (long i = 1; i <= max; ++i)
	{
		pow = gmul(pow, a);
		if (pow.is_zero())
			break;
		GrassmannElement term = gscale(Scalar(Rat(1) / Rat(factorial(i))), pow);
		r = gadd(r, term);
	}
	return r;
}

} // namespace superharm
