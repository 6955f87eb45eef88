#include "superharm/superpoly.hpp"
#include <sstream>

namespace superharm {

namespace {

void require_compatible(SuperPolynomial const &a, SuperPolynomial const &b)
{
	if (!(a.dims == b.dims) || a.mode != b.mode)
		fail(Errc::ModeMismatch, "superpolynomials of different rings");
}

} // namespace

SuperPolynomial SuperPolynomial::variable(Dims d, int i, GrassmannMode mode)
{
	SuperPolynomial r(d, mode);
	if (i < 0 || i >= r.bvars())
		fail(Errc::IndexOutOfRange, "variable index out of range");
	std::vector<int> e(r.bvars(), 0);
	e[i] = 1;
	r.terms[SuperMonomial(std::move(e), 0)] = Scalar(1);
	return r;
}

SuperPolynomial SuperPolynomial::generator(Dims d, int j, GrassmannMode mode)
{
	SuperPolynomial r(d, mode);
	if (j < 0 || j >= r.fgens())
		fail(Errc::IndexOutOfRange, "generator index out of range");
	r.terms[SuperMonomial(std::vector<int>(r.bvars(), 0), FermionicMonomial(1) << j)] = Scalar(1);
	return r;
}

bool SuperPolynomial::is_homogeneous(int *deg_out) const
{
	int d = -1;
	for (auto const &[m, c] : terms)
	{
		if (d == -1)
			d = m.degree();
		else if (m.degree() != d)
			return false;
	}
	if (deg_out)
		*deg_out = std::max(d, 0);
	return true;
}

std::string SuperPolynomial::to_string() const
{
	if (terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto const &[m, c] : terms)
	{
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.to_string() << ")";
		for (size_t i = 0; i < m.bos.size(); ++i)
			if (m.bos[i])
			{
				os << "*x" << (i + 1);
				if (m.bos[i] > 1)
					os << "^" << m.bos[i];
			}
		FermionicMonomial rest = m.ferm;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			os << "*x'" << (i + 1);
		}
	}
	return os.str();
}

std::string SuperPolynomial::to_json() const
{
	std::ostringstream os;
	os << "[";
	bool first = true;
	for (auto const &[m, c] : terms)
	{
		os << (first ? "" : ",") << "{\"exponents\":[";
		for (size_t i = 0; i < m.bos.size(); ++i)
			os << (i ? "," : "") << m.bos[i];
		os << "],\"generators\":[";
		FermionicMonomial rest = m.ferm;
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

SuperPolynomial sadd(SuperPolynomial const &a, SuperPolynomial const &b)
{
	require_compatible(a, b);
	SuperPolynomial r = a;
	for (auto const &[m, c] : b.terms)
		r.add_term(m, c);
	return r;
}

SuperPolynomial sneg(SuperPolynomial const &a)
{
	SuperPolynomial r = a;
	for (auto &[m, c] : r.terms)
		c = -c;
	return r;
}

SuperPolynomial sscale(Scalar const &c, SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	if (c.is_zero())
		return r;
	for (auto const &[m, x] : a.terms)
		r.add_term(m, c * x);
	return r;
}

SuperPolynomial smul(SuperPolynomial const &a, SuperPolynomial const &b)
{
	require_compatible(a, b);
	SuperPolynomial r(a.dims, a.mode);
	int nb = r.bvars();
	for (auto const &[ma, ca] : a.terms)
		for (auto const &[mb, cb] : b.terms)
		{
			int s = merge_sign(ma.ferm, mb.ferm);
			if (s == 0)
				continue;
			SuperMonomial m;
			m.bos.resize(nb);
			for (int i = 0; i < nb; ++i)
				m.bos[i] = ma.bos[i] + mb.bos[i];
			m.ferm = ma.ferm | mb.ferm;
			Scalar c = ca * cb;
			r.add_term(m, s < 0 ? -c : c);
		}
	return r;
}

SuperPolynomial bderiv(int i, SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		if (m.bos[i] == 0)
			continue;
		SuperMonomial d = m;
		d.bos[i] -= 1;
		r.add_term(d, Scalar(Rat(m.bos[i])) * c);
	}
	return r;
}

SuperPolynomial sfderiv(int j, SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	FermionicMonomial bit = FermionicMonomial(1) << j;
	FermionicMonomial below = bit - 1;
	for (auto const &[m, c] : a.terms)
	{
		if (!(m.ferm & bit))
			continue;
		SuperMonomial d = m;
		d.ferm ^= bit;
		int s = std::popcount(m.ferm & below) & 1 ? -1 : 1;
		r.add_term(d, s < 0 ? -c : c);
	}
	return r;
}

SuperPolynomial nabla2_b(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (int i = 0; i < a.bvars(); ++i)
	{
		auto d = bderiv(i, bderiv(i, a));
		for (auto const &[m, c] : d.terms)
			r.add_term(m, c);
	}
	return r;
}

SuperPolynomial nabla2_f(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	int pairs = a.fgens() / 2;
	for (int j = 0; j < pairs; ++j)
	{
		auto d = sfderiv(2 * j, sfderiv(2 * j + 1, a));
		for (auto const &[m, c] : d.terms)
			r.add_term(m, Scalar(Rat(-4)) * c);
	}
	return r;
}

SuperPolynomial nabla2(SuperPolynomial const &a) { return nabla2_b(a) + nabla2_f(a); }

SuperPolynomial euler_b(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		int d = m.bdegree();
		if (d)
			r.add_term(m, Scalar(Rat(d)) * c);
	}
	return r;
}

SuperPolynomial sfeuler(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		int d = fdegree(m.ferm);
		if (d)
			r.add_term(m, Scalar(Rat(d)) * c);
	}
	return r;
}

SuperPolynomial euler(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
	{
		int d = m.degree();
		if (d)
			r.add_term(m, Scalar(Rat(d)) * c);
	}
	return r;
}

SuperPolynomial r2(Dims d, GrassmannMode mode)
{
	SuperPolynomial r(d, mode);
	int nb = mode == GrassmannMode::Single ? d.m : 2 * d.m;
	// doubled mode: r^2 in the x-half only
	for (int i = 0; i < d.m; ++i)
	{
		std::vector<int> e(nb, 0);
		e[i] = 2;
		r.add_term(SuperMonomial(std::move(e), 0), Scalar(1));
	}
	return r;
}

SuperPolynomial stheta2(Dims d, GrassmannMode mode)
{
	SuperPolynomial r(d, mode);
	int nb = mode == GrassmannMode::Single ? d.m : 2 * d.m;
	for (int j = 0; j < d.n; ++j)
		r.add_term(SuperMonomial(std::vector<int>(nb, 0), FermionicMonomial(3) << (2 * j)), Scalar(-1));
	return r;
}

SuperPolynomial R2(Dims d, GrassmannMode mode) { return r2(d, mode) + stheta2(d, mode); }

SuperPolynomial from_grassmann(Dims d, GrassmannElement const &g)
{
	if (g.n != d.n)
		fail(Errc::ModeMismatch, "grassmann element dimension mismatch");
	SuperPolynomial r(d, g.mode);
	int nb = r.bvars();
	for (auto const &[m, c] : g.terms)
		r.terms.emplace(SuperMonomial(std::vector<int>(nb, 0), m), c);
	return r;
}

SuperPolynomial homogeneous_component(SuperPolynomial const &a, int degree)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
		if (m.degree() == degree)
			r.terms.emplace(m, c);
	return r;
}

Scalar constant_term(SuperPolynomial const &a)
{
	for (auto const &[m, c] : a.terms)
		if (m.degree() == 0)
			return c;
	return Scalar();
}

SuperPolynomial kill_x_half(SuperPolynomial const &a)
{
	if (a.mode != GrassmannMode::Doubled)
		fail(Errc::ModeMismatch, "kill_x_half needs doubled mode");
	SuperPolynomial r(a.dims, a.mode);
	FermionicMonomial xmask = (FermionicMonomial(1) << (2 * a.dims.n)) - 1;
	for (auto const &[m, c] : a.terms)
	{
		bool has_x = (m.ferm & xmask) != 0;
		for (int i = 0; i < a.dims.m && !has_x; ++i)
			if (m.bos[i])
				has_x = true;
		if (!has_x)
			r.terms.emplace(m, c);
	}
	return r;
}

SuperPolynomial star_fermionic(SuperPolynomial const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "star needs single mode");
	SuperPolynomial r(a.dims, a.mode);
	int n = a.dims.n;
	FermionicMonomial top = (FermionicMonomial(1) << (2 * n)) - 1;
	for (auto const &[m, c] : a.terms)
	{
		FermionicMonomial comp = top & ~m.ferm;
		int eps = merge_sign(m.ferm, comp);
		int k = fdegree(m.ferm);
		SuperMonomial mm = m;
		mm.ferm = comp;
		r.add_term(mm, Scalar(rat_pow(Rat(2), k - n) * eps) * c);
	}
	return r;
}

SuperPolynomial tilde_fermionic(SuperPolynomial const &a)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "tilde needs single mode");
	SuperPolynomial r(a.dims, a.mode);
	GrassmannElement probe(a.dims.n, GrassmannMode::Single);
	for (auto const &[m, c] : a.terms)
	{
		probe.terms.clear();
		probe.terms.emplace(m.ferm, Scalar(1));
		GrassmannElement t = tilde(probe);
		for (auto const &[fm, fc] : t.terms)
		{
			SuperMonomial mm = m;
			mm.ferm = fm;
			r.add_term(mm, fc * c);
		}
	}
	return r;
}

SuperPolynomial conj_coefficients(SuperPolynomial const &a)
{
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[m, c] : a.terms)
		r.terms.emplace(m, c.conj());
	return r;
}

SuperPolynomial osp_apply(std::vector<std::vector<Scalar>> const &A, SuperPolynomial const &a, bool validate)
{
	if (a.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "osp_apply needs single mode");
	int m = a.dims.m, g = 2 * a.dims.n, N = m + g;
	if ((int)A.size() != N)
		fail(Errc::IndexOutOfRange, "matrix size mismatch");
	for (auto const &row : A)
		if ((int)row.size() != N)
			fail(Errc::IndexOutOfRange, "matrix size mismatch");
	if (validate)
	{
		auto G = [&](int i, int j) -> int {
			if (i < m || j < m)
				return i == j ? (i < m ? 1 : 0) : 0;
			int fi = i - m, fj = j - m;
			if (fi / 2 != fj / 2 || fi == fj)
				return 0;
			return (fi % 2 == 0) ? 1 : -1;
		};
		for (int i = 0; i < N; ++i)
			for (int j = 0; j < N; ++j)
			{
				Scalar v;
				for (int k = 0; k < N; ++k)
					for (int l = 0; l < N; ++l)
						if (int w = G(k, l); w != 0)
							v += A[k][i] * A[l][j] * Scalar(Rat(w));
				if (!(v == Scalar(Rat(G(i, j)))))
					fail(Errc::NotOrthosymplectic, "matrix does not preserve the metric G");
			}
	}
	// mixed bosonic/fermionic blocks are not meaningful here; require pure
	// block structure
	for (int i = 0; i < N; ++i)
		for (int j = 0; j < N; ++j)
			if (((i < m) != (j < m)) && !A[i][j].is_zero())
				fail(Errc::NotOrthosymplectic, "matrix mixes commuting and anticommuting variables");

	std::vector<SuperPolynomial> bimg, fimg;
	for (int j = 0; j < m; ++j)
	{
		SuperPolynomial im(a.dims);
		for (int k = 0; k < m; ++k)
			im = im + sscale(A[k][j], SuperPolynomial::variable(a.dims, k));
		bimg.push_back(im);
	}
	for (int j = 0; j < g; ++j)
	{
		SuperPolynomial im(a.dims);
		for (int k = 0; k < g; ++k)
			im = im + sscale(A[m + k][m + j], SuperPolynomial::generator(a.dims, k));
		fimg.push_back(im);
	}
	SuperPolynomial r(a.dims, a.mode);
	for (auto const &[mon, c] : a.terms)
	{
		SuperPolynomial prod = SuperPolynomial::constant(a.dims, c);
		for (int i = 0; i < m; ++i)
			for (int e = 0; e < mon.bos[i]; ++e)
				prod = smul(prod, bimg[i]);
		FermionicMonomial rest = mon.ferm;
		while (rest)
		{
			int i = std::countr_zero(rest);
			rest &= rest - 1;
			prod = smul(prod, fimg[i]);
		}
		r = r + prod;
	}
	return r;
}

SuperPolynomial sexp_nilpotent(SuperPolynomial const &a)
{
	for (auto const &[m, c] : a.terms)
		if (m.ferm == 0)
			fail(Errc::ParamOutOfRange, "sexp_nilpotent needs every term to carry fermionic content");
	SuperPolynomial r = SuperPolynomial::one(a.dims, a.mode);
	SuperPolynomial pow = r;
	int max = a.fgens();
	for (int i = 1; i <= max; ++i)
	{
		pow = smul(pow, a);
		if (pow.is_zero())
			break;
		r = r + sscale(Scalar(Rat(1) / Rat(factorial(i))), pow);
	}
	return r;
}

SuperPolynomial fermionic_gaussian(Dims d, GrassmannMode mode)
{
	return sexp_nilpotent(sscale(Scalar(Rat(-1, 2)), stheta2(d, mode)));
}

std::vector<SuperMonomial> monomials_of_degree(Dims dims, int d, GrassmannMode mode)
{
	int nb = mode == GrassmannMode::Single ? dims.m : 2 * dims.m;
	int ng = mode == GrassmannMode::Single ? 2 * dims.n : 4 * dims.n;
	std::vector<SuperMonomial> out;
	// enumerate fermionic part by degree, then bosonic compositions
	std::vector<std::vector<FermionicMonomial>> ferm_by_deg(ng + 1);
	for (FermionicMonomial f = 0; f < (FermionicMonomial(1) << ng); ++f)
		ferm_by_deg[fdegree(f)].push_back(f);
	std::function<void(int, int, std::vector<int> &, FermionicMonomial)> rec =
	    [&](int var, int remaining, std::vector<int> &exps, FermionicMonomial f) {
		    if (var == nb)
		    {
			    if (remaining == 0)
				    out.push_back(SuperMonomial(exps, f));
			    return;
		    }
		    for (int e = remaining; e >= 0; --e)
		    {
			    exps[var] = e;
			    rec(var + 1, remaining - e, exps, f);
		    }
		    exps[var] = 0;
	    };
	for (int fd = 0; fd <= std::min(ng, d); ++fd)
		for (FermionicMonomial f : ferm_by_deg[fd])
		{
			std::vector<int> exps(nb, 0);
			rec(0, d - fd, exps, f);
		}
	return out;
}

std::vector<SuperMonomial> monomials_up_to_degree(Dims dims, int d, GrassmannMode mode)
{
	std::vector<SuperMonomial> out;
	for (int k = 0; k <= d; ++k)
	{
		auto v = monomials_of_degree(dims, k, mode);
		out.insert(out.end(), v.begin(), v.end());
	}
	return out;
}

void require_degree_cap(int degree, bool allow_large)
{
	if (!allow_large && degree > kDefaultDegreeCap)
		fail(Errc::DegreeCapExceeded,
		     "degree " + std::to_string(degree) + " above cap " + std::to_string(kDefaultDegreeCap));
}

Sl2Report check_sl2(Dims d, int max_degree, bool allow_large)
{
	require_degree_cap(max_degree, allow_large);
	Sl2Report rep;
	Rat half(1, 2);
	Scalar M_half = Scalar(make_rat(d.super_dimension(), 2));
	auto E = [&](SuperPolynomial const &p) { return sscale(Scalar(half), smul(R2(d), p)); };
	auto F = [&](SuperPolynomial const &p) { return sscale(Scalar(-half), nabla2(p)); };
	auto H = [&](SuperPolynomial const &p) { return euler(p) + sscale(M_half, p); };
	for (auto const &mon : monomials_up_to_degree(d, max_degree))
	{
		SuperPolynomial p(d);
		p.terms[mon] = Scalar(1);
		auto he = H(E(p)) - E(H(p));
		auto hf = H(F(p)) - F(H(p));
		auto ef = E(F(p)) - F(E(p));
		bool ok1 = he == sscale(Scalar(Rat(2)), E(p));
		bool ok2 = hf == sscale(Scalar(Rat(-2)), F(p));
		bool ok3 = ef == H(p);
		++rep.monomials_checked;
		if (!(ok1 && ok2 && ok3))
		{
			rep.ok = false;
			if (rep.first_failure.empty())
				rep.first_failure = p.to_string();
		}
	}
	return rep;
}

GaussianWrapped wrap_with_gaussian(SuperPolynomial const &h)
{
	return GaussianWrapped(smul(h, fermionic_gaussian(h.dims, h.mode)), 1);
}

GaussianWrapped wadd(GaussianWrapped const &a, GaussianWrapped const &b)
{
	if (a.gauss_half_power != b.gauss_half_power)
		fail(Errc::GaussianPowerMismatch, "mismatched implicit Gaussian powers");
	return GaussianWrapped(a.poly + b.poly, a.gauss_half_power);
}

GaussianWrapped wscale(Scalar const &c, GaussianWrapped const &a)
{
	return GaussianWrapped(sscale(c, a.poly), a.gauss_half_power);
}

GaussianWrapped wmul_poly(SuperPolynomial const &p, GaussianWrapped const &a)
{
	return GaussianWrapped(smul(p, a.poly), a.gauss_half_power);
}

GaussianWrapped wbderiv(int i, GaussianWrapped const &a)
{
	SuperPolynomial d = bderiv(i, a.poly);
	SuperPolynomial xi = SuperPolynomial::variable(a.poly.dims, i, a.poly.mode);
	d = d - sscale(Scalar(Rat(a.gauss_half_power)), smul(xi, a.poly));
	return GaussianWrapped(d, a.gauss_half_power);
}

GaussianWrapped wsfderiv(int j, GaussianWrapped const &a)
{
	return GaussianWrapped(sfderiv(j, a.poly), a.gauss_half_power);
}

GaussianWrapped wnabla2(GaussianWrapped const &a)
{
	GaussianWrapped r(SuperPolynomial(a.poly.dims, a.poly.mode), a.gauss_half_power);
	for (int i = 0; i < a.poly.bvars(); ++i)
		r = wadd(r, wbderiv(i, wbderiv(i, a)));
	return GaussianWrapped(r.poly + nabla2_f(a.poly), a.gauss_half_power);
}

GaussianWrapped weuler(GaussianWrapped const &a)
{
	// E_b(P e^{-g r^2/2}) = (E_b P - g r^2 P) e^{..}; the fermionic part is
	// explicit in P
	SuperPolynomial p = euler_b(a.poly) + sfeuler(a.poly) -
	                    sscale(Scalar(Rat(a.gauss_half_power)), smul(r2(a.poly.dims, a.poly.mode), a.poly));
	return GaussianWrapped(p, a.gauss_half_power);
}

} // namespace superharm
