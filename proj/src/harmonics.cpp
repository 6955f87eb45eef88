#include "superharm/harmonics.hpp"

namespace superharm {

SuperPolynomial project_h0(SuperPolynomial const &P)
{
	int k = 0;
	if (!P.is_homogeneous(&k))
		fail(Errc::NotHomogeneous, "projection needs a homogeneous input");
	Dims d = P.dims;
	if (bad_super_dimension(d))
		fail(Errc::BadDimension, "harmonic projection needs M not in -2N");
	Rat Mh = make_rat(d.super_dimension(), 2);
	SuperPolynomial result(d, P.mode);
	SuperPolynomial lap = P;
	SuperPolynomial R2k = R2(d, P.mode);
	SuperPolynomial radial = SuperPolynomial::one(d, P.mode);
	for (int j = 0; j <= k / 2; ++j)
	{
		if (j > 0)
		{
			lap = nabla2(lap);
			radial = smul(radial, R2k);
		}
		if (lap.is_zero())
			break;
		Rat poch = pochhammer(Rat(k) + Mh - j - 1, j);
		if (poch == 0)
			fail(Errc::BadDimension, "vanishing Pochhammer factor in the projection");
		Rat c = Rat((j % 2) ? -1 : 1) / (rat_pow(Rat(4), j) * Rat(factorial(j)) * poch);
		result = result + sscale(Scalar(c), smul(radial, lap));
	}
	return result;
}

Rat radial_laplacian_constant(int i, int j, int l, Dims d)
{
	Rat Mh = make_rat(d.super_dimension(), 2);
	return rat_pow(Rat(4), i) * Rat(factorial(j)) / Rat(factorial(j - i)) *
	       pochhammer(Rat(l) + Mh + j - i, i);
}

Rat fermionic_radial_constant(int i, int j, int k, int n)
{
	return Rat((i % 2) ? -1 : 1) * rat_pow(Rat(4), i) * Rat(factorial(j)) / Rat(factorial(j - i)) *
	       Rat(factorial(n + i - j - k)) / Rat(factorial(n - j - k));
}

FischerDecomposition fischer_decompose(SuperPolynomial const &P)
{
	int k = 0;
	if (!P.is_homogeneous(&k))
		fail(Errc::NotHomogeneous, "Fischer decomposition needs a homogeneous input");
	if (bad_super_dimension(P.dims))
		fail(Errc::BadDimension, "Fischer decomposition needs M not in -2N");
	FischerDecomposition dec;
	SuperPolynomial lap = P;
	for (int j = 0; 2 * j <= k; ++j)
	{
		if (j > 0)
			lap = nabla2(lap);
		if (lap.is_zero())
			break;
		Rat c = radial_laplacian_constant(j, j, k - 2 * j, P.dims);
		if (c == 0)
			fail(Errc::BadDimension, "degenerate radial constant in the Fischer decomposition");
		SuperPolynomial h = sscale(Scalar(Rat(1) / c), project_h0(lap));
		if (!h.is_zero())
			dec.components.emplace_back(j, h);
	}
	return dec;
}

SuperPolynomial fischer_reassemble(FischerDecomposition const &dec, Dims d)
{
	SuperPolynomial r(d);
	SuperPolynomial R2d = R2(d);
	for (auto const &[j, h] : dec.components)
	{
		SuperPolynomial radial = SuperPolynomial::one(d);
		for (int i = 0; i < j; ++i)
			radial = smul(radial, R2d);
		r = r + smul(radial, h);
	}
	return r;
}

SuperPolynomial fischer_reduce_mod_sphere(SuperPolynomial const &P)
{
	SuperPolynomial r(P.dims, P.mode);
	for (int deg = 0; deg <= P.degree(); ++deg)
	{
		SuperPolynomial comp = homogeneous_component(P, deg);
		if (comp.is_zero())
			continue;
		for (auto const &[j, h] : fischer_decompose(comp).components)
			r = r + h;
	}
	return r;
}

long dim_P(Dims d, int k)
{
	if (k < 0)
		return 0;
	Int s = 0;
	for (int j = 0; j <= std::min(2 * d.n, k); ++j)
		s += binomial(d.m - 1 + (k - j), k - j) * binomial(2 * d.n, j);
	return s.get_si();
}

long dim_H(Dims d, int k) { return dim_P(d, k) - dim_P(d, k - 2); }

long dim_Hb(int m, int p) { return dim_H(Dims{m, 0}, p); }

long dim_Hf(int n, int k)
{
	if (k < 0)
		return 0;
	Int v = binomial(2 * n, k) - binomial(2 * n, k - 2);
	return v.get_si();
}

namespace {

// recursion over the generator list per the Sp(2) x Sp(2n-2) branching
std::vector<GrassmannElement> fermionic_basis_rec(int n_total, std::vector<int> const &gens, int k)
{
	int pairs = (int)gens.size() / 2;
	std::vector<GrassmannElement> out;
	if (k == 0)
	{
		out.push_back(GrassmannElement::one(n_total));
		return out;
	}
	if (k > pairs)
		return out;
	if (k == 1)
	{
		for (int g : gens)
			out.push_back(GrassmannElement::generator(n_total, g));
		return out;
	}
	std::vector<int> rest(gens.begin() + 2, gens.end());
	auto xa = GrassmannElement::generator(n_total, gens[0]);
	auto xb = GrassmannElement::generator(n_total, gens[1]);
	for (auto const &h : fermionic_basis_rec(n_total, rest, k))
		out.push_back(h);
	for (auto const &h : fermionic_basis_rec(n_total, rest, k - 1))
	{
		out.push_back(gmul(xa, h));
		out.push_back(gmul(xb, h));
	}
	// [x_a x_b + (1/(k - n - 1)) (x_c x_d + ...)] H_{k-2}^f(rest)
	GrassmannElement mixer = gmul(xa, xb);
	Rat c = Rat(1) / Rat(k - pairs - 1);
	for (size_t i = 0; i + 1 < rest.size(); i += 2)
		mixer = gadd(mixer, gscale(Scalar(c), gmul(GrassmannElement::generator(n_total, rest[i]),
		                                           GrassmannElement::generator(n_total, rest[i + 1]))));
	for (auto const &h : fermionic_basis_rec(n_total, rest, k - 2))
		out.push_back(gmul(mixer, h));
	return out;
}

} // namespace

std::vector<GrassmannElement> fermionic_harmonic_basis(int n, int k)
{
	if (k < 0 || k > n)
		fail(Errc::DegreeOutOfRange, "fermionic harmonics vanish above degree n");
	std::vector<int> gens(2 * n);
	for (int i = 0; i < 2 * n; ++i)
		gens[i] = i;
	auto out = fermionic_basis_rec(n, gens, k);
	if ((long)out.size() != dim_Hf(n, k))
		fail(Errc::DegreeOutOfRange, "fermionic basis has unexpected size");
	for (auto const &h : out)
		if (!nabla2_f(h).is_zero())
			fail(Errc::HarmonicityViolated, "fermionic basis element is not harmonic");
	return out;
}

std::vector<FermionicBasisElement> fermionic_orthogonal_basis(int n, int k)
{
	auto raw = fermionic_harmonic_basis(n, k);
	std::vector<FermionicBasisElement> out;
	Scalar scale = Scalar(rat_pow(Rat(2), n - k) * Rat(factorial(n - k)));
	for (auto v : raw)
	{
		for (auto const &b : out)
		{
			Scalar c = inner_f(v, b.h) / inner_f(b.h, b.h);
			if (!c.is_zero())
				v = v - gscale(c, b.h);
		}
		if (v.is_zero())
			continue;
		out.push_back({v, scale * inner_f(v, v)});
	}
	if ((long)out.size() != dim_Hf(n, k))
		fail(Errc::DegreeOutOfRange, "orthogonalized fermionic basis lost rank");
	return out;
}

Scalar sphere_pair(SuperPolynomial const &f, SuperPolynomial const &g)
{
	Scalar r;
	for (auto const &[ma, ca] : f.terms)
		for (auto const &[mb, cb] : g.terms)
		{
			if (ma.ferm || mb.ferm)
				fail(Errc::ModeMismatch, "sphere pairing takes purely bosonic polynomials");
			std::vector<int> e(ma.bos.size());
			for (size_t i = 0; i < e.size(); ++i)
				e[i] = ma.bos[i] + mb.bos[i];
			Scalar mom = sphere_moment((int)e.size(), e);
			if (!mom.is_zero())
				r += ca * cb * mom;
		}
	return r;
}

std::vector<BosonicBasisElement> bosonic_harmonic_basis(int m, int p)
{
	Dims d{m, 0};
	std::vector<BosonicBasisElement> out;
	if (dim_Hb(m, p) == 0)
		return out;
	for (auto const &mon : monomials_of_degree(d, p))
	{
		SuperPolynomial cand(d);
		cand.terms[mon] = Scalar(1);
		SuperPolynomial h = project_h0(cand);
		for (auto const &b : out)
		{
			Scalar c = sphere_pair(h, b.h) / b.normsq;
			if (!c.is_zero())
				h = h - sscale(c, b.h);
		}
		if (h.is_zero())
			continue;
		out.push_back({h, sphere_pair(h, h)});
	}
	if ((long)out.size() != dim_Hb(m, p))
		fail(Errc::DegreeOutOfRange, "bosonic harmonic basis lost rank");
	return out;
}

SuperPolynomial f_kpq(int k, int p, int q, Dims d)
{
	if (q < 0 || q > d.n || k < 0 || k > d.n - q || p < 0)
		fail(Errc::ParamOutOfRange, "f_kpq needs 0 <= q <= n and 0 <= k <= n-q");
	Rat mh = make_rat(d.m, 2);
	SuperPolynomial r(d);
	SuperPolynomial r2d = r2(d), th = stheta2(d);
	for (int s = 0; s <= k; ++s)
	{
		// binom(k,s) (n-q-s)!/(n-q-k)! * Gamma(m/2+p+k)/Gamma(m/2+p+k-s)
		Rat a = Rat(binomial(k, s)) * Rat(factorial(d.n - q - s)) / Rat(factorial(d.n - q - k)) *
		        pochhammer(mh + p + k - s, s);
		SuperPolynomial term = SuperPolynomial::constant(d, Scalar(a));
		for (int i = 0; i < k - s; ++i)
			term = smul(term, r2d);
		for (int i = 0; i < s; ++i)
			term = smul(term, th);
		r = r + term;
	}
	return r;
}

Scalar a_kpq(int k, int p, int q, Dims d)
{
	Rat Mh = make_rat(d.super_dimension(), 2);
	return Scalar(pochhammer(Mh + p + q + k - 1, k));
}

Scalar b_kpq(int k, int p, int q, Dims d)
{
	return Scalar(Rat(factorial(k)) / Rat(factorial(d.n - q - k))) *
	       recip_gamma_half(HalfInteger::halves(4 * k + d.super_dimension() + 2 * (p + q))) *
	       gamma_half(HalfInteger::halves(d.m + 2 * (p + k)));
}

SuperPolynomial HarmonicBlock::assembled() const
{
	return smul(f_kpq(i, p, q, dims), smul(hb, from_grassmann(dims, hf)));
}

SuperPolynomial HarmonicBlock::t_assembled() const
{
	SuperPolynomial r = smul(f_kpq(i, p, q, dims), smul(hb, from_grassmann(dims, tilde(hf))));
	return (i % 2) ? sneg(r) : r;
}

std::vector<HarmonicBlock> super_harmonic_basis(int k, Dims d)
{
	if (bad_super_dimension(d) || d.m < 1)
		fail(Errc::BadDimension, "the decomposition of H_k needs m >= 1 and M not even negative");
	std::vector<HarmonicBlock> out;
	for (int q = 0; q <= std::min(d.n, k); ++q)
	{
		int lmax = std::min(d.n - q, (k - q) / 2);
		for (int l = 0; l <= lmax; ++l)
		{
			int p = k - 2 * l - q;
			if (p < 0 || dim_Hb(d.m, p) == 0)
				continue;
			auto bos = bosonic_harmonic_basis(d.m, p);
			auto fer = fermionic_orthogonal_basis(d.n, q);
			for (auto const &hb : bos)
				for (auto const &hf : fer)
				{
					HarmonicBlock b;
					b.i = l;
					b.p = p;
					b.q = q;
					// bosonic elements live in (m,0); lift to (m,n)
					SuperPolynomial lifted(d);
					for (auto const &[mon, c] : hb.h.terms)
						lifted.terms.emplace(SuperMonomial(mon.bos, 0), c);
					b.hb = lifted;
					b.hf = hf.h;
					b.normsq_b = hb.normsq;
					b.normsq_f = hf.normsq;
					b.dims = d;
					out.push_back(std::move(b));
				}
		}
	}
	if ((long)out.size() != dim_H(d, k))
		fail(Errc::BadDimension, "block count disagrees with dim H_k");
	for (auto const &b : out)
		if (!nabla2(b.assembled()).is_zero())
			fail(Errc::HarmonicityViolated, "assembled block is not harmonic");
	return out;
}

} // namespace superharm
