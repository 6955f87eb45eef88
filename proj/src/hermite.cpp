#include "superharm/hermite.hpp"

namespace superharm {

SuperPolynomial OrthoPoly::eval_at(SuperPolynomial const &x) const
{
	SuperPolynomial r(x.dims, x.mode);
	SuperPolynomial pow = SuperPolynomial::one(x.dims, x.mode);
	for (size_t i = 0; i < c.size(); ++i)
	{
		if (i)
			pow = smul(pow, x);
		if (!c[i].is_zero())
			r = r + sscale(c[i], pow);
	}
	return r;
}

Scalar OrthoPoly::eval_scalar(Scalar const &x) const
{
	Scalar r, pow = Scalar(1);
	for (size_t i = 0; i < c.size(); ++i)
	{
		if (i)
			pow *= x;
		r += c[i] * pow;
	}
	return r;
}

OrthoPoly hermite_1d(int k)
{
	OrthoPoly p;
	p.c.assign(k + 1, Scalar());
	for (int j = 0; 2 * j <= k; ++j)
	{
		Rat c = Rat((j % 2) ? -1 : 1) * rat_pow(Rat(2), k - 2 * j) * Rat(factorial(k)) /
		        (Rat(factorial(k - 2 * j)) * Rat(factorial(j)));
		p.c[k - 2 * j] = Scalar(c);
	}
	p.trim();
	return p;
}

OrthoPoly laguerre(int k, HalfInteger alpha)
{
	OrthoPoly p;
	p.c.assign(k + 1, Scalar());
	for (int j = 0; j <= k; ++j)
	{
		Rat c = pochhammer(alpha.as_rational() + j + 1, k - j) /
		        (Rat(factorial(j)) * Rat(factorial(k - j)));
		if (j % 2)
			c = -c;
		p.c[j] = Scalar(c);
	}
	p.trim();
	return p;
}

OrthoPoly gegenbauer(int k, HalfInteger alpha)
{
	OrthoPoly p;
	p.c.assign(k + 1, Scalar());
	for (int j = 0; 2 * j <= k; ++j)
	{
		Rat c = Rat((j % 2) ? -1 : 1) * pochhammer(alpha.as_rational(), k - j) *
		        rat_pow(Rat(2), k - 2 * j) / (Rat(factorial(j)) * Rat(factorial(k - 2 * j)));
		p.c[k - 2 * j] = Scalar(c);
	}
	p.trim();
	return p;
}

OrthoPoly gegenbauer_renormalized(int k, HalfInteger alpha)
{
	OrthoPoly p;
	if (k == 0)
	{
		p.c = {Scalar(1)};
		return p;
	}
	p.c.assign(k + 1, Scalar());
	Rat a = alpha.as_rational();
	for (int j = 0; 2 * j <= k; ++j)
	{
		// (k+alpha)/alpha (alpha)_{k-j} = (k+alpha)(alpha+1)_{k-j-1}, which
		// stays meaningful at alpha = 0 (k-j >= 1 since 2j <= k, k >= 1)
		Rat c = Rat((j % 2) ? -1 : 1) * (a + k) * pochhammer(a + 1, k - j - 1) *
		        rat_pow(Rat(2), k - 2 * j) / (Rat(factorial(j)) * Rat(factorial(k - 2 * j)));
		p.c[k - 2 * j] = Scalar(c);
	}
	p.trim();
	return p;
}

GaussianWrapped apply_araise(int i, GaussianWrapped const &w)
{
	SuperPolynomial xi = SuperPolynomial::variable(w.poly.dims, i, w.poly.mode);
	GaussianWrapped d = wbderiv(i, w);
	return GaussianWrapped(smul(xi, w.poly) - d.poly, w.gauss_half_power);
}

GaussianWrapped apply_braise(int j, GaussianWrapped const &w)
{
	// 0-based generator j; generator pairs are (2i, 2i+1)
	Dims d = w.poly.dims;
	Scalar half(Rat(1, 2));
	SuperPolynomial xj = SuperPolynomial::generator(d, j, w.poly.mode);
	SuperPolynomial p;
	if (j % 2 == 1) // b^+_{2i} = (x'_{2i} + 2 d_{x'_{2i-1}})/2
		p = sscale(half, smul(xj, w.poly) + sscale(Scalar(2), sfderiv(j - 1, w.poly)));
	else // b^+_{2i-1} = (x'_{2i-1} - 2 d_{x'_{2i}})/2
		p = sscale(half, smul(xj, w.poly) - sscale(Scalar(2), sfderiv(j + 1, w.poly)));
	return GaussianWrapped(p, w.gauss_half_power);
}

GaussianWrapped apply_hamiltonian(GaussianWrapped const &w)
{
	GaussianWrapped lap = wnabla2(w);
	SuperPolynomial p = sscale(Scalar(Rat(-1, 2)), lap.poly) +
	                    sscale(Scalar(Rat(1, 2)), smul(R2(w.poly.dims, w.poly.mode), w.poly));
	return GaussianWrapped(p, w.gauss_half_power);
}

GaussianWrapped apply_lowering(GaussianWrapped const &w, Dims d)
{
	GaussianWrapped lap = wnabla2(w);
	GaussianWrapped eu = weuler(w);
	SuperPolynomial p = lap.poly + smul(R2(d, w.poly.mode), w.poly) + sscale(Scalar(2), eu.poly) +
	                    sscale(Scalar(Rat(d.super_dimension())), w.poly);
	return GaussianWrapped(p, w.gauss_half_power);
}

CartesianBasisFunction cartesian_basis(Dims d, std::vector<int> const &bos_occ,
                                       std::vector<int> const &ferm_occ)
{
	if ((int)bos_occ.size() != d.m || (int)ferm_occ.size() != 2 * d.n)
		fail(Errc::BadOccupation, "occupation length mismatch");
	for (int l : ferm_occ)
		if (l != 0 && l != 1)
			fail(Errc::BadOccupation, "fermionic occupations are 0 or 1");
	for (int k : bos_occ)
		if (k < 0)
			fail(Errc::BadOccupation, "negative occupation");
	GaussianWrapped w = wrap_with_gaussian(SuperPolynomial::one(d));
	for (int j = 2 * d.n - 1; j >= 0; --j)
		if (ferm_occ[j])
			w = apply_braise(j, w);
	for (int i = d.m - 1; i >= 0; --i)
		for (int rep = 0; rep < bos_occ[i]; ++rep)
			w = apply_araise(i, w);
	Scalar norm = Scalar::s_power(d.super_dimension());
	long total = 0;
	for (int k : bos_occ)
	{
		norm *= Scalar(Rat(factorial(k)));
		total += k;
	}
	norm *= Scalar(rat_pow(Rat(2), total));
	return {w, norm, bos_occ, ferm_occ};
}

GaussianWrapped spherical_hermite(int j, SuperPolynomial const &harmonic, Dims d)
{
	int k = 0;
	if (!harmonic.is_homogeneous(&k) || !nabla2(harmonic).is_zero())
		fail(Errc::HarmonicityViolated, "spherical Hermite functions need a harmonic input");
	GaussianWrapped op = wrap_with_gaussian(harmonic);
	for (int i = 0; i < j; ++i)
	{
		GaussianWrapped lap = wnabla2(op);
		GaussianWrapped eu = weuler(op);
		SuperPolynomial p = sneg(lap.poly) - smul(R2(d, op.poly.mode), op.poly) +
		                    sscale(Scalar(2), eu.poly) +
		                    sscale(Scalar(Rat(d.super_dimension())), op.poly);
		op = GaussianWrapped(p, op.gauss_half_power);
	}
	int M = d.super_dimension();
	bool laguerre_ok = d.m == 0 || !(M <= 0 && M % 2 == 0);
	if (laguerre_ok)
	{
		OrthoPoly L = laguerre(j, HalfInteger::halves(M + 2 * k - 2));
		SuperPolynomial radial = L.eval_at(R2(d, harmonic.mode));
		Scalar c = Scalar(rat_pow(Rat(2), 2 * j) * Rat(factorial(j)));
		GaussianWrapped lag = wrap_with_gaussian(sscale(c, smul(radial, harmonic)));
		if (!(lag == op))
			fail(Errc::RouteMismatch, "operator and Laguerre routes disagree");
	}
	return op;
}

Scalar oscillator_check(GaussianWrapped const &phi, Dims d)
{
	if (phi.poly.is_zero())
		fail(Errc::NotEigenfunction, "zero function");
	GaussianWrapped h = apply_hamiltonian(phi);
	auto const &[mon, c] = *phi.poly.terms.begin();
	auto it = h.poly.terms.find(mon);
	if (it == h.poly.terms.end())
		fail(Errc::NotEigenfunction, "not an eigenfunction of the harmonic oscillator");
	Scalar lambda = it->second / c;
	if (!(h.poly == sscale(lambda, phi.poly)))
		fail(Errc::NotEigenfunction, "not an eigenfunction of the harmonic oscillator");
	return lambda;
}

} // namespace superharm
