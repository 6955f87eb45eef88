#include "superharm/integration.hpp"

namespace superharm {

namespace {

// full contraction (nabla^{2k} monomial)(0) with 2k = degree; zero unless the
// bosonic exponents are all even and the fermionic part is a union of
// complete generator pairs
Scalar monomial_contraction_weight(SuperMonomial const &mon, int n_pairs, int M)
{
	int bdeg = mon.bdegree();
	int fdeg = fdegree(mon.ferm);
	int d = bdeg + fdeg;
	if (d % 2)
		return Scalar();
	if (bdeg % 2 || fdeg % 2)
		return Scalar();
	long kappa = d / 2, jb = bdeg / 2, jf = fdeg / 2;
	// bosonic: (nabla_b^{2jb} x^a)(0) = jb! prod a_i! / (a_i/2)!
	Rat bos = Rat(factorial(jb));
	for (int e : mon.bos)
	{
		if (e % 2)
			return Scalar();
		bos *= Rat(factorial(e)) / Rat(factorial(e / 2));
	}
	// fermionic: (nabla_f^{2jf} x'_F)(0) = 4^jf jf! for F a union of pairs
	for (int p = 0; p < n_pairs; ++p)
	{
		FermionicMonomial pair = FermionicMonomial(3) << (2 * p);
		FermionicMonomial got = mon.ferm & pair;
		if (got != 0 && got != pair)
			return Scalar();
	}
	Rat ferm = rat_pow(Rat(4), jf) * Rat(factorial(jf));
	// (nabla_b^2+nabla_f^2)^kappa splits binomially
	Rat weight = Rat(binomial(kappa, jb)) * bos * ferm;
	// Pizzetti coefficient 2 pi^{M/2} / (4^kappa kappa! Gamma(kappa+M/2))
	Scalar coeff = Scalar(Rat(2) * weight / (rat_pow(Rat(4), kappa) * Rat(factorial(kappa)))) *
	               Scalar::s_power(M) * recip_gamma_half(HalfInteger::halves(2 * kappa + M));
	return coeff;
}

} // namespace

Scalar sphere_moment(int m, std::vector<int> const &exponents)
{
	if (m < 1)
		fail(Errc::BadDimension, "sphere moment needs m >= 1");
	if ((int)exponents.size() != m)
		fail(Errc::IndexOutOfRange, "exponent count mismatch");
	int total = 0;
	for (int e : exponents)
	{
		if (e % 2)
			return Scalar();
		total += e;
	}
	Scalar r = Scalar(Rat(2));
	for (int e : exponents)
		r *= gamma_half(HalfInteger::halves(e + 1));
	return r * recip_gamma_half(HalfInteger::halves(total + m));
}

Scalar gaussian_moment_b(int m, std::vector<int> const &exponents)
{
	if ((int)exponents.size() != m)
		fail(Errc::IndexOutOfRange, "exponent count mismatch");
	Scalar r = Scalar(Rat(1));
	for (int e : exponents)
	{
		if (e % 2)
			return Scalar();
		r *= gamma_half(HalfInteger::halves(e + 1));
	}
	return r;
}

Scalar pizzetti(SuperPolynomial const &f)
{
	if (f.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "pizzetti needs single mode");
	int M = f.dims.super_dimension();
	Scalar r;
	for (auto const &[mon, c] : f.terms)
		r += c * monomial_contraction_weight(mon, f.dims.n, M);
	return r;
}

Scalar pizzetti_of_product(SuperPolynomial const &f, SuperPolynomial const &g)
{
	if (!(f.dims == g.dims) || f.mode != g.mode || f.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "pizzetti_of_product ring mismatch");
	int M = f.dims.super_dimension();
	int nb = f.dims.m;
	Scalar r;
	SuperMonomial prod;
	prod.bos.resize(nb);
	for (auto const &[ma, ca] : f.terms)
		for (auto const &[mb, cb] : g.terms)
		{
			int s = merge_sign(ma.ferm, mb.ferm);
			if (s == 0)
				continue;
			bool even = true;
			for (int i = 0; i < nb; ++i)
			{
				prod.bos[i] = ma.bos[i] + mb.bos[i];
				if (prod.bos[i] % 2)
					even = false;
			}
			if (!even)
				continue;
			prod.ferm = ma.ferm | mb.ferm;
			Scalar w = monomial_contraction_weight(prod, f.dims.n, M);
			if (w.is_zero())
				continue;
			Scalar c = ca * cb * w;
			r += (s < 0) ? -c : c;
		}
	return r;
}

Scalar supersphere_alt_raw(SuperPolynomial const &f)
{
	if (f.mode != GrassmannMode::Single)
		fail(Errc::ModeMismatch, "supersphere_alt needs single mode");
	int m = f.dims.m, n = f.dims.n;
	if (m < 1)
		fail(Errc::BadDimension, "the radial form of the supersphere integral needs m >= 1");
	// precompute theta^{2j} as Grassmann elements
	std::vector<GrassmannElement> theta_pow(n + 1);
	theta_pow[0] = GrassmannElement::one(n);
	GrassmannElement th = theta2(n);
	for (int j = 1; j <= n; ++j)
		theta_pow[j] = gmul(theta_pow[j - 1], th);
	Scalar r;
	for (auto const &[mon, c] : f.terms)
	{
		Scalar smom = sphere_moment(m, mon.bos);
		if (smom.is_zero())
			continue;
		// radial factor r^{m-2+|a|}: (d/dr^2)^j at r=1 is a falling factorial
		Rat expo = make_rat(m - 2 + mon.bdegree(), 2);
		GrassmannElement fm(n);
		fm.terms.emplace(mon.ferm, Scalar(1));
		for (int j = 0; j <= n; ++j)
		{
			GrassmannElement prod = gmul(theta_pow[j], fm);
			Scalar bz = berezin(prod);
			if (bz.is_zero())
				continue;
			Rat radial = falling_factorial(expo, j);
			Rat sign = (j % 2) ? Rat(-1) : Rat(1);
			r += c * smom * bz * Scalar(sign * radial / Rat(factorial(j)));
		}
	}
	return r;
}

Scalar supersphere_alt(SuperPolynomial const &f)
{
	Scalar alt = supersphere_alt_raw(f);
	Scalar piz = pizzetti(f);
	if (!(alt == piz))
		fail(Errc::MismatchAgainstPizzetti, "supersphere forms disagree");
	return alt;
}

Scalar gaussian_super(SuperPolynomial const &f)
{
	int M = f.dims.super_dimension();
	Scalar r;
	for (int d = 0; d <= f.degree(); ++d)
	{
		SuperPolynomial comp = homogeneous_component(f, d);
		if (comp.is_zero())
			continue;
		Scalar piz = pizzetti(comp);
		if (piz.is_zero())
			continue;
		HalfInteger arg = HalfInteger::halves(d + M);
		if (arg.is_gamma_pole())
			fail(Errc::GammaPole, "Gamma((k+M)/2) pole on a component with nonzero supersphere integral");
		r += Scalar(Rat(1, 2)) * gamma_half(arg) * piz;
	}
	return r;
}

} // namespace superharm
