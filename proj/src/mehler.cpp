#include "superharm/mehler.hpp"
#include <chrono>
#include <sstream>

namespace superharm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GrassmannElement theta2_pow_x(int n, int j)
{
	GrassmannElement r = GrassmannElement::one(n, GrassmannMode::Doubled);
	GrassmannElement t = theta2(n, GrassmannMode::Doubled);
	for (int i = 0; i < j; ++i)
		r = gmul(r, t);
	return r;
}

GrassmannElement theta2_pow_y(int n, int j)
{
	GrassmannElement r = GrassmannElement::one(n, GrassmannMode::Doubled);
	GrassmannElement t = theta2_y(n);
	for (int i = 0; i < j; ++i)
		r = gmul(r, t);
	return r;
}

GrassmannElement pairing_pow(int n, int p)
{
	GrassmannElement r = GrassmannElement::one(n, GrassmannMode::Doubled);
	GrassmannElement b = pairing_xy(n);
	for (int i = 0; i < p; ++i)
		r = gmul(r, b);
	return r;
}

// L^{alpha}_j evaluated on an even Grassmann element
GrassmannElement laguerre_on(GrassmannElement const &x, int j, HalfInteger alpha)
{
	OrthoPoly L = laguerre(j, alpha);
	GrassmannElement r(x.n, x.mode);
	GrassmannElement pow = GrassmannElement::one(x.n, x.mode);
	for (int i = 0; i <= L.degree(); ++i)
	{
		if (i)
			pow = gmul(pow, x);
		r = gadd(r, gscale(L.coeff(i), pow));
	}
	return r;
}

} // namespace

GrassmannElement fermionic_kernel(int n, int k)
{
	if (k < 0 || k > n)
		fail(Errc::DegreeOutOfRange, "fermionic harmonics vanish above degree n");
	GrassmannElement r(n, GrassmannMode::Doubled);
	for (int j = 0; 2 * j <= k; ++j)
	{
		if (n + 1 + j - k < 0)
			continue;
		Rat c = rat_pow(Rat(2), k - 2 * j) * Rat(n + 1 - k) /
		        (Rat(factorial(k - 2 * j)) * Rat(factorial(j)) * Rat(factorial(n + 1 + j - k)));
		GrassmannElement term = gscale(Scalar(c) * Scalar::s_power(2 * n),
		                               gmul(pairing_pow(n, k - 2 * j),
		                                    gmul(theta2_pow_x(n, j), theta2_pow_y(n, j))));
		r = gadd(r, term);
	}
	return r;
}

namespace {

// <F(x',y') | H(y')>_{y'} with left Lambda(x') coefficients
GrassmannElement partial_inner_y(GrassmannElement const &F, GrassmannElement const &H)
{
	int n = F.n;
	FermionicMonomial xmask = (FermionicMonomial(1) << (2 * n)) - 1;
	GrassmannElement r(n, GrassmannMode::Single);
	Scalar scale = Scalar(rat_pow(Rat(2), -n)) * Scalar::s_power(-2 * n);
	for (auto const &[m, c] : F.terms)
	{
		FermionicMonomial ypart = m >> (2 * n);
		auto it = H.terms.find(ypart);
		if (it == H.terms.end())
			continue;
		Scalar v = c * it->second.conj() * Scalar(rat_pow(Rat(2), fdegree(ypart))) * scale;
		r.add_term(m & xmask, v);
	}
	return r;
}

} // namespace

CheckReport kernel_reproduces(int n, int k)
{
	CheckReport rep;
	GrassmannElement F = fermionic_kernel(n, k);
	Scalar c = Scalar(Rat(1) / (rat_pow(Rat(2), n - k) * Rat(factorial(n - k))));
	for (auto const &H : fermionic_harmonic_basis(n, k))
	{
		GrassmannElement lhs = partial_inner_y(F, H);
		GrassmannElement rhs = gscale(c, tilde(H));
		if (!(lhs == rhs))
		{
			rep.pass = false;
			rep.detail = "pairing failed on " + H.to_string();
			return rep;
		}
	}
	// coefficient match with the C^(-n-1) Gegenbauer expansion
	OrthoPoly G = gegenbauer(k, HalfInteger(-n - 1));
	GrassmannElement viaG(n, GrassmannMode::Doubled);
	Rat pre = Rat((k % 2) ? -1 : 1) * Rat(n + 1 - k) / Rat(factorial(n + 1));
	GrassmannElement tt = gmul(theta2(n, GrassmannMode::Doubled), theta2_y(n));
	for (int j = 0; 2 * j <= k; ++j)
	{
		Scalar coeff = G.coeff(k - 2 * j);
		if (coeff.is_zero())
			continue;
		GrassmannElement term =
		    gscale(Scalar(pre) * coeff * Scalar::s_power(2 * n), pairing_pow(n, k - 2 * j));
		for (int i = 0; i < j; ++i)
			term = gmul(term, tt);
		viaG = gadd(viaG, term);
	}
	if (!(viaG == F))
	{
		rep.pass = false;
		rep.detail = "Gegenbauer form disagrees with the kernel constants";
	}
	return rep;
}

SuperPolynomial pairing_super(Dims d)
{
	SuperPolynomial r(d, GrassmannMode::Doubled);
	int nb = 2 * d.m;
	for (int i = 0; i < d.m; ++i)
	{
		std::vector<int> e(nb, 0);
		e[i] = 1;
		e[d.m + i] = 1;
		r.add_term(SuperMonomial(std::move(e), 0), Scalar(1));
	}
	Rat half(1, 2);
	for (int j = 0; j < d.n; ++j)
	{
		FermionicMonomial xo = FermionicMonomial(1) << (2 * j);
		FermionicMonomial xe = FermionicMonomial(1) << (2 * j + 1);
		FermionicMonomial yo = FermionicMonomial(1) << (2 * d.n + 2 * j);
		FermionicMonomial ye = FermionicMonomial(1) << (2 * d.n + 2 * j + 1);
		r.add_term(SuperMonomial(std::vector<int>(nb, 0), xo | ye), Scalar(-half));
		r.add_term(SuperMonomial(std::vector<int>(nb, 0), xe | yo), Scalar(half));
	}
	return r;
}

SuperPolynomial R2_x(Dims d) { return R2(d, GrassmannMode::Doubled); }

SuperPolynomial R2_y(Dims d)
{
	SuperPolynomial r(d, GrassmannMode::Doubled);
	int nb = 2 * d.m;
	for (int i = 0; i < d.m; ++i)
	{
		std::vector<int> e(nb, 0);
		e[d.m + i] = 2;
		r.add_term(SuperMonomial(std::move(e), 0), Scalar(1));
	}
	for (int j = 0; j < d.n; ++j)
		r.add_term(SuperMonomial(std::vector<int>(nb, 0), FermionicMonomial(3) << (2 * d.n + 2 * j)),
		           Scalar(-1));
	return r;
}

SuperPolynomial embed_poly_x(SuperPolynomial const &p)
{
	SuperPolynomial r(p.dims, GrassmannMode::Doubled);
	int nb = 2 * p.dims.m;
	for (auto const &[m, c] : p.terms)
	{
		std::vector<int> e(nb, 0);
		for (int i = 0; i < p.dims.m; ++i)
			e[i] = m.bos[i];
		r.terms.emplace(SuperMonomial(std::move(e), m.ferm), c);
	}
	return r;
}

SuperPolynomial embed_poly_y(SuperPolynomial const &p)
{
	SuperPolynomial r(p.dims, GrassmannMode::Doubled);
	int nb = 2 * p.dims.m;
	for (auto const &[m, c] : p.terms)
	{
		std::vector<int> e(nb, 0);
		for (int i = 0; i < p.dims.m; ++i)
			e[p.dims.m + i] = m.bos[i];
		r.terms.emplace(SuperMonomial(std::move(e), m.ferm << (2 * p.dims.n)), c);
	}
	return r;
}

SuperPolynomial strip_to_y(SuperPolynomial const &p)
{
	SuperPolynomial r(p.dims, GrassmannMode::Single);
	FermionicMonomial xmask = (FermionicMonomial(1) << (2 * p.dims.n)) - 1;
	for (auto const &[m, c] : p.terms)
	{
		if (m.ferm & xmask)
			fail(Errc::ModeMismatch, "x-content in strip_to_y");
		std::vector<int> e(p.dims.m, 0);
		for (int i = 0; i < p.dims.m; ++i)
		{
			if (m.bos[i])
				fail(Errc::ModeMismatch, "x-content in strip_to_y");
			e[i] = m.bos[p.dims.m + i];
		}
		r.terms.emplace(SuperMonomial(std::move(e), m.ferm >> (2 * p.dims.n)), c);
	}
	return r;
}

SuperPolynomial partial_pizzetti_x(SuperPolynomial const &f)
{
	if (f.mode != GrassmannMode::Doubled)
		fail(Errc::ModeMismatch, "partial_pizzetti_x needs doubled mode");
	Dims d = f.dims;
	int M = d.super_dimension();
	SuperPolynomial r(d, GrassmannMode::Doubled);
	FermionicMonomial xmask = (FermionicMonomial(1) << (2 * d.n)) - 1;
	for (auto const &[mon, c] : f.terms)
	{
		// contraction weight of the x-part
		int bdeg = 0;
		bool beven = true;
		for (int i = 0; i < d.m; ++i)
		{
			bdeg += mon.bos[i];
			if (mon.bos[i] % 2)
				beven = false;
		}
		FermionicMonomial xf = mon.ferm & xmask;
		int fdeg = fdegree(xf);
		if (!beven || fdeg % 2 || (bdeg + fdeg) % 2)
			continue;
		bool pairs_ok = true;
		for (int p = 0; p < d.n && pairs_ok; ++p)
		{
			FermionicMonomial pair = FermionicMonomial(3) << (2 * p);
			FermionicMonomial got = xf & pair;
			if (got != 0 && got != pair)
				pairs_ok = false;
		}
		if (!pairs_ok)
			continue;
		long kappa = (bdeg + fdeg) / 2, jb = bdeg / 2, jf = fdeg / 2;
		Rat bos = Rat(factorial(jb));
		for (int i = 0; i < d.m; ++i)
			bos *= Rat(factorial(mon.bos[i])) / Rat(factorial(mon.bos[i] / 2));
		Rat ferm = rat_pow(Rat(4), jf) * Rat(factorial(jf));
		Scalar w = Scalar(Rat(2) * Rat(binomial(kappa, jb)) * bos * ferm /
		                  (rat_pow(Rat(4), kappa) * Rat(factorial(kappa)))) *
		           Scalar::s_power(M) * recip_gamma_half(HalfInteger::halves(2 * kappa + M));
		if (w.is_zero())
			continue;
		// the y-part keeps its sign: x-generators precede y-generators, and
		// the x-part is removed as a whole from the front
		SuperMonomial ym = mon;
		for (int i = 0; i < d.m; ++i)
			ym.bos[i] = 0;
		ym.ferm = mon.ferm & ~xmask;
		r.add_term(ym, c * w);
	}
	return r;
}

SuperPolynomial super_kernel(int k, Dims d)
{
	int M = d.super_dimension();
	if (M <= 0)
		fail(Errc::BadDimension, "the reproducing kernel of H_k needs M > 0");
	OrthoPoly RG = gegenbauer_renormalized(k, HalfInteger::halves(M - 2));
	Scalar pre = Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(M)) * Scalar::s_power(-M);
	SuperPolynomial r(d, GrassmannMode::Doubled);
	SuperPolynomial P = pairing_super(d), RR = smul(R2_x(d), R2_y(d));
	for (int i = 0; 2 * i <= k; ++i)
	{
		Scalar c = pre * RG.coeff(k - 2 * i);
		if (c.is_zero())
			continue;
		SuperPolynomial term = SuperPolynomial::constant(d, c, GrassmannMode::Doubled);
		for (int a = 0; a < k - 2 * i; ++a)
			term = smul(term, P);
		for (int a = 0; a < i; ++a)
			term = smul(term, RR);
		r = r + term;
	}
	return r;
}

CheckReport super_kernel_check(int k, Dims d)
{
	CheckReport rep;
	int M = d.super_dimension();
	// (a) reproduction under the supersphere integral in x, with the
	// non-homogenized Gegenbauer kernel, mod (R_y^2 - 1)
	OrthoPoly RG = gegenbauer_renormalized(k, HalfInteger::halves(M - 2));
	Scalar pre = Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(M)) * Scalar::s_power(-M);
	SuperPolynomial G(d, GrassmannMode::Doubled);
	SuperPolynomial P = pairing_super(d);
	for (int i = 0; i <= RG.degree(); ++i)
	{
		Scalar c = pre * RG.coeff(i);
		if (c.is_zero())
			continue;
		SuperPolynomial term = SuperPolynomial::constant(d, c, GrassmannMode::Doubled);
		for (int a = 0; a < i; ++a)
			term = smul(term, P);
		G = G + term;
	}
	for (int l = 0; l <= k + 2; ++l)
	{
		for (auto const &B : super_harmonic_basis(l, d))
		{
			SuperPolynomial H = B.assembled();
			SuperPolynomial got = strip_to_y(partial_pizzetti_x(smul(embed_poly_x(H), G)));
			SuperPolynomial reduced = fischer_reduce_mod_sphere(got);
			SuperPolynomial expect =
			    (l == k) ? fischer_reduce_mod_sphere(H) : SuperPolynomial(d, GrassmannMode::Single);
			if (!(reduced == expect))
			{
				rep.pass = false;
				rep.detail = "reproduction failed at l=" + std::to_string(l);
				return rep;
			}
		}
	}
	// (b) basis sum: sum_l T(H^l)(x) H^l(y) / nu_l equals the homogenized kernel
	SuperPolynomial sum(d, GrassmannMode::Doubled);
	for (auto const &B : super_harmonic_basis(k, d))
	{
		SuperPolynomial a = B.assembled(), t = B.t_assembled();
		Scalar nu = pizzetti_of_product(a, t);
		sum = sum + sscale(nu.inverse(), smul(embed_poly_x(t), embed_poly_y(a)));
	}
	if (!(sum == super_kernel(k, d)))
	{
		rep.pass = false;
		rep.detail = "basis sum disagrees with the Gegenbauer kernel";
	}
	return rep;
}

std::string MehlerReport::to_json() const
{
	std::ostringstream os;
	os << "{\"identity\":\"" << identity << "\",\"m\":" << m << ",\"n\":" << n
	   << ",\"degree\":" << degree << ",\"equal\":" << (equal ? "true" : "false") << ",\"first_diff\":";
	if (first_diff.empty())
		os << "null";
	else
		os << "\"" << first_diff << "\"";
	os << ",\"wall_time\":" << wall_time << "}";
	return os.str();
}

MehlerReport mehler_fermionic_verify(int n)
{
	auto t0 = std::chrono::steady_clock::now();
	MehlerReport rep;
	rep.identity = "mehler-fermionic";
	rep.n = n;
	GrassmannElement lhs(n, GrassmannMode::Doubled);
	GrassmannElement tx = theta2(n, GrassmannMode::Doubled), ty = theta2_y(n);
	for (int k = 0; k <= n; ++k)
	{
		GrassmannElement F = fermionic_kernel(n, k);
		for (int j = 0; j + k <= n; ++j)
		{
			HalfInteger alpha(k - n - 1);
			GrassmannElement term = gmul(laguerre_on(tx, j, alpha),
			                             gmul(laguerre_on(ty, j, alpha), F));
			Scalar c = Scalar(Rat((j % 2) ? -1 : 1) * Rat(factorial(j)) * Rat(factorial(n - k - j))) *
			           Scalar::t_power(2 * j + k);
			lhs = gadd(lhs, gscale(c, term));
		}
	}
	// (pi (1 - t^2))^n exp((2t<x',y'> - t^2(theta^2 + theta_y^2))/(1 - t^2))
	TPoly one(Rat(1));
	TPoly omt2 = one - TPoly::t(2);
	Scalar inv = Scalar(TRat(one, omt2));
	GrassmannElement arg = gscale(Scalar(Rat(2)) * Scalar::t() * inv, pairing_xy(n));
	arg = gadd(arg, gscale(-Scalar::t_power(2) * inv, gadd(tx, ty)));
	// (pi(1-t^2))^n as the n-th power of a single factor
	Scalar factor = Scalar(TRat(omt2, one)) * Scalar::s_power(2);
	Scalar prefactor(Rat(1));
	for (int i = 0; i < n; ++i)
		prefactor *= factor;
	GrassmannElement rhs = gscale(prefactor, gexp(arg));
	GrassmannElement diff = lhs - rhs;
	rep.equal = diff.is_zero();
	if (!rep.equal)
		rep.first_diff = diff.to_string().substr(0, 200);
	rep.wall_time = seconds_since(t0);
	return rep;
}

namespace {

// Gaussian rationals for the alpha = +-pi/2 point
struct GaussRat {
	Rat re, im;
	bool is_zero() const { return re == 0 && im == 0; }
	friend GaussRat operator+(GaussRat const &a, GaussRat const &b) { return {a.re + b.re, a.im + b.im}; }
	friend GaussRat operator*(GaussRat const &a, GaussRat const &b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	friend GaussRat operator*(Rat const &a, GaussRat const &b) { return {a * b.re, a * b.im}; }
	friend bool operator==(GaussRat const &a, GaussRat const &b) = default;
};

using GaussElement = std::map<FermionicMonomial, GaussRat>;

void gr_add_term(GaussElement &e, FermionicMonomial m, GaussRat const &c)
{
	if (c.is_zero())
		return;
	auto it = e.find(m);
	if (it == e.end())
		e.emplace(m, c);
	else
	{
		it->second = it->second + c;
		if (it->second.is_zero())
			e.erase(it);
	}
}

GaussElement gr_mul(GaussElement const &a, GaussElement const &b)
{
	GaussElement r;
	for (auto const &[ma, ca] : a)
		for (auto const &[mb, cb] : b)
		{
			int s = merge_sign(ma, mb);
			if (s == 0)
				continue;
			GaussRat c = ca * cb;
			if (s < 0)
				c = Rat(-1) * c;
			gr_add_term(r, ma | mb, c);
		}
	return r;
}

GaussElement gr_scale(GaussRat const &c, GaussElement const &a)
{
	GaussElement r;
	for (auto const &[m, x] : a)
		gr_add_term(r, m, c * x);
	return r;
}

// rational part of a Grassmann element whose scalars carry a fixed s-power
GaussElement gr_from(GrassmannElement const &g, int expected_s)
{
	GaussElement r;
	for (auto const &[m, c] : g.terms)
	{
		if (!c.is_monomial())
			fail(Errc::ParamOutOfRange, "unexpected scalar shape");
		auto const &[e, v] = *c.terms.begin();
		if (e != expected_s || !v.is_rational())
			fail(Errc::ParamOutOfRange, "unexpected scalar shape");
		r.emplace(m, GaussRat{v.as_rational(), Rat(0)});
	}
	return r;
}

GaussElement gr_exp(GaussElement const &a, int gens)
{
	GaussElement r{{0, GaussRat{Rat(1), Rat(0)}}};
	GaussElement pow = r;
	for (int i = 1; i <= gens; ++i)
	{
		pow = gr_mul(pow, a);
		if (pow.empty())
			break;
		GaussElement term = gr_scale(GaussRat{Rat(1) / Rat(factorial(i)), Rat(0)}, pow);
		for (auto const &[m, c] : term)
			gr_add_term(r, m, c);
	}
	return r;
}

} // namespace

MehlerReport mehler_fourier_point(int n, int sign)
{
	auto t0 = std::chrono::steady_clock::now();
	MehlerReport rep;
	rep.identity = sign > 0 ? "mehler-fermionic-fourier+" : "mehler-fermionic-fourier-";
	rep.n = n;
	// sum_{j,k} j!(n-k-j)! L_j(theta^2) (+-i)^k L_j(theta_y^2) F_k/pi^n
	//   * exp(-(theta^2+theta_y^2)/2) = 2^n exp(+-i <x',y'>)
	GrassmannElement tx = theta2(n, GrassmannMode::Doubled), ty = theta2_y(n);
	GaussElement lhs;
	for (int k = 0; k <= n; ++k)
	{
		GaussElement F = gr_from(fermionic_kernel(n, k), 2 * n); // divides out pi^n
		GaussRat ipow{Rat(1), Rat(0)};
		for (int i = 0; i < k; ++i)
			ipow = ipow * GaussRat{Rat(0), Rat(sign)};
		for (int j = 0; j + k <= n; ++j)
		{
			HalfInteger alpha(k - n - 1);
			GaussElement term = gr_mul(gr_from(laguerre_on(tx, j, alpha), 0),
			                           gr_mul(gr_from(laguerre_on(ty, j, alpha), 0), F));
			GaussRat c = GaussRat{Rat(factorial(j)) * Rat(factorial(n - k - j)), Rat(0)} * ipow;
			for (auto const &[m, v] : gr_scale(c, term))
				gr_add_term(lhs, m, v);
		}
	}
	GrassmannElement gaussians = gexp(gscale(Scalar(Rat(-1, 2)), gadd(tx, ty)));
	lhs = gr_mul(lhs, gr_from(gaussians, 0));
	GaussElement rhs = gr_exp(gr_scale(GaussRat{Rat(0), Rat(sign)}, gr_from(pairing_xy(n), 0)), 4 * n);
	rhs = gr_scale(GaussRat{rat_pow(Rat(2), n), Rat(0)}, rhs);
	rep.equal = (lhs == rhs);
	if (!rep.equal)
		rep.first_diff = "gaussian-integer expansion mismatch";
	rep.wall_time = seconds_since(t0);
	return rep;
}

namespace {

SuperPolynomial truncate_poly(SuperPolynomial const &p, int max_degree, int t_order)
{
	SuperPolynomial r(p.dims, p.mode);
	for (auto const &[m, c] : p.terms)
	{
		if (m.degree() > max_degree)
			continue;
		Scalar ct = c.truncate_t(t_order);
		if (!ct.is_zero())
			r.terms.emplace(m, ct);
	}
	return r;
}

SuperPolynomial mul_trunc(SuperPolynomial const &a, SuperPolynomial const &b, int max_degree, int t_order)
{
	return truncate_poly(smul(a, b), max_degree, t_order);
}

// shared truncated two-sided expansion: identity in the variables of `core`
// (either true doubled superspace variables or the abstract a^2, b^2, c)
struct MehlerCore {
	SuperPolynomial pairing; // <x,y>
	SuperPolynomial r2x, r2y;
	int M;
	int Dvar;    // variable-degree bound
	int Norder;  // t-order bound
	int kmax;    // harmonic degrees contributing
	// homogenized kernel for degree k
	std::function<SuperPolynomial(int)> kernel;
};

bool mehler_truncated_equal(MehlerCore const &core, std::string &diff)
{
	Dims d = core.pairing.dims;
	GrassmannMode mode = core.pairing.mode;
	SuperPolynomial lhs(d, mode);
	for (int k = 0; k <= core.kmax; ++k)
	{
		SuperPolynomial F = truncate_poly(core.kernel(k), core.Dvar, core.Norder);
		if (F.is_zero())
			continue;
		for (int j = 0; 2 * j + k <= core.Norder; ++j)
		{
			HalfInteger alpha = HalfInteger::halves(core.M + 2 * k - 2);
			OrthoPoly L = laguerre(j, alpha);
			SuperPolynomial Lx = truncate_poly(L.eval_at(core.r2x), core.Dvar, core.Norder);
			SuperPolynomial Ly = truncate_poly(L.eval_at(core.r2y), core.Dvar, core.Norder);
			Scalar c = Scalar(Rat(2) * Rat(factorial(j))) *
			           recip_gamma_half(HalfInteger::halves(core.M + 2 * (j + k))) *
			           Scalar::t_power(2 * j + k);
			SuperPolynomial term = mul_trunc(mul_trunc(Lx, Ly, core.Dvar, core.Norder), F,
			                                 core.Dvar, core.Norder);
			lhs = lhs + sscale(c, term);
		}
	}
	lhs = truncate_poly(lhs, core.Dvar, core.Norder);
	// RHS: (pi(1-t^2))^{-M/2} exp((2t<x,y> - t^2(R^2+R_y^2))/(1-t^2))
	// with (1-t^2)^{-M/2} = sum (M/2)_i/i! t^{2i} and 1/(1-t^2) the geometric
	// series, all truncated at the t-order
	Scalar geom;
	for (int i = 0; 2 * i <= core.Norder; ++i)
		geom += Scalar::t_power(2 * i);
	Scalar binom;
	for (int i = 0; 2 * i <= core.Norder; ++i)
		binom += Scalar(pochhammer(make_rat(core.M, 2), i) / Rat(factorial(i))) * Scalar::t_power(2 * i);
	SuperPolynomial arg =
	    sscale(Scalar(Rat(2)) * Scalar::t() * geom, core.pairing) -
	    sscale(Scalar::t_power(2) * geom, core.r2x + core.r2y);
	arg = truncate_poly(arg, core.Dvar, core.Norder);
	SuperPolynomial rhs = SuperPolynomial::constant(d, binom * Scalar::s_power(-core.M), mode);
	SuperPolynomial pow = SuperPolynomial::one(d, mode);
	SuperPolynomial acc = pow;
	// arg has no constant term, so Dvar powers always suffice
	for (long p = 1; p <= core.Dvar; ++p)
	{
		pow = mul_trunc(pow, arg, core.Dvar, core.Norder);
		if (pow.is_zero())
			break;
		acc = acc + sscale(Scalar(Rat(1) / Rat(factorial(p))), pow);
	}
	rhs = mul_trunc(rhs, acc, core.Dvar, core.Norder);
	SuperPolynomial dd = lhs - rhs;
	if (dd.is_zero())
		return true;
	diff = dd.terms.begin()->first.degree() == 0 ? "constant term" : "";
	auto const &[m, c] = *dd.terms.begin();
	diff = "first differing coefficient at degree " + std::to_string(m.degree());
	return false;
}

} // namespace

MehlerReport mehler_super_verify(Dims d, int D)
{
	auto t0 = std::chrono::steady_clock::now();
	MehlerReport rep;
	rep.identity = "mehler-super";
	rep.m = d.m;
	rep.n = d.n;
	rep.degree = D;
	if (d.super_dimension() <= 0)
		fail(Errc::BadDimension, "the super Mehler identity needs M > 0");
	MehlerCore core;
	core.pairing = pairing_super(d);
	core.r2x = R2_x(d);
	core.r2y = R2_y(d);
	core.M = d.super_dimension();
	core.Dvar = D;
	core.Norder = 2 * (D / 2) + 2;
	core.kmax = std::min(D / 2, core.Norder);
	core.kernel = [d](int k) { return super_kernel(k, d); };
	rep.equal = mehler_truncated_equal(core, rep.first_diff);
	rep.wall_time = seconds_since(t0);
	return rep;
}

MehlerReport mehler_classical_abc(int m, int D)
{
	auto t0 = std::chrono::steady_clock::now();
	MehlerReport rep;
	rep.identity = "mehler-classical-abc";
	rep.m = m;
	rep.degree = D;
	// three commuting scalars A = a^2, B = b^2, C = c, each of weight two
	Dims d3{3, 0};
	auto A = SuperPolynomial::variable(d3, 0);
	auto B = SuperPolynomial::variable(d3, 1);
	auto C = SuperPolynomial::variable(d3, 2);
	MehlerCore core;
	core.pairing = C;
	core.r2x = A;
	core.r2y = B;
	core.M = m;
	core.Dvar = D / 2;
	core.Norder = 2 * (D / 2) + 2;
	core.kmax = core.Dvar;
	core.kernel = [&, m](int k) {
		// (ab)^k G_k(c/(ab)) = pre sum_i RG_{k-2i} C^{k-2i} (AB)^i
		OrthoPoly RG = gegenbauer_renormalized(k, HalfInteger::halves(m - 2));
		Scalar pre = Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(m)) * Scalar::s_power(-m);
		SuperPolynomial r(d3);
		for (int i = 0; 2 * i <= k; ++i)
		{
			Scalar c = pre * RG.coeff(k - 2 * i);
			if (c.is_zero())
				continue;
			SuperPolynomial term = SuperPolynomial::constant(d3, c);
			for (int a = 0; a < k - 2 * i; ++a)
				term = smul(term, C);
			for (int a = 0; a < i; ++a)
				term = smul(term, smul(A, B));
			r = r + term;
		}
		return r;
	};
	rep.equal = mehler_truncated_equal(core, rep.first_diff);
	rep.wall_time = seconds_since(t0);
	return rep;
}

FracFourierResult frac_fourier_eigencheck(Dims d, int degree)
{
	FracFourierResult res;
	int M = d.super_dimension();
	for (int k = 0; k <= degree; ++k)
		for (auto const &B : super_harmonic_basis(k, d))
		{
			for (int j = 0; 2 * j + k <= degree; ++j)
			{
				EigenCheck ec;
				ec.j = j;
				ec.k = k;
				ec.eigenvalue = Scalar::t_power(2 * j + k);
				// the eigenvalue exponent is the oscillator excitation
				StructuredElement phi = structured_spherical_hermite(j, B);
				Scalar energy = oscillator_check(phi.to_wrapped(), d);
				ec.energy_consistent =
				    energy == Scalar(make_rat(M, 2)) + Scalar(Rat(2 * j + k));
				// F^alpha after F^alpha equals F at doubled angle: t -> t^2
				Scalar twice = ec.eigenvalue * ec.eigenvalue;
				Scalar doubled;
				doubled.terms[0] = TRat(TPoly::t(2 * (2 * j + k)), TPoly(Rat(1)));
				ec.composition_consistent = (twice == doubled) || (2 * j + k == 0 && twice == Scalar(1));
				// F^0 is the identity
				if (!(specialize_t(ec.eigenvalue, Rat(1)) == Scalar(1)))
					ec.composition_consistent = false;
				if (!ec.energy_consistent || !ec.composition_consistent)
					res.pass = false;
				res.checks.push_back(std::move(ec));
			}
			break; // one block per degree suffices for the eigenvalue table
		}
	return res;
}

} // namespace superharm
