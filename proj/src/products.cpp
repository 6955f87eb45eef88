#include "superharm/products.hpp"
#include <atomic>
#include <sstream>
#include <thread>

namespace superharm {

namespace {

// split [0, count) over a small pool; entries are pure computations
void parallel_for(size_t count, std::function<void(size_t)> const &body)
{
	size_t workers = std::max(1u, std::thread::hardware_concurrency());
	if (workers <= 1 || count < 2)
	{
		for (size_t i = 0; i < count; ++i)
			body(i);
		return;
	}
	std::atomic<size_t> next{0};
	std::vector<std::thread> pool;
	for (size_t w = 0; w < std::min(workers, count); ++w)
		pool.emplace_back([&] {
			for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
				body(i);
		});
	for (auto &t : pool)
		t.join();
}

} // namespace

Scalar inner1(GaussianWrapped const &f, GaussianWrapped const &g)
{
	if (!(f.poly.dims == g.poly.dims) || f.poly.mode != g.poly.mode)
		fail(Errc::ModeMismatch, "inner1 ring mismatch");
	if (f.gauss_half_power + g.gauss_half_power != 2)
		fail(Errc::GaussianPowerMismatch, "inner1 needs the implicit Gaussians to combine to exp(-r^2)");
	SuperPolynomial sg = star_fermionic(conj_coefficients(g.poly));
	int n = f.poly.dims.n, m = f.poly.dims.m;
	FermionicMonomial top = (FermionicMonomial(1) << (2 * n)) - 1;
	Scalar r;
	std::vector<int> e(m);
	for (auto const &[ma, ca] : f.poly.terms)
		for (auto const &[mb, cb] : sg.terms)
		{
			if ((ma.ferm | mb.ferm) != top || (ma.ferm & mb.ferm))
				continue;
			bool even = true;
			for (int i = 0; i < m; ++i)
			{
				e[i] = ma.bos[i] + mb.bos[i];
				if (e[i] % 2)
					even = false;
			}
			if (!even)
				continue;
			int s = merge_sign(ma.ferm, mb.ferm);
			Scalar c = ca * cb * gaussian_moment_b(m, e);
			r += (s < 0) ? -c : c;
		}
	return r * Scalar::s_power(-2 * n);
}

GaussianWrapped StructuredElement::to_wrapped() const
{
	SuperPolynomial p(dims);
	SuperPolynomial R2d = R2(dims);
	for (auto const &c : comps)
	{
		SuperPolynomial term = c.h;
		for (int i = 0; i < c.radial_power; ++i)
			term = smul(term, R2d);
		p = p + term;
	}
	return wrap_with_gaussian(p);
}

StructuredElement T_map(StructuredElement const &e)
{
	StructuredElement r = e;
	for (auto &c : r.comps)
		std::swap(c.h, c.th);
	return r;
}

StructuredElement structured_block(HarmonicBlock const &B, int radial_power)
{
	StructuredElement e;
	e.dims = B.dims;
	e.comps.push_back({radial_power, B.assembled(), B.t_assembled()});
	return e;
}

StructuredElement structured_spherical_hermite(int j, HarmonicBlock const &B)
{
	Dims d = B.dims;
	int k = B.degree();
	OrthoPoly L = laguerre(j, HalfInteger::halves(d.super_dimension() + 2 * k - 2));
	Scalar pre = Scalar(rat_pow(Rat(2), 2 * j) * Rat(factorial(j)));
	StructuredElement e;
	e.dims = d;
	SuperPolynomial hb = B.assembled(), tb = B.t_assembled();
	for (int i = 0; i <= L.degree(); ++i)
	{
		Scalar c = pre * L.coeff(i);
		if (c.is_zero())
			continue;
		e.comps.push_back({i, sscale(c, hb), sscale(c, tb)});
	}
	return e;
}

StructuredElement structure_raw(SuperPolynomial const &p)
{
	Dims d = p.dims;
	StructuredElement e;
	e.dims = d;
	for (int deg = 0; deg <= p.degree(); ++deg)
	{
		SuperPolynomial comp = homogeneous_component(p, deg);
		if (comp.is_zero())
			continue;
		for (auto const &[j, h] : fischer_decompose(comp).components)
		{
			// project the harmonic part onto the block basis by the Pizzetti
			// pairing against T(blocks)
			int k = deg - 2 * j;
			SuperPolynomial rest = h;
			SuperPolynomial hsum(d);
			SuperPolynomial tsum(d);
			for (auto const &B : super_harmonic_basis(k, d))
			{
				SuperPolynomial tb = B.t_assembled();
				Scalar num = pizzetti_of_product(h, tb);
				if (num.is_zero())
					continue;
				SuperPolynomial ab = B.assembled();
				Scalar c = num / pizzetti_of_product(ab, tb);
				hsum = hsum + sscale(c, ab);
				tsum = tsum + sscale(c, tb);
			}
			if (!(hsum == h))
				fail(Errc::NotStructured, "block projection failed to reproduce the harmonic part");
			e.comps.push_back({j, hsum, tsum});
		}
	}
	return e;
}

Scalar inner2(StructuredElement const &f, StructuredElement const &g)
{
	if (!(f.dims == g.dims))
		fail(Errc::ModeMismatch, "inner2 ring mismatch");
	Dims d = f.dims;
	int M = d.super_dimension();
	if (M <= 0)
		fail(Errc::BadDimension, "<.|.>_2 needs M > 0");
	Scalar r;
	for (auto const &a : f.comps)
		for (auto const &b : g.comps)
		{
			Scalar pp = pizzetti_of_product(a.h, conj_coefficients(b.th));
			if (pp.is_zero())
				continue;
			int ka = a.h.degree(), kb = b.th.degree();
			int deg = 2 * (a.radial_power + b.radial_power) + ka + kb;
			// int R^{2i+2j} H conj(T(H')) exp(-R^2)
			//   = 1/2 Gamma((deg+M)/2) int_SS H conj(T(H'))
			r += Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(deg + M)) * pp;
		}
	return r;
}

StructuredElement structured_mul_R2(StructuredElement const &e)
{
	StructuredElement r = e;
	for (auto &c : r.comps)
		c.radial_power += 1;
	return r;
}

StructuredElement structured_nabla2(StructuredElement const &e)
{
	// nabla^2 (R^2i H_k e^{-R^2/2})
	//   = [c_{1,i,k} R^{2i-2} + R^{2i+2} - (4i+2k+M) R^{2i}] H_k e^{-R^2/2}
	StructuredElement r;
	r.dims = e.dims;
	int M = e.dims.super_dimension();
	for (auto const &c : e.comps)
	{
		int k = c.h.degree();
		if (c.radial_power > 0)
		{
			Rat low = radial_laplacian_constant(1, c.radial_power, k, e.dims);
			r.comps.push_back({c.radial_power - 1, sscale(Scalar(low), c.h), sscale(Scalar(low), c.th)});
		}
		r.comps.push_back({c.radial_power + 1, c.h, c.th});
		Rat mid = Rat(-(4 * c.radial_power + 2 * k + M));
		r.comps.push_back({c.radial_power, sscale(Scalar(mid), c.h), sscale(Scalar(mid), c.th)});
	}
	return r;
}

StructuredElement structured_two_euler_plus_M(StructuredElement const &e)
{
	// (2E + M)(R^2i H_k e^{-R^2/2}) = (4i+2k+M) R^2i H_k e - 2 R^{2i+2} H_k e
	StructuredElement r;
	r.dims = e.dims;
	int M = e.dims.super_dimension();
	for (auto const &c : e.comps)
	{
		int k = c.h.degree();
		Rat mid = Rat(4 * c.radial_power + 2 * k + M);
		r.comps.push_back({c.radial_power, sscale(Scalar(mid), c.h), sscale(Scalar(mid), c.th)});
		r.comps.push_back({c.radial_power + 1, sscale(Scalar(-2), c.h), sscale(Scalar(-2), c.th)});
	}
	return r;
}

AdjointReport adjoint_check_f(std::function<GrassmannElement(GrassmannElement const &)> opA,
                              std::function<GrassmannElement(GrassmannElement const &)> opB, int n)
{
	AdjointReport rep;
	FermionicMonomial top = (FermionicMonomial(1) << (2 * n)) - 1;
	for (FermionicMonomial a = 0; a <= top; ++a)
		for (FermionicMonomial b = 0; b <= top; ++b)
		{
			GrassmannElement f(n), g(n);
			f.terms[a] = Scalar(1);
			g.terms[b] = Scalar(1);
			++rep.pairs_checked;
			if (!(inner_f(opA(f), g) == inner_f(f, opB(g))))
			{
				rep.pass = false;
				if (rep.witness.empty())
					rep.witness = "f=" + f.to_string() + ", g=" + g.to_string();
			}
		}
	return rep;
}

AdjointReport adjoint_check_1(std::function<GaussianWrapped(GaussianWrapped const &)> opA,
                              std::function<GaussianWrapped(GaussianWrapped const &)> opB, Dims d,
                              int degree)
{
	AdjointReport rep;
	auto mons = monomials_up_to_degree(d, degree);
	std::vector<GaussianWrapped> span;
	for (auto const &mon : mons)
	{
		SuperPolynomial p(d);
		p.terms[mon] = Scalar(1);
		span.push_back(wrap_with_gaussian(p));
	}
	for (auto const &f : span)
		for (auto const &g : span)
		{
			++rep.pairs_checked;
			if (!(inner1(opA(f), g) == inner1(f, opB(g))))
			{
				rep.pass = false;
				if (rep.witness.empty())
					rep.witness = "f=" + f.poly.to_string() + ", g=" + g.poly.to_string();
			}
		}
	return rep;
}

AdjointReport adjoint_check_2(std::function<StructuredElement(StructuredElement const &)> opA,
                              std::function<StructuredElement(StructuredElement const &)> opB, Dims d,
                              int degree)
{
	AdjointReport rep;
	std::vector<StructuredElement> span;
	for (int k = 0; k <= degree; ++k)
		for (auto const &B : super_harmonic_basis(k, d))
			for (int i = 0; 2 * i + k <= degree; ++i)
				span.push_back(structured_block(B, i));
	for (auto const &f : span)
		for (auto const &g : span)
		{
			++rep.pairs_checked;
			if (!(inner2(opA(f), g) == inner2(f, opB(g))))
			{
				rep.pass = false;
				if (rep.witness.empty())
					rep.witness = "R^" + std::to_string(2 * f.comps[0].radial_power) + " (" +
					              f.comps[0].h.to_string() + ") vs R^" +
					              std::to_string(2 * g.comps[0].radial_power) + " (" +
					              g.comps[0].h.to_string() + ")";
			}
		}
	return rep;
}

bool GramReport::diagonal_matches() const
{
	if (diagonal_prediction.size() != matrix.size())
		return false;
	for (size_t i = 0; i < matrix.size(); ++i)
		if (!(matrix[i][i] == diagonal_prediction[i]))
			return false;
	return true;
}

std::string GramReport::to_csv() const
{
	std::ostringstream os;
	os << "label";
	for (auto const &l : labels)
		os << "," << l;
	os << "\n";
	for (size_t i = 0; i < matrix.size(); ++i)
	{
		os << labels[i];
		for (size_t j = 0; j < matrix[i].size(); ++j)
			os << ",\"" << matrix[i][j].to_string() << "\"";
		os << "\n";
	}
	return os.str();
}

std::string GramReport::to_json() const
{
	std::ostringstream os;
	os << "{\"labels\":[";
	for (size_t i = 0; i < labels.size(); ++i)
		os << (i ? "," : "") << "\"" << labels[i] << "\"";
	os << "],\"matrix\":[";
	for (size_t i = 0; i < matrix.size(); ++i)
	{
		os << (i ? "," : "") << "[";
		for (size_t j = 0; j < matrix[i].size(); ++j)
			os << (j ? "," : "") << matrix[i][j].to_json();
		os << "]";
	}
	os << "],\"off_diagonal_zero\":" << (off_diagonal_zero ? "true" : "false");
	if (!diagonal_prediction.empty())
	{
		os << ",\"diagonal_prediction\":[";
		for (size_t i = 0; i < diagonal_prediction.size(); ++i)
			os << (i ? "," : "") << diagonal_prediction[i].to_json();
		os << "],\"diagonal_matches\":" << (diagonal_matches() ? "true" : "false");
	}
	os << "}";
	return os.str();
}

GramReport gram_fermionic(int n)
{
	// phi^f_{j,k,l} = 2^{2j} j! L_j^{k-n-1}(theta^2) H_k^(l) exp(-theta^2/2)
	struct Fn {
		GrassmannElement val;
		Scalar prediction;
		std::string label;
	};
	std::vector<Fn> fns;
	GrassmannElement gauss = gexp(gscale(Scalar(Rat(-1, 2)), theta2(n)));
	for (int k = 0; k <= n; ++k)
	{
		auto basis = fermionic_orthogonal_basis(n, k);
		for (int j = 0; j + k <= n; ++j)
		{
			OrthoPoly L = laguerre(j, HalfInteger(k - n - 1));
			GrassmannElement radial(n);
			GrassmannElement pow = GrassmannElement::one(n);
			for (int i = 0; i <= L.degree(); ++i)
			{
				if (i)
					pow = gmul(pow, theta2(n));
				radial = gadd(radial, gscale(L.coeff(i), pow));
			}
			Scalar pre = Scalar(rat_pow(Rat(2), 2 * j) * Rat(factorial(j)));
			for (size_t l = 0; l < basis.size(); ++l)
			{
				Fn f;
				f.val = gscale(pre, gmul(radial, gmul(basis[l].h, gauss)));
				// gamma^f_{j,k} = 4^{2j} j!/(n-k-j)! times the tracked norm
				f.prediction = Scalar(rat_pow(Rat(4), 2 * j) * Rat(factorial(j)) /
				                      Rat(factorial(n - k - j))) *
				               basis[l].normsq;
				f.label = "j=" + std::to_string(j) + ",k=" + std::to_string(k) +
				          ",l=" + std::to_string(l + 1);
				fns.push_back(std::move(f));
			}
		}
	}
	GramReport rep;
	for (auto const &f : fns)
	{
		rep.labels.push_back(f.label);
		rep.diagonal_prediction.push_back(f.prediction);
	}
	rep.matrix.assign(fns.size(), std::vector<Scalar>(fns.size()));
	for (size_t i = 0; i < fns.size(); ++i)
		for (size_t j = 0; j <= i; ++j)
		{
			Scalar v = inner_f(fns[i].val, fns[j].val);
			rep.matrix[i][j] = v;
			rep.matrix[j][i] = v.conj();
			if (i != j && !v.is_zero())
				rep.off_diagonal_zero = false;
		}
	return rep;
}

GramReport gram_cartesian(Dims d, int max_total)
{
	std::vector<CartesianBasisFunction> fns;
	// enumerate occupations with total degree <= max_total
	std::vector<int> bos(d.m, 0), ferm(2 * d.n, 0);
	std::function<void(int, int)> rec_f = [&](int idx, int left) {
		if (idx == 2 * d.n)
		{
			fns.push_back(cartesian_basis(d, bos, ferm));
			return;
		}
		for (int v = 0; v <= std::min(1, left); ++v)
		{
			ferm[idx] = v;
			rec_f(idx + 1, left - v);
		}
		ferm[idx] = 0;
	};
	std::function<void(int, int)> rec_b = [&](int idx, int left) {
		if (idx == d.m)
		{
			rec_f(0, left);
			return;
		}
		for (int v = 0; v <= left; ++v)
		{
			bos[idx] = v;
			rec_b(idx + 1, left - v);
		}
		bos[idx] = 0;
	};
	rec_b(0, max_total);
	GramReport rep;
	for (auto const &f : fns)
	{
		std::string lab = "k=";
		for (int v : f.occ_b)
			lab += std::to_string(v);
		lab += ";l=";
		for (int v : f.occ_f)
			lab += std::to_string(v);
		rep.labels.push_back(lab);
		rep.diagonal_prediction.push_back(f.normsq);
	}
	rep.matrix.assign(fns.size(), std::vector<Scalar>(fns.size()));
	for (size_t i = 0; i < fns.size(); ++i)
		for (size_t j = 0; j <= i; ++j)
		{
			Scalar v = inner1(fns[i].psi, fns[j].psi);
			rep.matrix[i][j] = v;
			rep.matrix[j][i] = v.conj();
			if (i != j && !v.is_zero())
				rep.off_diagonal_zero = false;
		}
	return rep;
}

namespace {

struct SphericalSet {
	std::vector<HarmonicBlock> blocks;
	std::vector<int> block_k;
	// Laguerre coefficient tables 2^{2j} j! L_j^{M/2+k-1}, per (j, k)
	std::vector<std::vector<std::vector<Scalar>>> lag; // lag[j][k][i]
};

SphericalSet build_spherical_set(Dims d, int jmax, int kmax)
{
	SphericalSet s;
	for (int k = 0; k <= kmax; ++k)
		for (auto &B : super_harmonic_basis(k, d))
		{
			s.blocks.push_back(B);
			s.block_k.push_back(k);
		}
	int M = d.super_dimension();
	s.lag.resize(jmax + 1);
	for (int j = 0; j <= jmax; ++j)
	{
		s.lag[j].resize(kmax + 1);
		for (int k = 0; k <= kmax; ++k)
		{
			OrthoPoly L = laguerre(j, HalfInteger::halves(M + 2 * k - 2));
			Scalar pre = Scalar(rat_pow(Rat(2), 2 * j) * Rat(factorial(j)));
			for (int i = 0; i <= L.degree(); ++i)
				s.lag[j][k].push_back(pre * L.coeff(i));
		}
	}
	return s;
}

} // namespace

GramReport gram_spherical_2(Dims d, int jmax, int kmax)
{
	int M = d.super_dimension();
	if (M <= 0)
		fail(Errc::BadDimension, "<.|.>_2 needs M > 0");
	SphericalSet s = build_spherical_set(d, jmax, kmax);
	size_t nb = s.blocks.size();
	// pairwise supersphere integrals int_SS B T(B')
	std::vector<std::vector<Scalar>> pp(nb, std::vector<Scalar>(nb));
	{
		std::vector<SuperPolynomial> asm_(nb), tasm(nb);
		for (size_t i = 0; i < nb; ++i)
		{
			asm_[i] = s.blocks[i].assembled();
			tasm[i] = s.blocks[i].t_assembled();
		}
		parallel_for(nb * nb, [&](size_t idx) {
			size_t i = idx / nb, j = idx % nb;
			pp[i][j] = pizzetti_of_product(asm_[i], tasm[j]);
		});
	}
	GramReport rep;
	struct Fn {
		int j, b;
	};
	std::vector<Fn> fns;
	for (size_t b = 0; b < nb; ++b)
		for (int j = 0; j <= jmax; ++j)
		{
			fns.push_back({j, (int)b});
			rep.labels.push_back("j=" + std::to_string(j) + ",k=" + std::to_string(s.block_k[b]) +
			                     ",b=" + std::to_string(b));
			// 1/2 4^{2j} j! Gamma(j+k+M/2) times the tracked block norm,
			// which under the Pizzetti pairing is a_kpq b_kpq normsq_b normsq_f
			auto const &B = s.blocks[b];
			Scalar tracked = a_kpq(B.i, B.p, B.q, d) * b_kpq(B.i, B.p, B.q, d) * B.normsq_b * B.normsq_f;
			rep.diagonal_prediction.push_back(
			    Scalar(Rat(1, 2) * rat_pow(Rat(4), 2 * j) * Rat(factorial(j))) *
			    gamma_half(HalfInteger::halves(2 * j + 2 * s.block_k[b] + M)) * tracked);
		}
	rep.matrix.assign(fns.size(), std::vector<Scalar>(fns.size()));
	for (size_t a = 0; a < fns.size(); ++a)
		for (size_t b2 = 0; b2 <= a; ++b2)
		{
			auto const &[j1, b1i] = fns[a];
			auto const &[j2, b2i] = fns[b2];
			Scalar v;
			if (!pp[b1i][b2i].is_zero())
			{
				int k1 = s.block_k[b1i], k2 = s.block_k[b2i];
				for (size_t i1 = 0; i1 < s.lag[j1][k1].size(); ++i1)
					for (size_t i2 = 0; i2 < s.lag[j2][k2].size(); ++i2)
					{
						Scalar c = s.lag[j1][k1][i1] * s.lag[j2][k2][i2].conj();
						if (c.is_zero())
							continue;
						int deg = 2 * (int)(i1 + i2) + k1 + k2;
						v += Scalar(Rat(1, 2)) * gamma_half(HalfInteger::halves(deg + M)) * c *
						     pp[b1i][b2i];
					}
			}
			rep.matrix[a][b2] = v;
			rep.matrix[b2][a] = v.conj();
			if (a != b2 && !v.is_zero())
				rep.off_diagonal_zero = false;
		}
	return rep;
}

Gram1Report gram_spherical_1(Dims d, int jmax, int kmax)
{
	SphericalSet s = build_spherical_set(d, jmax, kmax);
	size_t nb = s.blocks.size();
	std::vector<GaussianWrapped> fns;
	std::vector<int> fj, fb;
	for (size_t b = 0; b < nb; ++b)
	{
		for (int j = 0; j <= jmax; ++j)
		{
			StructuredElement phi = structured_spherical_hermite(j, s.blocks[b]);
			fns.push_back(phi.to_wrapped());
			fj.push_back(j);
			fb.push_back((int)b);
		}
	}
	Gram1Report rep;
	for (size_t a = 0; a < fns.size(); ++a)
		for (size_t c = 0; c <= a; ++c)
		{
			Scalar v = inner1(fns[a], fns[c]);
			auto const &B1 = s.blocks[fb[a]];
			auto const &B2 = s.blocks[fb[c]];
			// same bosonic element, same fermionic element, j+i matching
			bool predicate = B1.p == B2.p && B1.q == B2.q && B1.hb == B2.hb &&
			                 B1.hf == B2.hf && fj[a] + B1.i == fj[c] + B2.i;
			rep.entries.push_back({fj[a], fb[a], fj[c], fb[c], predicate, v});
			if (!v.is_zero())
			{
				if (!predicate)
					rep.pattern_holds = false;
				if (a != c)
					rep.has_offdiag_nonzero = true;
			}
		}
	return rep;
}

NogoReport nogo_witness(int m, int n)
{
	NogoReport rep;
	rep.m = m;
	rep.n = n;
	rep.M = m - 2 * n;
	if (rep.M > 0)
		fail(Errc::BadDimension, "the no-go argument applies to M <= 0");
	int jmax = (2 - rep.M) / 2 + ((2 - rep.M) % 2 ? 1 : 0);
	for (int j = 1; j <= jmax; ++j)
	{
		// <phi_j|phi_j> = 8j(2j+M-2) <phi_{j-1}|phi_{j-1}> at k = 0
		Rat factor = Rat(8 * j) * Rat(2 * j + rep.M - 2);
		rep.factors.emplace_back(j, factor);
		if (factor <= 0 && rep.violating_j < 0)
		{
			rep.violating_j = j;
			rep.degenerate = (factor == 0);
		}
	}
	return rep;
}

bool nogo_theta_witness(int n)
{
	GrassmannElement p = GrassmannElement::one(n);
	for (int i = 0; i <= n; ++i)
		p = gmul(p, theta2(n));
	return p.is_zero();
}

bool nogo_covariance_witness(int n)
{
	int g = 2 * n;
	if (g < 2)
		return false;
	// constraints (R^T Q R - Q) = 0 on the degree-one Gram block, linear in
	// the g^2 entries of Q, for the transvections R = I + E_{ab}; the null
	// space must consist of antisymmetric matrices only, so every invariant
	// Hermitian form has zero diagonal and cannot be positive definite
	int cols = g * g;
	std::vector<std::vector<Rat>> rows;
	for (int a = 0; a < g; ++a)
		for (int b = 0; b < g; ++b)
		{
			if (a == b)
				continue;
			// (R^T Q R - Q)_{ij} = [i==b] Q_{aj} + [j==b] Q_{ia} + [i==b][j==b] Q_{aa}
			for (int i = 0; i < g; ++i)
				for (int j = 0; j < g; ++j)
				{
					std::vector<Rat> row(cols, Rat(0));
					if (i == b)
						row[a * g + j] += 1;
					if (j == b)
						row[i * g + a] += 1;
					if (i == b && j == b)
						row[a * g + a] += 1;
					bool nonzero = false;
					for (auto const &v : row)
						if (v != 0)
							nonzero = true;
					if (nonzero)
						rows.push_back(std::move(row));
				}
		}
	// reduced row echelon form
	int rank = 0;
	std::vector<int> pivot_col;
	for (int c = 0; c < cols && rank < (int)rows.size(); ++c)
	{
		int pivot = -1;
		for (size_t r = rank; r < rows.size(); ++r)
			if (rows[r][c] != 0)
			{
				pivot = (int)r;
				break;
			}
		if (pivot < 0)
			continue;
		std::swap(rows[rank], rows[pivot]);
		Rat lead = rows[rank][c];
		for (int cc = 0; cc < cols; ++cc)
			rows[rank][cc] /= lead;
		for (size_t r = 0; r < rows.size(); ++r)
		{
			if ((int)r == rank || rows[r][c] == 0)
				continue;
			Rat f = rows[r][c];
			for (int cc = 0; cc < cols; ++cc)
				rows[r][cc] -= f * rows[rank][cc];
		}
		pivot_col.push_back(c);
		++rank;
	}
	// null-space basis: one vector per free column
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivot_col)
		is_pivot[c] = true;
	for (int free = 0; free < cols; ++free)
	{
		if (is_pivot[free])
			continue;
		std::vector<Rat> q(cols, Rat(0));
		q[free] = 1;
		for (int r = 0; r < rank; ++r)
			q[pivot_col[r]] = -rows[r][free];
		// the solution must be antisymmetric with zero diagonal
		for (int i = 0; i < g; ++i)
		{
			if (q[i * g + i] != 0)
				return false;
			for (int j = 0; j < g; ++j)
				if (q[i * g + j] != -q[j * g + i])
					return false;
		}
	}
	return true;
}

} // namespace superharm
