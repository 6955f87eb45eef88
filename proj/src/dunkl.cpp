#include "superharm/dunkl.hpp"
#include "json.hpp"
#include <algorithm>
#include <sstream>

namespace superharm {

namespace {

Rat parse_rat(nlohmann::json const &v)
{
	if (v.is_number_integer())
		return Rat(v.get<long>());
	Rat r(v.get<std::string>());
	r.canonicalize();
	return r;
}

} // namespace

RootSystem RootSystem::from_json(std::string const &text)
{
	auto j = nlohmann::json::parse(text);
	RootSystem rs;
	for (auto const &row : j.at("roots"))
	{
		std::vector<Rat> root;
		for (auto const &v : row)
			root.push_back(parse_rat(v));
		rs.roots.push_back(std::move(root));
	}
	if (rs.roots.empty())
		fail(Errc::ZeroRoot, "empty root system");
	rs.m = (int)rs.roots[0].size();
	if (j.contains("orbit"))
		for (auto const &v : j.at("orbit"))
			rs.orbit.push_back(v.get<int>());
	else
		rs.orbit.assign(rs.roots.size(), 0);
	for (auto const &[key, val] : j.at("kappa").items())
		rs.kappa[std::stoi(key)] = parse_rat(val);
	rs.validate();
	return rs;
}

namespace {

Dims bos_dims(int m) { return Dims{m, 0}; }

std::vector<Rat> reflect_vector(std::vector<Rat> const &alpha, std::vector<Rat> const &x)
{
	Rat ax = 0, aa = 0;
	for (size_t i = 0; i < alpha.size(); ++i)
	{
		ax += alpha[i] * x[i];
		aa += alpha[i] * alpha[i];
	}
	std::vector<Rat> r = x;
	for (size_t i = 0; i < alpha.size(); ++i)
		r[i] -= 2 * ax / aa * alpha[i];
	return r;
}

bool parallel(std::vector<Rat> const &a, std::vector<Rat> const &b)
{
	// a = c b for some scalar c
	Rat c;
	bool have = false;
	for (size_t i = 0; i < a.size(); ++i)
	{
		if (b[i] == 0)
		{
			if (a[i] != 0)
				return false;
			continue;
		}
		Rat q = a[i] / b[i];
		if (!have)
		{
			c = q;
			have = true;
		}
		else if (q != c)
			return false;
	}
	return have;
}

} // namespace

RootSystem RootSystem::Z2m(int m, std::vector<Rat> kappas)
{
	RootSystem rs;
	rs.m = m;
	for (int i = 0; i < m; ++i)
	{
		std::vector<Rat> e(m, Rat(0));
		e[i] = 1;
		rs.roots.push_back(e);
		rs.orbit.push_back(i);
		rs.kappa[i] = kappas.at(i);
	}
	return rs;
}

RootSystem RootSystem::A(int m)
{
	RootSystem rs;
	rs.m = m;
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
		{
			std::vector<Rat> e(m, Rat(0));
			e[i] = 1;
			e[j] = -1;
			rs.roots.push_back(e);
			rs.orbit.push_back(0);
		}
	rs.kappa[0] = 0;
	return rs;
}

RootSystem RootSystem::B(int m)
{
	RootSystem rs;
	rs.m = m;
	for (int i = 0; i < m; ++i)
	{
		std::vector<Rat> e(m, Rat(0));
		e[i] = 1;
		rs.roots.push_back(e); // short
		rs.orbit.push_back(0);
	}
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
			for (int sgn : {1, -1})
			{
				std::vector<Rat> e(m, Rat(0));
				e[i] = 1;
				e[j] = sgn;
				rs.roots.push_back(e); // long
				rs.orbit.push_back(1);
			}
	rs.kappa[0] = 0;
	rs.kappa[1] = 0;
	return rs;
}

RootSystem RootSystem::D(int m)
{
	RootSystem rs;
	rs.m = m;
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
			for (int sgn : {1, -1})
			{
				std::vector<Rat> e(m, Rat(0));
				e[i] = 1;
				e[j] = sgn;
				rs.roots.push_back(e);
				rs.orbit.push_back(0);
			}
	rs.kappa[0] = 0;
	return rs;
}

void RootSystem::set_kappa(std::vector<Rat> const &per_orbit)
{
	int idx = 0;
	for (auto &[o, k] : kappa)
		k = per_orbit.at(idx++);
}

void RootSystem::validate() const
{
	for (size_t a = 0; a < roots.size(); ++a)
	{
		bool zero = true;
		for (auto const &c : roots[a])
			if (c != 0)
				zero = false;
		if (zero)
			fail(Errc::ZeroRoot, "zero root");
		for (size_t b = 0; b < roots.size(); ++b)
		{
			auto im = reflect_vector(roots[a], roots[b]);
			bool found = false;
			for (size_t c = 0; c < roots.size() && !found; ++c)
				if (parallel(im, roots[c]))
				{
					// kappa must be orbit-invariant
					if (kappa.at(orbit[b]) != kappa.at(orbit[c]))
						fail(Errc::ParamOutOfRange, "kappa is not constant on orbits");
					found = true;
				}
			if (!found)
				fail(Errc::ParamOutOfRange, "reflection does not preserve the root system");
		}
	}
}

Poly reflect(std::vector<Rat> const &alpha, Poly const &p)
{
	bool zero = true;
	for (auto const &c : alpha)
		if (c != 0)
			zero = false;
	if (zero)
		fail(Errc::ZeroRoot, "reflection needs a nonzero root");
	int m = (int)alpha.size();
	Dims d = bos_dims(m);
	Rat aa = 0;
	for (auto const &c : alpha)
		aa += c * c;
	// images x_i -> x_i - 2 alpha_i <alpha,x>/|alpha|^2
	std::vector<Poly> images;
	for (int i = 0; i < m; ++i)
	{
		Poly im = Poly::variable(d, i);
		for (int j = 0; j < m; ++j)
		{
			Rat c = -2 * alpha[i] * alpha[j] / aa;
			if (c != 0)
				im = im + sscale(Scalar(c), Poly::variable(d, j));
		}
		images.push_back(im);
	}
	Poly r(d);
	for (auto const &[mon, c] : p.terms)
	{
		Poly term = Poly::constant(d, c);
		for (int i = 0; i < m; ++i)
			for (int e = 0; e < mon.bos[i]; ++e)
				term = smul(term, images[i]);
		r = r + term;
	}
	return r;
}

Poly divided_difference(std::vector<Rat> const &alpha, Poly const &p)
{
	// divide (p - p o r_alpha) by the linear form <alpha,x> with remainder
	// check; synthetic division along a pivot variable
	int m = (int)alpha.size();
	Dims d = bos_dims(m);
	Poly num = p - reflect(alpha, p);
	int pivot = -1;
	for (int i = 0; i < m; ++i)
		if (alpha[i] != 0)
			pivot = i;
	Poly q(d);
	while (!num.is_zero())
	{
		// highest pivot-degree terms
		int top = 0;
		for (auto const &[mon, c] : num.terms)
			top = std::max(top, mon.bos[pivot]);
		if (top == 0)
			break;
		Poly part(d);
		for (auto const &[mon, c] : num.terms)
			if (mon.bos[pivot] == top)
			{
				SuperMonomial mm = mon;
				mm.bos[pivot] -= 1;
				part.add_term(mm, c * Scalar(Rat(1) / alpha[pivot]));
			}
		q = q + part;
		// num -= part * <alpha,x>
		Poly lin(d);
		for (int i = 0; i < m; ++i)
			if (alpha[i] != 0)
				lin = lin + sscale(Scalar(alpha[i]), Poly::variable(d, i));
		num = num - smul(part, lin);
	}
	if (!num.is_zero())
		fail(Errc::ParamOutOfRange, "difference is not divisible by <alpha,x>");
	return q;
}

Poly dunkl_T(int i, Poly const &p, RootSystem const &rs)
{
	Poly r = bderiv(i, p);
	for (size_t a = 0; a < rs.roots.size(); ++a)
	{
		Rat k = rs.kappa.at(rs.orbit[a]);
		if (k == 0 || rs.roots[a][i] == 0)
			continue;
		Poly dd = divided_difference(rs.roots[a], p);
		r = r + sscale(Scalar(k * rs.roots[a][i]), dd);
	}
	return r;
}

Poly dunkl_laplacian(Poly const &p, RootSystem const &rs)
{
	Poly r(bos_dims(rs.m));
	for (int i = 0; i < rs.m; ++i)
		r = r + dunkl_T(i, dunkl_T(i, p, rs), rs);
	return r;
}

Rat fischer_kappa(Poly const &p, Poly const &q, RootSystem const &rs)
{
	// substitute x^a -> prod (T_i/2)^{a_i} and apply to q
	Poly acc(bos_dims(rs.m));
	for (auto const &[mon, c] : p.terms)
	{
		Poly cur = q;
		for (int i = 0; i < rs.m && !cur.is_zero(); ++i)
			for (int e = 0; e < mon.bos[i] && !cur.is_zero(); ++e)
				cur = sscale(Scalar(Rat(1, 2)), dunkl_T(i, cur, rs));
		acc = acc + sscale(c, cur);
	}
	Scalar v = constant_term(acc);
	if (v.is_zero())
		return 0;
	return v.as_rational();
}

Poly rosler_hermite(Poly const &p, RootSystem const &rs)
{
	int deg = 0;
	if (!p.is_homogeneous(&deg))
		fail(Errc::NotHomogeneous, "the generalized Hermite polynomials take homogeneous inputs");
	Poly r(bos_dims(rs.m));
	Poly cur = p;
	for (int i = 0; 2 * i <= deg; ++i)
	{
		if (i > 0)
			cur = dunkl_laplacian(cur, rs);
		if (cur.is_zero())
			break;
		Rat c = Rat((i % 2) ? -1 : 1) / (rat_pow(Rat(4), i) * Rat(factorial(i)));
		r = r + sscale(Scalar(c), cur);
	}
	return sscale(Scalar(rat_pow(Rat(2), deg)), r);
}

std::vector<DunklBasisElement> fischer_orthogonal_basis(RootSystem const &rs, int degree)
{
	std::vector<DunklBasisElement> out;
	Dims d = bos_dims(rs.m);
	for (int deg = 0; deg <= degree; ++deg)
		for (auto const &mon : monomials_of_degree(d, deg))
		{
			Poly v(d);
			v.terms[mon] = Scalar(1);
			for (auto const &b : out)
			{
				if (b.p.degree() != deg)
					continue; // different degrees are Fischer-orthogonal
				Rat c = fischer_kappa(v, b.p, rs) / b.normsq;
				if (c != 0)
					v = v - sscale(Scalar(c), b.p);
			}
			if (v.is_zero())
				continue;
			out.push_back({v, fischer_kappa(v, v, rs)});
		}
	return out;
}

long dim_dunkl_harmonics(RootSystem const &rs, int k, int)
{
	// kernel dimension of Delta_kappa on Pol_k by exact Gaussian elimination
	Dims d = bos_dims(rs.m);
	auto mons = monomials_of_degree(d, k);
	auto target = monomials_of_degree(d, k - 2 >= 0 ? k - 2 : 0);
	if (k < 2)
		return (long)mons.size();
	std::map<SuperMonomial, int> index;
	for (size_t i = 0; i < target.size(); ++i)
		index[target[i]] = (int)i;
	// rows: images of basis monomials
	std::vector<std::vector<Rat>> rows;
	for (auto const &mon : mons)
	{
		Poly p(d);
		p.terms[mon] = Scalar(1);
		Poly lap = dunkl_laplacian(p, rs);
		std::vector<Rat> row(target.size(), Rat(0));
		for (auto const &[mm, c] : lap.terms)
			row[index.at(mm)] = c.as_rational();
		rows.push_back(std::move(row));
	}
	// rank by Gaussian elimination
	int rank = 0;
	size_t cols = target.size();
	for (size_t c = 0; c < cols && rank < (int)rows.size(); ++c)
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
		for (size_t r = 0; r < rows.size(); ++r)
		{
			if ((int)r == rank || rows[r][c] == 0)
				continue;
			Rat f = rows[r][c] / rows[rank][c];
			for (size_t cc = c; cc < cols; ++cc)
				rows[r][cc] -= f * rows[rank][cc];
		}
		++rank;
	}
	return (long)mons.size() - rank;
}

std::string RootSystem::to_json() const
{
	std::ostringstream os;
	os << "{\"roots\":[";
	for (size_t i = 0; i < roots.size(); ++i)
	{
		os << (i ? "," : "") << "[";
		for (size_t j = 0; j < roots[i].size(); ++j)
			os << (j ? "," : "") << "\"" << roots[i][j].get_str() << "\"";
		os << "]";
	}
	os << "],\"orbit\":[";
	for (size_t i = 0; i < orbit.size(); ++i)
		os << (i ? "," : "") << orbit[i];
	os << "],\"kappa\":{";
	bool first = true;
	for (auto const &[o, k] : kappa)
	{
		os << (first ? "" : ",") << "\"" << o << "\":\"" << k.get_str() << "\"";
		first = false;
	}
	os << "}}";
	return os.str();
}

} // namespace superharm
