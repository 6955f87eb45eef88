#include "CLI11.hpp"

#include "superharm/dunkl.hpp"
#include "superharm/mehler.hpp"
#include "superharm/sampling.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace superharm;

namespace {

constexpr char const *kVersion = "1.0.0";

struct Check {
	std::string name;
	std::function<std::pair<bool, std::string>()> run; // (pass, witness)
};

struct Options {
	int m = 3, n = 1, deg = 6;
	std::string inner = "2";
	std::string format = "json";
	bool slow = false;
	bool predict = false;
	unsigned long seed = 0;
	std::string out;
};

int run_suite(std::string const &suite, Options const &opt, std::vector<Check> checks,
              std::string extra_json = "")
{
	// dispatch to a small worker pool, keep the output order by suite index
	size_t workers = std::max(1u, std::thread::hardware_concurrency());
	std::vector<std::future<std::pair<bool, std::string>>> futs;
	std::atomic<size_t> next{0};
	std::vector<std::pair<bool, std::string>> results(checks.size());
	std::vector<std::thread> pool;
	for (size_t w = 0; w < std::min(workers, checks.size()); ++w)
		pool.emplace_back([&] {
			for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
			{
				try
				{
					results[i] = checks[i].run();
				}
				catch (std::exception const &e)
				{
					results[i] = {false, std::string("exception: ") + e.what()};
				}
			}
		});
	for (auto &t : pool)
		t.join();
	bool all = true;
	std::ostringstream os;
	os << "{\"suite\":\"" << suite << "\",\"params\":{\"m\":" << opt.m << ",\"n\":" << opt.n
	   << ",\"deg\":" << opt.deg << ",\"inner\":\"" << opt.inner << "\"},\"checks\":[";
	for (size_t i = 0; i < checks.size(); ++i)
	{
		auto const &[pass, witness] = results[i];
		all = all && pass;
		os << (i ? "," : "") << "{\"name\":\"" << checks[i].name << "\",\"pass\":"
		   << (pass ? "true" : "false");
		if (!witness.empty())
			os << ",\"witness\":\"" << witness << "\"";
		os << "}";
	}
	os << "],\"seed\":" << opt.seed << ",\"version\":\"" << kVersion << "\"";
	if (!extra_json.empty())
		os << "," << extra_json;
	os << "}";
	std::string text;
	if (opt.format == "json")
		text = os.str();
	else
	{
		std::ostringstream ts;
		for (size_t i = 0; i < checks.size(); ++i)
			ts << (results[i].first ? "pass" : "FAIL") << "  " << checks[i].name
			   << (results[i].second.empty() ? "" : "  [" + results[i].second + "]") << "\n";
		text = ts.str();
	}
	if (!opt.out.empty())
	{
		std::ofstream f(opt.out);
		f << text << "\n";
	}
	else
		std::cout << text << "\n";
	if (!all)
	{
		for (size_t i = 0; i < checks.size(); ++i)
			if (!results[i].first)
			{
				std::cerr << "first failure: " << checks[i].name
				          << (results[i].second.empty() ? "" : ": " + results[i].second) << "\n";
				break;
			}
	}
	return all ? 0 : 1;
}

std::pair<bool, std::string> ok() { return {true, ""}; }
std::pair<bool, std::string> failed(std::string const &w) { return {false, w}; }

std::vector<Check> sl2_checks(Options const &opt)
{
	std::vector<Check> cs;
	cs.push_back({"sl2-brackets", [opt] {
		              auto rep = check_sl2(Dims{opt.m, opt.n}, opt.deg, opt.slow);
		              return rep.ok ? ok() : failed(rep.first_failure);
	              }});
	return cs;
}

std::vector<Check> fischer_checks(Options const &opt)
{
	std::vector<Check> cs;
	Dims d{opt.m, opt.n};
	for (int deg = 0; deg <= opt.deg; ++deg)
		cs.push_back({"decompose-reassemble-deg" + std::to_string(deg), [d, deg] {
			              for (auto const &mon : monomials_of_degree(d, deg))
			              {
				              SuperPolynomial p(d);
				              p.terms[mon] = Scalar(1);
				              auto dec = fischer_decompose(p);
				              for (auto const &[j, h] : dec.components)
					              if (!nabla2(h).is_zero())
						              return failed("component not harmonic: " + p.to_string());
				              if (!(fischer_reassemble(dec, d) == p))
					              return failed("reassembly failed: " + p.to_string());
			              }
			              return ok();
		              }});
	cs.push_back({"dimension-count", [d, opt] {
		              for (int k = 0; k <= opt.deg; ++k)
			              if ((long)super_harmonic_basis(k, d).size() != dim_H(d, k))
				              return failed("dim H_" + std::to_string(k));
		              return ok();
	              }});
	cs.push_back({"radial-constants", [d] {
		              for (int k = 0; k <= 2; ++k)
		              {
			              auto blocks = super_harmonic_basis(k, d);
			              if (blocks.empty())
				              continue;
			              auto h = blocks.front().assembled();
			              for (int j = 0; j <= 4; ++j)
			              {
				              SuperPolynomial cur = h;
				              for (int a = 0; a < j; ++a)
					              cur = smul(R2(d), cur);
				              for (int i = 0; i <= j; ++i)
				              {
					              SuperPolynomial expect =
					                  sscale(Scalar(radial_laplacian_constant(i, j, k, d)), h);
					              for (int a = 0; a < j - i; ++a)
						              expect = smul(R2(d), expect);
					              if (!(cur == expect))
						              return failed("laplacian constant i=" + std::to_string(i) +
						                            " j=" + std::to_string(j));
					              cur = nabla2(cur);
				              }
			              }
			              return ok();
		              }
		              return ok();
	              }});
	return cs;
}

std::vector<Check> adjoint_checks_cli(Options const &opt)
{
	std::vector<Check> cs;
	Dims d{opt.m, opt.n};
	if (opt.inner == "f")
	{
		int n = opt.n;
		cs.push_back({"theta2-adjoint", [n] {
			              auto rep = adjoint_check_f(
			                  [n](GrassmannElement const &a) { return gmul(theta2(n), a); },
			                  [](GrassmannElement const &a) { return gneg(nabla2_f(a)); }, n);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"nabla2f-adjoint", [n] {
			              auto rep = adjoint_check_f(
			                  [](GrassmannElement const &a) { return nabla2_f(a); },
			                  [n](GrassmannElement const &a) { return gneg(gmul(theta2(n), a)); }, n);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"euler-adjoint", [n] {
			              auto eul = [n](GrassmannElement const &a) {
				              return euler_f(a) - gscale(Scalar(Rat(n)), a);
			              };
			              auto rep = adjoint_check_f(eul, eul, n);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
	}
	else if (opt.inner == "2")
	{
		cs.push_back({"R2-selfadjoint", [d, opt] {
			              auto rep = adjoint_check_2(structured_mul_R2, structured_mul_R2, d, opt.deg);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"nabla2-selfadjoint", [d, opt] {
			              auto rep = adjoint_check_2(structured_nabla2, structured_nabla2, d, opt.deg);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"euler-skewadjoint", [d, opt] {
			              auto neg = [](StructuredElement const &e) {
				              auto r = structured_two_euler_plus_M(e);
				              for (auto &c : r.comps)
				              {
					              c.h = sneg(c.h);
					              c.th = sneg(c.th);
				              }
				              return r;
			              };
			              auto rep = adjoint_check_2(structured_two_euler_plus_M, neg, d, opt.deg);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
	}
	else
	{
		cs.push_back({"R2-adjoint-r2-minus-nabla2f", [d, opt] {
			              auto mulR2 = [d](GaussianWrapped const &w) { return wmul_poly(R2(d), w); };
			              auto adj = [d](GaussianWrapped const &w) {
				              return GaussianWrapped(smul(r2(d), w.poly) - nabla2_f(w.poly),
				                                     w.gauss_half_power);
			              };
			              auto rep = adjoint_check_1(mulR2, adj, d, opt.deg);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"nabla2-adjoint-nabla2b-minus-theta2", [d, opt] {
			              auto lap = [](GaussianWrapped const &w) { return wnabla2(w); };
			              auto adj = [d](GaussianWrapped const &w) {
				              GaussianWrapped r = wnabla2(w);
				              SuperPolynomial p = r.poly - nabla2_f(w.poly) -
				                                  smul(stheta2(d), w.poly);
				              return GaussianWrapped(p, w.gauss_half_power);
			              };
			              auto rep = adjoint_check_1(lap, adj, d, opt.deg);
			              return rep.pass ? ok() : failed(rep.witness);
		              }});
		cs.push_back({"R2-not-selfadjoint", [d, opt] {
			              auto mulR2 = [d](GaussianWrapped const &w) { return wmul_poly(R2(d), w); };
			              auto rep = adjoint_check_1(mulR2, mulR2, d, opt.deg);
			              return !rep.pass ? ok() : failed("expected a counterexample");
		              }});
	}
	return cs;
}

std::vector<Check> orthogonality_checks(Options const &opt)
{
	std::vector<Check> cs;
	Dims d{opt.m, opt.n};
	if (opt.inner == "f")
		cs.push_back({"fermionic-gram", [opt] {
			              auto rep = gram_fermionic(opt.n);
			              if (!rep.off_diagonal_zero)
				              return failed("off-diagonal entry");
			              if (!rep.diagonal_matches())
				              return failed("diagonal prediction");
			              return ok();
		              }});
	else if (opt.inner == "2")
		cs.push_back({"spherical-gram-2", [d, opt] {
			              auto rep = gram_spherical_2(d, 3, std::min(opt.deg, 4));
			              if (!rep.off_diagonal_zero)
				              return failed("off-diagonal entry");
			              if (!rep.diagonal_matches())
				              return failed("diagonal prediction");
			              return ok();
		              }});
	else
	{
		cs.push_back({"cartesian-gram-1", [d, opt] {
			              auto rep = gram_cartesian(d, std::min(opt.deg, 4));
			              if (!rep.off_diagonal_zero)
				              return failed("off-diagonal entry");
			              if (!rep.diagonal_matches())
				              return failed("diagonal prediction");
			              return ok();
		              }});
		cs.push_back({"spherical-gram-1-block-pattern", [d, opt] {
			              auto rep = gram_spherical_1(d, 1, std::min(opt.deg, 2));
			              if (!rep.pattern_holds)
				              return failed("nonzero entry outside the block pattern");
			              if (!rep.has_offdiag_nonzero)
				              return failed("expected non-diagonal behavior");
			              return ok();
		              }});
	}
	return cs;
}

std::vector<Check> pizzetti_checks(Options const &opt)
{
	std::vector<Check> cs;
	Dims d{opt.m, opt.n};
	for (int deg = 0; deg <= opt.deg; ++deg)
		cs.push_back({"pizzetti-vs-radial-deg" + std::to_string(deg), [d, deg] {
			              for (auto const &mon : monomials_of_degree(d, deg))
			              {
				              SuperPolynomial p(d);
				              p.terms[mon] = Scalar(1);
				              if (!(supersphere_alt_raw(p) == pizzetti(p)))
					              return failed(p.to_string());
			              }
			              return ok();
		              }});
	cs.push_back({"R2-invariance", [d, opt] {
		              std::mt19937_64 rng(opt.seed);
		              std::uniform_int_distribution<int> coeff(-4, 4);
		              for (int rep = 0; rep < 8; ++rep)
		              {
			              SuperPolynomial g(d);
			              for (auto const &mon : monomials_up_to_degree(d, 5))
				              if (int c = coeff(rng); c)
					              g.add_term(mon, Scalar(Rat(c)));
			              if (!(pizzetti(smul(R2(d), g)) == pizzetti(g)))
				              return failed("R^2 f vs f");
		              }
		              return ok();
	              }});
	if (!bad_super_dimension(d) && d.super_dimension() != 0)
		cs.push_back({"block-orthogonality", [d] {
			              for (int k = 0; k <= 3; ++k)
			              {
				              auto blocks = super_harmonic_basis(k, d);
				              for (size_t i = 0; i < blocks.size(); ++i)
					              for (size_t j = 0; j <= i; ++j)
					              {
						              Scalar v = pizzetti_of_product(blocks[i].assembled(),
						                                             blocks[j].t_assembled());
						              auto const &b = blocks[i];
						              if (i != j && !v.is_zero())
							              return failed("blocks not orthogonal");
						              if (i == j)
						              {
							              Scalar expect = a_kpq(b.i, b.p, b.q, d) *
							                              b_kpq(b.i, b.p, b.q, d) * b.normsq_b *
							                              b.normsq_f;
							              if (!(v == expect) || v.is_zero())
								              return failed("same-block pairing constant");
						              }
					              }
			              }
			              return ok();
		              }});
	return cs;
}

std::vector<Check> dunkl_checks(Options const &opt)
{
	std::vector<Check> cs;
	std::mt19937_64 rng(opt.seed);
	auto kapgen = [&rng]() {
		std::uniform_int_distribution<int> num(0, 6), den(1, 4);
		return make_rat(num(rng), den(rng));
	};
	std::vector<std::pair<std::string, RootSystem>> systems;
	for (int m = 1; m <= std::min(opt.m, 3); ++m)
	{
		std::vector<Rat> ks;
		for (int i = 0; i < m; ++i)
			ks.push_back(kapgen());
		systems.emplace_back("Z2^" + std::to_string(m), RootSystem::Z2m(m, ks));
	}
	auto a2 = RootSystem::A(3);
	a2.set_kappa({kapgen()});
	systems.emplace_back("A2", a2);
	auto b2 = RootSystem::B(2);
	b2.set_kappa({kapgen(), kapgen()});
	systems.emplace_back("B2", b2);
	for (auto const &[name, rs] : systems)
		cs.push_back({"dunkl-" + name, [rs, opt] {
			              rs.validate();
			              Dims d{rs.m, 0};
			              Rat mu = rs.dunkl_dimension();
			              auto lap2 = dunkl_laplacian(r2(d), rs);
			              if (!(lap2 == Poly::constant(d, Scalar(2 * mu))))
				              return failed("Delta r^2 != 2 mu");
			              int deg = rs.m >= 3 ? 4 : std::min(opt.deg, 6);
			              for (auto const &mon : monomials_up_to_degree(d, deg))
			              {
				              Poly p(d);
				              p.terms[mon] = Scalar(1);
				              for (int i = 0; i < rs.m; ++i)
					              for (int j = i + 1; j < rs.m; ++j)
						              if (!(dunkl_T(i, dunkl_T(j, p, rs), rs) ==
						                    dunkl_T(j, dunkl_T(i, p, rs), rs)))
							              return failed("commutativity on " + p.to_string());
				              auto E = [&](Poly const &f) {
					              return sscale(Scalar(Rat(1, 2)), smul(r2(d), f));
				              };
				              auto F = [&](Poly const &f) {
					              return sscale(Scalar(Rat(-1, 2)), dunkl_laplacian(f, rs));
				              };
				              auto H = [&](Poly const &f) {
					              return euler_b(f) + sscale(Scalar(mu / 2), f);
				              };
				              if (!(H(E(p)) - E(H(p)) == sscale(Scalar(2), E(p))) ||
				                  !(H(F(p)) - F(H(p)) == sscale(Scalar(-2), F(p))) ||
				                  !(E(F(p)) - F(E(p)) == H(p)))
					              return failed("sl2 on " + p.to_string());
			              }
			              auto basis = fischer_orthogonal_basis(rs, rs.m >= 3 ? 2 : 4);
			              for (size_t i = 0; i < basis.size(); ++i)
				              for (size_t j = 0; j < i; ++j)
					              if (fischer_kappa(basis[i].p, basis[j].p, rs) != 0)
						              return failed("Fischer Gram not diagonal");
			              return ok();
		              }});
	return cs;
}

std::vector<Check> kernel_checks(Options const &opt)
{
	std::vector<Check> cs;
	if (opt.m == 0)
	{
		for (int k = 0; k <= opt.n; ++k)
			cs.push_back({"fermionic-kernel-k" + std::to_string(k), [opt, k] {
				              auto rep = kernel_reproduces(opt.n, k);
				              return rep.pass ? ok() : failed(rep.detail);
			              }});
	}
	else
	{
		Dims d{opt.m, opt.n};
		for (int k = 0; k <= std::min(opt.deg, 3); ++k)
			cs.push_back({"super-kernel-k" + std::to_string(k), [d, k] {
				              auto rep = super_kernel_check(k, d);
				              return rep.pass ? ok() : failed(rep.detail);
			              }});
	}
	return cs;
}

int cmd_gram(std::string const &which, Options const &opt)
{
	GramReport rep;
	if (which == "fermionic")
		rep = gram_fermionic(opt.n);
	else if (which == "cartesian")
		rep = gram_cartesian(Dims{opt.m, opt.n}, std::min(opt.deg, 4));
	else if (opt.inner == "2")
		rep = gram_spherical_2(Dims{opt.m, opt.n}, 3, std::min(opt.deg, 4));
	else
	{
		// the canonical product: emit the block pattern outcome as a check
		auto r1 = gram_spherical_1(Dims{opt.m, opt.n}, 1, std::min(opt.deg, 2));
		std::ostringstream os;
		os << "{\"suite\":\"gram-spherical-1\",\"pattern_holds\":"
		   << (r1.pattern_holds ? "true" : "false")
		   << ",\"non_diagonal\":" << (r1.has_offdiag_nonzero ? "true" : "false")
		   << ",\"entries\":" << r1.entries.size() << ",\"seed\":" << opt.seed << ",\"version\":\""
		   << kVersion << "\"}";
		if (!opt.out.empty())
			std::ofstream(opt.out) << os.str() << "\n";
		else
			std::cout << os.str() << "\n";
		return r1.pattern_holds && r1.has_offdiag_nonzero ? 0 : 1;
	}
	if (!opt.predict)
		rep.diagonal_prediction.clear();
	std::string text = opt.format == "csv" ? rep.to_csv() : rep.to_json();
	if (!opt.out.empty())
		std::ofstream(opt.out) << text << "\n";
	else
		std::cout << text << "\n";
	bool pass = rep.off_diagonal_zero && (!opt.predict || rep.diagonal_matches());
	return pass ? 0 : 1;
}

int cmd_mehler(std::string const &which, Options const &opt)
{
	std::vector<MehlerReport> reps;
	if (which == "fermionic")
	{
		reps.push_back(mehler_fermionic_verify(opt.n));
		reps.push_back(mehler_fourier_point(opt.n, +1));
		reps.push_back(mehler_fourier_point(opt.n, -1));
	}
	else if (which == "super")
		reps.push_back(mehler_super_verify(Dims{opt.m, opt.n}, opt.deg));
	else
		reps.push_back(mehler_classical_abc(opt.m, opt.deg));
	bool all = true;
	std::ostringstream os;
	os << "[";
	for (size_t i = 0; i < reps.size(); ++i)
	{
		all = all && reps[i].equal;
		os << (i ? "," : "") << reps[i].to_json();
	}
	os << "]";
	if (!opt.out.empty())
		std::ofstream(opt.out) << os.str() << "\n";
	else
		std::cout << os.str() << "\n";
	if (!all)
		std::cerr << "first failure: " << reps[0].identity << "\n";
	return all ? 0 : 1;
}

int cmd_dump(std::string const &which, Options const &opt)
{
	std::ostringstream os;
	Dims d{opt.m, opt.n};
	if (which == "harmonics")
	{
		os << "[";
		bool first = true;
		for (int k = 0; k <= opt.deg; ++k)
			for (auto const &B : super_harmonic_basis(k, d))
			{
				os << (first ? "" : ",") << "{\"k\":" << k << ",\"i\":" << B.i << ",\"p\":" << B.p
				   << ",\"q\":" << B.q << ",\"element\":" << B.assembled().to_json()
				   << ",\"normsq_b\":" << B.normsq_b.to_json()
				   << ",\"normsq_f\":" << B.normsq_f.to_json() << "}";
				first = false;
			}
		os << "]";
	}
	else if (which == "hermite")
	{
		// eigenvalue and norm table of the spherical Hermite functions
		os << "[";
		bool first = true;
		int M = d.super_dimension();
		for (int k = 0; k <= std::min(opt.deg, 4); ++k)
		{
			auto blocks = super_harmonic_basis(k, d);
			if (blocks.empty())
				continue;
			for (int j = 0; 2 * j + k <= opt.deg; ++j)
			{
				auto phi = structured_spherical_hermite(j, blocks.front());
				Scalar energy = oscillator_check(phi.to_wrapped(), d);
				Scalar norm = inner2(phi, phi);
				os << (first ? "" : ",") << "{\"j\":" << j << ",\"k\":" << k
				   << ",\"energy\":" << energy.to_json() << ",\"normsq_2\":" << norm.to_json() << "}";
				first = false;
			}
		}
		os << "]";
		(void)M;
	}
	else // kernel
	{
		if (opt.m == 0)
			os << "{\"kernel\":\"" << fermionic_kernel(opt.n, std::min(opt.deg, opt.n)).to_string()
			   << "\"}";
		else
			os << "{\"kernel\":\"" << super_kernel(std::min(opt.deg, 3), d).to_string() << "\"}";
	}
	if (!opt.out.empty())
		std::ofstream(opt.out) << os.str() << "\n";
	else
		std::cout << os.str() << "\n";
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact verification suites for harmonic analysis on R^{m|2n}"};
	app.require_subcommand(1);
	Options opt;

	std::string verify_what, gram_what, mehler_what, dump_what;
	auto add_common = [&](CLI::App *c) {
		c->add_option("--m", opt.m, "commuting dimension");
		c->add_option("--n", opt.n, "anticommuting pair count");
		c->add_option("--deg", opt.deg, "degree bound");
		c->add_option("--inner", opt.inner, "inner product: 1, 2 or f")
		    ->check(CLI::IsMember({"1", "2", "f"}));
		c->add_option("--format", opt.format, "json, csv or text")
		    ->check(CLI::IsMember({"json", "csv", "text"}));
		c->add_flag("--slow", opt.slow, "enable the slow cases");
		c->add_flag("--predict", opt.predict, "attach predicted diagonals");
		c->add_option("--seed", opt.seed, "seed for randomized checks");
		c->add_option("--out", opt.out, "write the report to a file");
	};

	auto *verify = app.add_subcommand("verify", "run a verification suite");
	verify->add_option("what", verify_what, "sl2|fischer|adjoints|orthogonality|pizzetti|dunkl|kernels")
	    ->required()
	    ->check(CLI::IsMember({"sl2", "fischer", "adjoints", "orthogonality", "pizzetti", "dunkl",
	                           "kernels"}));
	add_common(verify);

	auto *gram = app.add_subcommand("gram", "emit a Gram matrix");
	gram->add_option("what", gram_what, "cartesian|spherical|fermionic")
	    ->required()
	    ->check(CLI::IsMember({"cartesian", "spherical", "fermionic"}));
	add_common(gram);

	auto *mehler = app.add_subcommand("mehler", "verify a Mehler identity");
	mehler->add_option("what", mehler_what, "fermionic|super|classical")
	    ->required()
	    ->check(CLI::IsMember({"fermionic", "super", "classical"}));
	add_common(mehler);

	auto *dump = app.add_subcommand("dump", "dump bases and kernels");
	dump->add_option("what", dump_what, "harmonics|hermite|kernel")
	    ->required()
	    ->check(CLI::IsMember({"harmonics", "hermite", "kernel"}));
	add_common(dump);

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try
	{
		if (opt.deg > kDefaultDegreeCap && !opt.slow)
		{
			std::cerr << "--deg above " << kDefaultDegreeCap << " needs --slow\n";
			return 2;
		}
		if (verify->parsed())
		{
			std::vector<Check> checks;
			if (verify_what == "sl2")
				checks = sl2_checks(opt);
			else if (verify_what == "fischer")
				checks = fischer_checks(opt);
			else if (verify_what == "adjoints")
				checks = adjoint_checks_cli(opt);
			else if (verify_what == "orthogonality")
				checks = orthogonality_checks(opt);
			else if (verify_what == "pizzetti")
				checks = pizzetti_checks(opt);
			else if (verify_what == "dunkl")
				checks = dunkl_checks(opt);
			else
				checks = kernel_checks(opt);
			return run_suite("verify-" + verify_what, opt, std::move(checks));
		}
		if (gram->parsed())
			return cmd_gram(gram_what, opt);
		if (mehler->parsed())
		{
			if (mehler_what == "fermionic" && opt.n >= 3 && !opt.slow)
			{
				std::cerr << "n >= 3 needs --slow\n";
				return 2;
			}
			return cmd_mehler(mehler_what, opt);
		}
		return cmd_dump(dump_what, opt);
	}
	catch (Error const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
