// gq: exact checker for truncated deformation quantization over a Lie pair
// (g, l). Subcommands load JSON fixtures, run one verifier, print a report,
// and exit 0 on PASS, 1 on a mathematical FAIL (nonzero residual), 2 on bad
// input. All arithmetic is exact; there are no tolerances anywhere.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gq/classical.hpp"
#include "gq/context.hpp"
#include "gq/dynamical.hpp"
#include "gq/groupoid.hpp"
#include "gq/io.hpp"
#include "gq/lie.hpp"
#include "gq/report.hpp"
#include "gq/sampler.hpp"

namespace {

using namespace gq;

struct Options {
	std::string lie_path;
	std::uint32_t order = 2;
	std::string mode = "exact";
	std::string base_point;
	std::uint32_t jet_degree = 4;
	std::uint64_t seed = 0;
	std::string json_out;

	std::string u_plus, u_minus;
	std::string twist_path;
	std::string tensor_path;
	std::string tensor_out, twist_out, bivector_out;
	std::uint32_t random_n = 0;
};

void add_common(CLI::App* cmd, Options& o) {
	cmd->add_option("algebra", o.lie_path, "Lie-algebra pair JSON file")->required();
	cmd->add_option("--order", o.order, "hbar truncation order K (default 2)")
	    ->check(CLI::PositiveNumber);
	cmd->add_option("--mode", o.mode, "coefficient ring: exact | jet (default exact)")
	    ->check(CLI::IsMember({"exact", "jet"}));
	cmd->add_option("--base-point", o.base_point,
	                "jet mode: comma-separated rational coordinates on l* (default origin)");
	cmd->add_option("--jet-degree", o.jet_degree, "jet mode: Taylor truncation degree (default 4)");
	cmd->add_option("--seed", o.seed, "seed for randomized suites (default 0)");
	cmd->add_option("--json-out", o.json_out, "write the machine-readable report here");
}

std::vector<std::string> split_csv(const std::string& s) {
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, ',')) {
		const auto b = cur.find_first_not_of(" \t");
		if (b == std::string::npos) throw InputError("empty entry in list '" + s + "'");
		const auto e = cur.find_last_not_of(" \t");
		out.push_back(cur.substr(b, e - b + 1));
	}
	return out;
}

std::vector<Rational> parse_point(const std::string& s, std::uint32_t n) {
	if (s.empty()) return std::vector<Rational>(n, Rational(0));
	std::vector<Rational> out;
	try {
		for (const auto& t : split_csv(s)) out.push_back(parse_rational(t));
	} catch (const std::invalid_argument& e) {
		throw InputError(std::string("bad base point: ") + e.what());
	}
	if (out.size() != n)
		throw InputError("base point needs " + std::to_string(n) + " coordinates, got " +
		                 std::to_string(out.size()));
	return out;
}

std::vector<std::uint32_t> parse_generators(const LieAlgebraPair& pair, const std::string& s) {
	std::vector<std::uint32_t> out;
	if (s.empty()) return out;
	for (const auto& t : split_csv(s)) {
		bool found = false;
		for (std::uint32_t i = 0; i < pair.dim_g(); ++i)
			if (pair.basis()[i] == t) {
				out.push_back(i);
				found = true;
				break;
			}
		if (found) continue;
		if (t.find_first_not_of("0123456789") != std::string::npos)
			throw InputError("unknown basis vector '" + t + "'");
		const unsigned long v = std::stoul(t);
		if (v >= pair.dim_g()) throw InputError("basis index " + t + " out of range");
		out.push_back(static_cast<std::uint32_t>(v));
	}
	return out;
}

Context make_context(const LieAlgebraPair& pair, const Options& o) {
	if (o.mode == "jet")
		return Context(pair, o.order, parse_point(o.base_point, pair.dim_l()), o.jet_degree);
	if (!o.base_point.empty()) throw InputError("--base-point requires --mode jet");
	return Context(pair, o.order);
}

std::string threads_param() {
	const char* e = std::getenv("GQ_THREADS");
	if (!e) return "1";
	const std::string s(e);
	if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s == "0")
		throw InputError("GQ_THREADS must be a positive integer");
	return s;
}

void stamp(RunReport& rep, const LieAlgebraPair& pair, const Options& o, bool quantum) {
	rep.set_param("algebra", pair.name());
	rep.set_param("file", o.lie_path);
	rep.set_param("threads", threads_param());
	if (!quantum) return;
	rep.set_param("order", std::to_string(o.order));
	rep.set_param("mode", o.mode);
	if (o.mode == "jet") {
		std::string bp;
		for (const auto& c : parse_point(o.base_point, pair.dim_l()))
			bp += (bp.empty() ? "" : ", ") + to_string(c);
		rep.set_param("base point", "(" + bp + ")");
		rep.set_param("jet degree", std::to_string(o.jet_degree));
	}
}

int finish(const RunReport& rep, const Options& o) {
	std::cout << rep.text();
	if (!o.json_out.empty()) {
		std::ofstream out(o.json_out);
		if (!out) throw InputError("cannot write '" + o.json_out + "'");
		out << rep.to_json().dump(2) << '\n';
	}
	return rep.pass() ? 0 : 1;
}

std::string vec_text(const LieAlgebraPair& pair, const std::vector<Rational>& v) {
	std::string s;
	for (std::uint32_t i = 0; i < v.size(); ++i) {
		if (is_zero(v[i])) continue;
		std::string t;
		if (v[i] == 1)
			t = pair.basis()[i];
		else if (v[i] == -1)
			t = "-" + pair.basis()[i];
		else
			t = to_string(v[i]) + "*" + pair.basis()[i];
		if (s.empty())
			s = t;
		else if (t[0] == '-')
			s += " - " + t.substr(1);
		else
			s += " + " + t;
	}
	return s.empty() ? "0" : s;
}

std::string tuple_text(const std::vector<Rational>& v) {
	std::string s;
	for (const auto& c : v) s += (s.empty() ? "" : ", ") + to_string(c);
	return "(" + s + ")";
}

// ---------------------------------------------------------------------------

int run_check_jacobi(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	RunReport rep("check-jacobi", 0);
	stamp(rep, pair, o, false);
	const auto violations = check_jacobi(pair);
	ResidualSummary s;
	s.pass = violations.empty();
	s.counts = {violations.size()};
	if (!violations.empty()) {
		const auto& f = violations.front();
		const auto& b = pair.basis();
		s.first_term = "J(" + b[f.i] + ", " + b[f.j] + ", " + b[f.k] + ") = " +
		               vec_text(pair, f.residual);
		std::string all;
		for (const auto& v : violations)
			all += (all.empty() ? "" : "; ") + ("(" + b[v.i] + ", " + b[v.j] + ", " + b[v.k] + ")");
		rep.add_fact("violated triples", all);
	}
	rep.add_check({"jacobi identity",
	               "[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0", s});
	return finish(rep, o);
}

int run_polarization(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	RunReport rep("polarization", 0);
	stamp(rep, pair, o, false);
	Polarization pol{parse_generators(pair, o.u_plus), parse_generators(pair, o.u_minus)};
	validate_polarization(pair, pol);
	const auto omega = omega_matrix(pair, pol);
	std::string mtext = "[";
	for (std::size_t r = 0; r < omega.size(); ++r) {
		mtext += (r ? ", [" : "[");
		for (std::size_t c = 0; c < omega[r].size(); ++c)
			mtext += (c ? ", " : "") + poly_text(omega[r][c]);
		mtext += "]";
	}
	mtext += "]";
	rep.add_fact("omega(lambda)", mtext);
	const auto nd = det_omega(pair, pol);
	rep.add_fact("D(lambda)", poly_text(nd.det));
	rep.add_fact("witness", nd.witness ? "lambda = " + tuple_text(*nd.witness)
	                                   : "none found in [-3,3]^N");
	ResidualSummary s;
	s.pass = nd.nondegenerate;
	s.counts = {nd.nondegenerate ? std::size_t(0) : std::size_t(1)};
	if (!nd.nondegenerate) s.first_term = "D(lambda) = 0 identically";
	rep.add_check({"nondegeneracy", "D(lambda) = det( lambda([u_a, u_b]) ) != 0", s});
	return finish(rep, o);
}

int run_character_locus(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	RunReport rep("character-locus", 0);
	stamp(rep, pair, o, false);
	const auto basis = character_locus(pair);
	rep.add_fact("dim W", std::to_string(basis.size()));
	nlohmann::json jb = nlohmann::json::array();
	for (std::size_t i = 0; i < basis.size(); ++i) {
		rep.add_fact("w" + std::to_string(i + 1), tuple_text(basis[i]));
		nlohmann::json row = nlohmann::json::array();
		for (const auto& c : basis[i]) row.push_back(to_string(c));
		jb.push_back(row);
	}
	rep.set_extra(nlohmann::json{{"characterLocusBasis", jb}});
	ResidualSummary s;
	s.pass = true;
	s.counts = {0};
	rep.add_check({"character locus", "W = { lambda in l* : lambda([l, l]) = 0 }", s});
	return finish(rep, o);
}

void add_invariance_checks(RunReport& rep, const Context& ctx, const DynTwist& f) {
	const auto inv = dyn_check_invariance(ctx, f);
	for (std::uint32_t i = 0; i < inv.residuals.size(); ++i)
		rep.add_check({"l-invariance along " + ctx.pair().basis()[i],
		               "ad*_{l_i}(b) (x) u (x) v + b (x) [l_i, u] (x) v + b (x) u (x) [l_i, v] = 0",
		               summarize(ctx, inv.residuals[i])});
}

int run_check_dyn_twist(const Options& o, bool invariance_only) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep(invariance_only ? "check-invariance" : "check-dyn-twist", ctx.order());
	stamp(rep, pair, o, true);
	rep.set_param("twist", o.twist_path);
	const DynTwist f = load_dyn_twist(ctx, o.twist_path);
	{
		ResidualSummary s;
		s.pass = f.leading_is_unit();
		s.counts = {s.pass ? std::size_t(0) : std::size_t(1)};
		if (!s.pass) s.first_term = "hbar^0 slice differs from 1 (x) 1 (x) 1";
		rep.add_check({"normalization", "F = 1 (x) 1 (x) 1 + O(hbar)", s});
	}
	add_invariance_checks(rep, ctx, f);
	if (!invariance_only) {
		const auto cu = dyn_check_counit(ctx, f);
		rep.add_check({"counit (left leg)", "(id (x) eps (x) id)F = 1 = (id (x) id (x) eps)F",
		               summarize(ctx, cu.residual_left)});
		rep.add_check({"counit (right leg)", "(id (x) eps (x) id)F = 1 = (id (x) id (x) eps)F",
		               summarize(ctx, cu.residual_right)});
		const auto cc = dyn_check_cocycle(ctx, f);
		rep.add_check({"shifted cocycle",
		               "(id (x) Delta (x) id)F *_PBW F_12^(3) = (id (x) id (x) Delta)F *_PBW F_23",
		               summarize(ctx, cc.residual)});
	}
	return finish(rep, o);
}

void add_twistor_checks(RunReport& rep, const Context& ctx, const HTensor& t,
                        const std::string& label) {
	const TwistorReport tw = check_twistor(ctx, t);
	rep.add_check({label + " cocycle",
	               "(Delta (x) id)F . (F (x) 1) = (id (x) Delta)F . (1 (x) F)",
	               summarize(ctx, tw.cocycle_residual)});
	rep.add_check({label + " counit (slot 1)", "(eps (x) id)F = 1 = (id (x) eps)F",
	               summarize(ctx, tw.counit_res1)});
	rep.add_check({label + " counit (slot 2)", "(eps (x) id)F = 1 = (id (x) eps)F",
	               summarize(ctx, tw.counit_res2)});
	rep.add_fact("F# invertible", tw.sharp_invertible ? "yes" : "no");
}

int run_gutt_twistor(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("gutt-twistor", ctx.order());
	stamp(rep, pair, o, true);
	const HTensor& th = gutt_twistor(ctx);
	rep.add_fact("tensor terms", std::to_string(th.terms().size()));
	add_twistor_checks(rep, ctx, th, "twistor");
	if (!o.tensor_out.empty()) save_htensor(ctx, th, o.tensor_out);
	return finish(rep, o);
}

int run_check_twistor(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("check-twistor", ctx.order());
	stamp(rep, pair, o, true);
	HTensor t;
	if (o.tensor_path.empty()) {
		rep.set_param("tensor", "Theta_Gutt (built in)");
		t = gutt_twistor(ctx);
	} else {
		rep.set_param("tensor", o.tensor_path);
		t = load_htensor(ctx, o.tensor_path);
		if (t.arity() != 2)
			throw InputError("twistor check needs an arity-2 tensor, file has arity " +
			                 std::to_string(t.arity()));
	}
	add_twistor_checks(rep, ctx, t, "twistor");
	return finish(rep, o);
}

int run_bridge(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("bridge", ctx.order());
	stamp(rep, pair, o, true);
	rep.set_param("twist", o.twist_path);
	const DynTwist f = load_dyn_twist(ctx, o.twist_path);
	const HTensor b = bridge(ctx, f);
	rep.add_fact("tensor terms", std::to_string(b.terms().size()));
	add_twistor_checks(rep, ctx, b, "bridged twistor");
	if (!o.tensor_out.empty()) save_htensor(ctx, b, o.tensor_out);
	return finish(rep, o);
}

int run_equivalence(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("equivalence", ctx.order());
	stamp(rep, pair, o, true);

	std::vector<std::pair<std::string, DynTwist>> instances;
	if (!o.twist_path.empty()) {
		rep.set_param("twist", o.twist_path);
		instances.emplace_back(o.twist_path, load_dyn_twist(ctx, o.twist_path));
	} else if (o.random_n > 0) {
		rep.set_param("random instances", std::to_string(o.random_n));
		rep.set_param("seed", std::to_string(o.seed));
		const InvariantTwistSampler sampler(ctx, 2, 2);
		rep.add_fact("invariant basis size", std::to_string(sampler.basis().size()));
		for (std::uint32_t i = 0; i < o.random_n; ++i) {
			const std::uint64_t s = o.seed + i;
			instances.emplace_back("seed " + std::to_string(s), sampler.sample(s));
		}
	} else {
		rep.set_param("twist", "1 (x) 1 (x) 1 (trivial)");
		instances.emplace_back("trivial", DynTwist::unit(ctx, 2));
	}

	nlohmann::json rows = nlohmann::json::array();
	std::size_t disagreements = 0;
	std::string first_bad;
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const auto& [label, f] = instances[i];
		const EquivalenceReport r = check_equivalence(ctx, f);
		std::ostringstream line;
		line << "dyn=" << (r.dyn_pass ? "PASS" : "FAIL")
		     << " twistor=" << (r.twistor_pass ? "PASS" : "FAIL")
		     << " agree=" << (r.agree ? "yes" : "no") << "  [" << label << "]";
		std::ostringstream key;
		key << "instance " << std::setw(3) << std::setfill('0') << i + 1;
		rep.add_fact(key.str(), line.str());
		rows.push_back(nlohmann::json{{"agree", r.agree},
		                              {"dynCocyclePass", r.dyn_cocycle_pass},
		                              {"dynCounitPass", r.dyn_counit_pass},
		                              {"dynPass", r.dyn_pass},
		                              {"label", label},
		                              {"twistorCocyclePass", r.twistor_cocycle_pass},
		                              {"twistorCounitPass", r.twistor_counit_pass},
		                              {"twistorPass", r.twistor_pass}});
		if (!r.agree && first_bad.empty()) {
			++disagreements;
			first_bad = key.str() + ": " + line.str();
		} else if (!r.agree) {
			++disagreements;
		}
	}
	rep.set_extra(nlohmann::json{{"instances", rows}});
	rep.add_fact("agreement", std::to_string(instances.size() - disagreements) + "/" +
	                              std::to_string(instances.size()) + " agree");
	ResidualSummary s;
	s.pass = disagreements == 0;
	s.counts = {disagreements};
	s.first_term = first_bad;
	rep.add_check({"characterization agreement",
	               "shifted-cocycle checks on F and twistor checks on lift(F).Theta_Gutt "
	               "pass or fail together",
	               s});
	return finish(rep, o);
}

int run_exchange_r(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("exchange-r", ctx.order());
	stamp(rep, pair, o, true);
	rep.set_param("twist", o.twist_path);
	const DynTwist f = load_dyn_twist(ctx, o.twist_path);
	if (!f.leading_is_unit()) throw InputError("exchange element needs F = 1 (x) 1 + O(hbar)");
	const CoeffTensor r = exchange_r(ctx, f);
	rep.add_fact("R terms", std::to_string(r.terms().size()));
	const CoeffTensor round_trip = ct_mul_star(ctx, ct_swap_legs(ctx, f), r) - f;
	rep.add_check({"round trip", "F_21 *_PBW R = F for R = F_21^{-1} *_PBW F",
	               summarize(ctx, round_trip)});
	if (!o.twist_out.empty()) save_dyn_twist(ctx, r, o.twist_out);
	return finish(rep, o);
}

int run_check_cdybe(const Options& o) {
	const LieAlgebraPair pair = load_lie_pair(o.lie_path);
	const Context ctx = make_context(pair, o);
	RunReport rep("check-cdybe", ctx.order());
	stamp(rep, pair, o, true);
	MultiVector theta(ctx, 2);
	if (!o.twist_path.empty()) {
		rep.set_param("twist", o.twist_path);
		theta = classical_theta(ctx, load_dyn_twist(ctx, o.twist_path));
	} else {
		rep.set_param("twist", "none (theta = 0)");
	}
	rep.add_fact("theta terms", std::to_string(theta.terms().size()));
	const MultiVector pi = assemble_pi(ctx, theta);
	const SchoutenReport sr = schouten_jacobi(ctx, pi);
	rep.add_check({"classical dynamical Yang-Baxter / Poisson Jacobi",
	               "[pi, pi] = 0 for pi = pi_{l*} + sum_i d_i ^ X_i + theta",
	               summarize(ctx, sr.residual)});
	if (!o.bivector_out.empty()) save_bivector(ctx, pi, o.bivector_out);
	return finish(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact symbolic checks for truncated deformation quantization over a Lie pair"};
	app.require_subcommand(1);
	Options o;
	int code = 0;

	auto* jac = app.add_subcommand("check-jacobi", "verify the Jacobi identity from structure constants");
	add_common(jac, o);
	jac->callback([&] { code = run_check_jacobi(o); });

	auto* pol = app.add_subcommand("polarization", "validate a splitting g = l + u+ + u- and test nondegeneracy of omega");
	add_common(pol, o);
	pol->add_option("--u-plus", o.u_plus, "comma-separated basis names or indices spanning u+");
	pol->add_option("--u-minus", o.u_minus, "comma-separated basis names or indices spanning u-");
	pol->callback([&] { code = run_polarization(o); });

	auto* chl = app.add_subcommand("character-locus", "basis of W = { lambda : lambda([l, l]) = 0 }");
	add_common(chl, o);
	chl->callback([&] { code = run_character_locus(o); });

	auto* cdt = app.add_subcommand("check-dyn-twist", "counit + shifted-cocycle + invariance checks for a dynamical twist");
	add_common(cdt, o);
	cdt->add_option("--twist", o.twist_path, "dynamical twist JSON file")->required();
	cdt->callback([&] { code = run_check_dyn_twist(o, false); });

	auto* inv = app.add_subcommand("check-invariance", "l-invariance residuals of a twist, one per generator");
	add_common(inv, o);
	inv->add_option("--twist", o.twist_path, "dynamical twist JSON file")->required();
	inv->callback([&] { code = run_check_dyn_twist(o, true); });

	auto* gt = app.add_subcommand("gutt-twistor", "build the PBW-to-Gutt comparison twistor and verify it");
	add_common(gt, o);
	gt->add_option("--tensor-out", o.tensor_out, "write the tensor as JSON");
	gt->callback([&] { code = run_gutt_twistor(o); });

	auto* ct = app.add_subcommand("check-twistor", "cocycle + counit equations for an arity-2 tensor");
	add_common(ct, o);
	ct->add_option("--tensor", o.tensor_path, "tensor JSON file (default: built-in Gutt twistor)");
	ct->callback([&] { code = run_check_twistor(o); });

	auto* br = app.add_subcommand("bridge", "lift a dynamical twist against the Gutt twistor and verify the result");
	add_common(br, o);
	br->add_option("--twist", o.twist_path, "dynamical twist JSON file")->required();
	br->add_option("--tensor-out", o.tensor_out, "write the bridged tensor as JSON");
	br->callback([&] { code = run_bridge(o); });

	auto* eq = app.add_subcommand("equivalence", "run both twist characterizations and compare verdicts");
	add_common(eq, o);
	eq->add_option("--twist", o.twist_path, "dynamical twist JSON file (default: trivial twist)");
	eq->add_option("--random", o.random_n, "draw N seeded random l-invariant twists instead");
	eq->callback([&] { code = run_equivalence(o); });

	auto* ex = app.add_subcommand("exchange-r", "exchange element R = F_21^{-1} *_PBW F with round-trip check");
	add_common(ex, o);
	ex->add_option("--twist", o.twist_path, "dynamical twist JSON file")->required();
	ex->add_option("--twist-out", o.twist_out, "write R as a twist JSON file");
	ex->callback([&] { code = run_exchange_r(o); });

	auto* cy = app.add_subcommand("check-cdybe", "Poisson Jacobi identity for pi assembled from a twist's classical limit");
	add_common(cy, o);
	cy->add_option("--twist", o.twist_path, "dynamical twist JSON file (default: theta = 0)");
	cy->add_option("--bivector-out", o.bivector_out, "write the assembled bivector as JSON");
	cy->callback([&] { code = run_check_cdybe(o); });

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int r = app.exit(e);
		return r == 0 ? 0 : 2;
	} catch (const InputError& e) {
		std::cerr << "input error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return code;
}
