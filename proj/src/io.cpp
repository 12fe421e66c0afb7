#include "gq/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gq {

namespace {

using json = nlohmann::json;  // std::map backing keeps keys sorted on dump

json read_json(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InputError("cannot open '" + path + "'");
	try {
		return json::parse(in);
	} catch (const json::exception& e) {
		throw InputError("malformed JSON in '" + path + "': " + e.what());
	}
}

void write_json(const json& j, const std::string& path) {
	std::ofstream out(path);
	if (!out) throw InputError("cannot write '" + path + "'");
	out << j.dump(2) << '\n';
}

MultiIndex index_from_json(const json& j, std::size_t n, const char* what) {
	const auto e = j.get<std::vector<std::uint32_t>>();
	if (e.size() != n)
		throw InputError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
		                 std::to_string(e.size()));
	return MultiIndex(e);
}

Poly poly_from_json(const PolyRing& ring, const json& j) {
	Poly p(ring);
	for (const auto& t : j) {
		const Rational c = parse_rational(t.at("c").get<std::string>());
		p.add_term(index_from_json(t.at("exp"), ring.nvars(), "polynomial exponent"), c);
	}
	return p;
}

json poly_to_json(const Poly& p) {
	json a = json::array();
	for (const auto& [m, c] : p.terms())
		a.push_back(json{{"c", to_string(c)}, {"exp", m.exponents()}});
	return a;
}

}  // namespace

LieAlgebraPair load_lie_pair(const std::string& path) {
	const json j = read_json(path);
	try {
		const auto dim_g = j.at("dimG").get<std::uint32_t>();
		const auto dim_l = j.at("dimL").get<std::uint32_t>();
		auto basis = j.at("basis").get<std::vector<std::string>>();
		std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> br;
		for (const auto& b : j.at("brackets")) {
			const auto i = b.at("i").get<std::uint32_t>();
			const auto jj = b.at("j").get<std::uint32_t>();
			if (!(i < jj)) throw InputError("brackets must be stored with i < j");
			if (br.count({i, jj})) throw InputError("duplicate bracket entry");
			std::vector<BracketTerm> terms;
			for (const auto& t : b.at("terms"))
				terms.push_back({t.at("k").get<std::uint32_t>(),
				                 parse_rational(t.at("coeff").get<std::string>())});
			br[{i, jj}] = std::move(terms);
		}
		return LieAlgebraPair(j.at("name").get<std::string>(), dim_g, dim_l, std::move(basis),
		                      std::move(br));
	} catch (const json::exception& e) {
		throw InputError("bad Lie-algebra file '" + path + "': " + e.what());
	} catch (const std::invalid_argument& e) {
		throw InputError("bad Lie-algebra file '" + path + "': " + e.what());
	}
}

DynTwist load_dyn_twist(const Context& ctx, const std::string& path) {
	const json j = read_json(path);
	DynTwist f(ctx, 2);
	try {
		const std::uint32_t ng = ctx.pair().dim_g();
		for (const auto& t : j) {
			const auto p = t.at("hbar").get<std::uint32_t>();
			if (p > ctx.order()) continue;
			PolySeries c = poly_series(ctx.order(), ctx.ring());
			c[p] = poly_from_json(ctx.ring(), t.at("coeff"));
			f.add_term({index_from_json(t.at("left"), ng, "left leg"),
			            index_from_json(t.at("right"), ng, "right leg")},
			           std::move(c));
		}
	} catch (const json::exception& e) {
		throw InputError("bad twist file '" + path + "': " + e.what());
	} catch (const std::invalid_argument& e) {
		throw InputError("bad twist file '" + path + "': " + e.what());
	}
	return f;
}

void save_dyn_twist(const Context& ctx, const DynTwist& f, const std::string& path) {
	json a = json::array();
	for (std::uint32_t p = 0; p <= f.order(); ++p)
		for (const auto& [k, c] : f.terms()) {
			if (c[p].is_zero()) continue;
			a.push_back(json{{"coeff", poly_to_json(c[p])},
			                 {"hbar", p},
			                 {"left", k[0].exponents()},
			                 {"right", k[1].exponents()}});
		}
	(void)ctx;
	write_json(a, path);
}

HTensor load_htensor(const Context& ctx, const std::string& path) {
	const json j = read_json(path);
	if (!j.is_array() || j.empty()) throw InputError("tensor file '" + path + "' has no terms");
	try {
		const std::uint32_t nl = ctx.pair().dim_l(), ng = ctx.pair().dim_g();
		const auto arity = static_cast<std::uint32_t>(j.front().at("alphas").size());
		HTensor t(ctx, arity);
		for (const auto& e : j) {
			const json& al = e.at("alphas");
			const json& mo = e.at("monomials");
			if (al.size() != arity || mo.size() != arity)
				throw InputError("tensor term with inconsistent arity");
			HKey key;
			for (const auto& x : al) key.alpha.push_back(index_from_json(x, nl, "alpha"));
			for (const auto& x : mo) key.mono.push_back(index_from_json(x, ng, "monomial"));
			PolySeries c = poly_series(ctx.order(), ctx.ring());
			for (const auto& [ks, pt] : e.at("coeff").items()) {
				std::size_t used = 0;
				const unsigned long p = std::stoul(ks, &used);
				if (used != ks.size()) throw InputError("bad hbar power key '" + ks + "'");
				if (p > ctx.order()) continue;
				c[static_cast<std::uint32_t>(p)] = poly_from_json(ctx.ring(), pt);
			}
			t.add_term(std::move(key), std::move(c));
		}
		return t;
	} catch (const json::exception& e) {
		throw InputError("bad tensor file '" + path + "': " + e.what());
	} catch (const std::invalid_argument& e) {
		throw InputError("bad tensor file '" + path + "': " + e.what());
	}
}

void save_htensor(const Context& ctx, const HTensor& t, const std::string& path) {
	json a = json::array();
	for (const auto& [k, c] : t.terms()) {
		json alphas = json::array(), monos = json::array(), coeff = json::object();
		for (const auto& x : k.alpha) alphas.push_back(x.exponents());
		for (const auto& x : k.mono) monos.push_back(x.exponents());
		for (std::uint32_t p = 0; p <= t.order(); ++p)
			if (!c[p].is_zero()) coeff[std::to_string(p)] = poly_to_json(c[p]);
		a.push_back(json{{"alphas", alphas}, {"coeff", coeff}, {"monomials", monos}});
	}
	(void)ctx;
	write_json(a, path);
}

UeaElement load_uea(UeaFlavor flavor, std::uint32_t ngen, std::uint32_t order,
                    const std::string& path) {
	const json j = read_json(path);
	UeaElement u(flavor, ngen, order);
	try {
		for (const auto& t : j) {
			const auto strs = t.at("coeff").get<std::vector<std::string>>();
			RatSeries c = rat_series(order);
			for (std::size_t p = 0; p < strs.size() && p <= order; ++p)
				c[p] = RatScalar(parse_rational(strs[p]));
			u.add_term(index_from_json(t.at("exponents"), ngen, "PBW exponents"), std::move(c));
		}
	} catch (const json::exception& e) {
		throw InputError("bad UEA file '" + path + "': " + e.what());
	} catch (const std::invalid_argument& e) {
		throw InputError("bad UEA file '" + path + "': " + e.what());
	}
	return u;
}

void save_uea(const UeaElement& u, const std::string& path) {
	json a = json::array();
	for (const auto& [m, c] : u.terms()) {
		std::vector<std::string> strs;
		for (std::uint32_t p = 0; p <= u.order(); ++p) strs.push_back(to_string(c[p].value()));
		a.push_back(json{{"coeff", strs}, {"exponents", m.exponents()}});
	}
	write_json(a, path);
}

BiDiffOp load_bidiffop(const Context& ctx, const std::string& path) {
	const json j = read_json(path);
	BiDiffOp op(ctx.ring(), ctx.order());
	try {
		const std::uint32_t nl = ctx.pair().dim_l();
		for (const auto& t : j) {
			PolySeries c = poly_series(ctx.order(), ctx.ring());
			for (const auto& [ks, pt] : t.at("coeff").items()) {
				std::size_t used = 0;
				const unsigned long p = std::stoul(ks, &used);
				if (used != ks.size()) throw InputError("bad hbar power key '" + ks + "'");
				if (p > ctx.order()) continue;
				c[static_cast<std::uint32_t>(p)] = poly_from_json(ctx.ring(), pt);
			}
			op.add_term(index_from_json(t.at("alpha"), nl, "alpha"),
			            index_from_json(t.at("beta"), nl, "beta"), std::move(c));
		}
	} catch (const json::exception& e) {
		throw InputError("bad operator file '" + path + "': " + e.what());
	} catch (const std::invalid_argument& e) {
		throw InputError("bad operator file '" + path + "': " + e.what());
	}
	return op;
}

void save_bidiffop(const Context& ctx, const BiDiffOp& op, const std::string& path) {
	json a = json::array();
	for (const auto& [k, c] : op.terms()) {
		json coeff = json::object();
		for (std::uint32_t p = 0; p <= op.order(); ++p)
			if (!c[p].is_zero()) coeff[std::to_string(p)] = poly_to_json(c[p]);
		a.push_back(
		    json{{"alpha", k.first.exponents()}, {"beta", k.second.exponents()}, {"coeff", coeff}});
	}
	(void)ctx;
	write_json(a, path);
}

void save_bivector(const Context& ctx, const MultiVector& v, const std::string& path) {
	const std::uint32_t nl = ctx.pair().dim_l();
	auto name = [&](std::uint32_t idx) {
		if (idx < nl) return "d" + std::to_string(idx + 1);
		return ctx.pair().basis().at(idx - nl);
	};
	json a = json::array();
	for (const auto& [k, c] : v.terms())
		a.push_back(json{{"coeff", poly_to_json(c)}, {"gen1", name(k[0])}, {"gen2", name(k[1])}});
	write_json(json{{"pairs", a}}, path);
}

}  // namespace gq
