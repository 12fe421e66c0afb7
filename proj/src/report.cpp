#include "gq/report.hpp"

#include <functional>
#include <sstream>

namespace gq {

namespace {

std::string mono_text(const MultiIndex& m, const std::function<std::string(std::uint32_t)>& name) {
	std::string s;
	for (std::uint32_t i = 0; i < m.size(); ++i) {
		if (m[i] == 0) continue;
		if (!s.empty()) s += "*";
		s += name(i);
		if (m[i] > 1) s += "^" + std::to_string(m[i]);
	}
	return s;
}

std::string lambda_name(std::uint32_t i) { return "la" + std::to_string(i + 1); }
std::string frame_name(std::uint32_t i) { return "d" + std::to_string(i + 1); }

std::string join_nonempty(std::initializer_list<std::string> parts) {
	std::string s;
	for (const auto& p : parts) {
		if (p.empty()) continue;
		if (!s.empty()) s += "*";
		s += p;
	}
	return s.empty() ? "1" : s;
}

std::string basis_name(const Context& ctx, std::uint32_t i) { return ctx.pair().basis().at(i); }

std::string hkey_text(const Context& ctx, const HKey& k) {
	std::string s;
	for (std::size_t i = 0; i < k.alpha.size(); ++i) {
		if (i) s += " | ";
		s += join_nonempty({mono_text(k.alpha[i], frame_name),
		                    mono_text(k.mono[i], [&](std::uint32_t j) { return basis_name(ctx, j); })});
	}
	return s;
}

std::string legs_text(const Context& ctx, const std::vector<PbwMonomial>& legs) {
	std::string s;
	for (std::size_t i = 0; i < legs.size(); ++i) {
		if (i) s += " | ";
		const std::string m =
		    mono_text(legs[i], [&](std::uint32_t j) { return basis_name(ctx, j); });
		s += m.empty() ? "1" : m;
	}
	return s;
}

template <typename Terms>
ResidualSummary summarize_graded(const Context& ctx, const Terms& terms,
                                 const std::function<std::string(const typename Terms::key_type&)>& key_text) {
	ResidualSummary out;
	out.counts.assign(ctx.order() + 1, 0);
	for (const auto& [k, c] : terms)
		for (std::uint32_t p = 0; p <= ctx.order(); ++p)
			if (!c[p].is_zero()) ++out.counts[p];
	out.pass = true;
	for (const auto n : out.counts) out.pass = out.pass && n == 0;
	if (out.pass) return out;
	for (std::uint32_t p = 0; p <= ctx.order(); ++p) {
		if (out.counts[p] == 0) continue;
		for (const auto& [k, c] : terms) {
			if (c[p].is_zero()) continue;
			out.first_term =
			    "hbar^" + std::to_string(p) + " (" + poly_text(c[p]) + ") " + key_text(k);
			return out;
		}
	}
	return out;
}

}  // namespace

std::string poly_text(const Poly& p) {
	if (p.terms().empty()) return "0";
	std::string s;
	for (const auto& [m, c] : p.terms()) {
		const std::string mono = mono_text(m, lambda_name);
		std::string t;
		if (mono.empty())
			t = to_string(c);
		else if (c == 1)
			t = mono;
		else if (c == -1)
			t = "-" + mono;
		else
			t = to_string(c) + "*" + mono;
		if (s.empty())
			s = t;
		else if (!t.empty() && t[0] == '-')
			s += " - " + t.substr(1);
		else
			s += " + " + t;
	}
	return s;
}

ResidualSummary summarize(const Context& ctx, const HTensor& r) {
	return summarize_graded<std::map<HKey, PolySeries>>(
	    ctx, r.terms(), [&](const HKey& k) { return hkey_text(ctx, k); });
}

ResidualSummary summarize(const Context& ctx, const CoeffTensor& r) {
	return summarize_graded<std::map<std::vector<PbwMonomial>, PolySeries>>(
	    ctx, r.terms(), [&](const std::vector<PbwMonomial>& k) { return legs_text(ctx, k); });
}

ResidualSummary summarize(const Context& ctx, const MultiVector& r) {
	ResidualSummary out;
	out.counts.assign(1, r.terms().size());
	out.pass = r.is_zero();
	if (!out.pass) {
		const auto& [k, c] = *r.terms().begin();
		std::string frame;
		for (std::size_t i = 0; i < k.size(); ++i) {
			if (i) frame += "^";
			frame +=
			    k[i] < ctx.pair().dim_l() ? frame_name(k[i]) : basis_name(ctx, k[i] - ctx.pair().dim_l());
		}
		out.first_term = "(" + poly_text(c) + ") " + frame;
	}
	return out;
}

bool RunReport::pass() const {
	for (const auto& c : checks_)
		if (!c.summary.pass) return false;
	return true;
}

std::string RunReport::text() const {
	std::ostringstream os;
	os << "command: " << command_ << "\n";
	for (const auto& [k, v] : params_) os << k << ": " << v << "\n";
	for (const auto& c : checks_) {
		os << "\ncheck: " << c.name << "\n";
		os << "equation: " << c.equation << "\n";
		if (c.summary.pass) {
			os << "PASS (exact zero at all orders <= " << order_ << ")\n";
		} else {
			os << "FAIL\n";
			os << "residual terms by hbar order: [";
			for (std::size_t i = 0; i < c.summary.counts.size(); ++i)
				os << (i ? ", " : "") << c.summary.counts[i];
			os << "]\n";
			os << "first offending term: " << c.summary.first_term << "\n";
		}
	}
	if (!facts_.empty()) os << "\n";
	for (const auto& [k, v] : facts_) os << k << ": " << v << "\n";
	os << "\noverall: " << (pass() ? "PASS" : "FAIL") << "\n";
	return os.str();
}

nlohmann::json RunReport::to_json() const {
	nlohmann::json checks = nlohmann::json::array();
	for (const auto& c : checks_)
		checks.push_back(nlohmann::json{{"equation", c.equation},
		                                {"firstOffendingTerm", c.summary.first_term},
		                                {"name", c.name},
		                                {"pass", c.summary.pass},
		                                {"termCountsByOrder", c.summary.counts}});
	nlohmann::json j{{"checks", checks}, {"command", command_},  {"facts", facts_},
	                 {"order", order_},  {"params", params_},    {"pass", pass()}};
	if (!extra_.is_null()) j["extra"] = extra_;
	return j;
}

}  // namespace gq
