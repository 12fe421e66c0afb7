#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gq/classical.hpp"
#include "gq/context.hpp"
#include "gq/dynamical.hpp"
#include "gq/groupoid.hpp"

#include "json.hpp"

namespace gq {

// Human- and machine-readable digest of one residual: term counts by hbar
// order (index = order) and the first nonzero term, rendered verbatim in
// canonical term order.
struct ResidualSummary {
	bool pass = true;
	std::vector<std::size_t> counts;
	std::string first_term;
};

ResidualSummary summarize(const Context& ctx, const HTensor& r);
ResidualSummary summarize(const Context& ctx, const CoeffTensor& r);
ResidualSummary summarize(const Context& ctx, const MultiVector& r);

std::string poly_text(const Poly& p);

struct CheckResult {
	std::string name;
	std::string equation;  // the identity this check decides, written out
	ResidualSummary summary;
};

// One CLI run: parameters, the checks performed, free-form facts, and an
// optional extra JSON payload. JSON output is byte-stable: std::map key
// order everywhere, canonical rational strings, no timestamps.
class RunReport {
 public:
	RunReport(std::string command, std::uint32_t order) : command_(std::move(command)), order_(order) {}

	void set_param(const std::string& key, std::string value) { params_[key] = std::move(value); }
	void add_check(CheckResult c) { checks_.push_back(std::move(c)); }
	void add_fact(const std::string& key, std::string value) { facts_[key] = std::move(value); }
	void set_extra(nlohmann::json extra) { extra_ = std::move(extra); }

	bool pass() const;
	std::string text() const;
	nlohmann::json to_json() const;

 private:
	std::string command_;
	std::uint32_t order_;
	std::map<std::string, std::string> params_;
	std::vector<CheckResult> checks_;
	std::map<std::string, std::string> facts_;
	nlohmann::json extra_;
};

}  // namespace gq
