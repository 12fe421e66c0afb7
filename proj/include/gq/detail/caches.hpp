#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gq/groupoid.hpp"
#include "gq/multi_index.hpp"
#include "gq/series.hpp"
#include "gq/uea.hpp"
#include "gq/weyl.hpp"

namespace gq {

// Memoization shared by all copies of a Context. Everything here is a pure
// function of (pair, order, ring), so sharing is safe.
struct ContextCaches {
	std::map<std::pair<PbwMonomial, PbwMonomial>, std::map<PbwMonomial, Rational>> word_products;
	std::map<std::pair<MultiIndex, MultiIndex>, PolySeries> star_monomials;  // exact ring
	std::optional<BiDiffOp> theta;          // extracted over the exact ring
	std::optional<BiDiffOp> theta_active;   // re-expanded in the active ring
	std::optional<HTensor> gutt;
};

}  // namespace gq
