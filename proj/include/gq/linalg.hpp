#pragma once

#include <vector>

#include "gq/rational.hpp"

namespace gq {

using RatMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);

// Basis of { x : m x = 0 } in the canonical RREF parametrization (one basis
// vector per free column, unit entry at the free column).
RatMatrix nullspace(RatMatrix m, std::size_t ncols);

}  // namespace gq
