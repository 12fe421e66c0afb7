#pragma once

#include <cstdint>
#include <vector>

#include "gq/context.hpp"
#include "gq/dynamical.hpp"

namespace gq {

// Exact basis of the l-invariant subspace of Pol(l*) (x) U(g) (x) U(g) up to
// the given degrees, computed gradewise: the invariance operator preserves
// (coefficient degree, leg degree, leg degree), so its kernel is the direct
// sum of the kernels of small rational matrices, one per triple. U(g) legs
// are the symmetrizations of S(g) monomials, so equivariance carries over
// verbatim from the symmetric picture.
class InvariantTwistSampler {
 public:
	InvariantTwistSampler(const Context& ctx, std::uint32_t max_coeff_degree,
	                      std::uint32_t max_leg_degree);

	// Basis elements: coefficients live in the hbar^0 slot, two legs each.
	const std::vector<CoeffTensor>& basis() const { return basis_; }

	// F = 1 + hbar F_1 with F_1 a random small-integer combination of the
	// basis; the result is re-verified against the invariance operator.
	DynTwist sample(std::uint64_t seed) const;

 private:
	const Context& ctx_;
	std::vector<CoeffTensor> basis_;
};

// Random twist with unit leading term but no invariance constraint; the
// higher slots get random monomial terms with small integer coefficients.
DynTwist random_unital_twist(const Context& ctx, std::uint64_t seed,
                             std::uint32_t max_coeff_degree, std::uint32_t max_leg_degree);

}  // namespace gq
