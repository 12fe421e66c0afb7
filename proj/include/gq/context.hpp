#pragma once

#include <memory>

#include "gq/lie.hpp"
#include "gq/poly.hpp"
#include "gq/series.hpp"

namespace gq {

struct ContextCaches;  // memoized word products, star products, extracted operators

// One computation run: the Lie-algebra pair, the global hbar truncation order
// K, and the active coefficient ring (exact polynomials on l*, or jets at a
// base point). Copies share caches; everything cached is a pure function of
// (pair, order, ring).
class Context {
 public:
	Context(LieAlgebraPair pair, std::uint32_t order);
	Context(LieAlgebraPair pair, std::uint32_t order, std::vector<Rational> base_point,
	        std::uint32_t jet_degree);

	const LieAlgebraPair& pair() const { return pair_; }
	std::uint32_t order() const { return order_; }
	const PolyRing& ring() const { return ring_; }             // active coefficient ring
	const PolyRing& exact_ring() const { return exact_ring_; }  // always exact, for extraction
	bool jet_mode() const { return ring_.mode() == PolyMode::jet; }

	ContextCaches& caches() const { return *caches_; }

	PolySeries zero_series() const { return poly_series(order_, ring_); }
	PolySeries one_series() const { return poly_series(order_, Poly::constant(ring_, Rational(1))); }
	// Exact polynomials re-expanded in the active ring (identity in exact mode).
	Poly to_active(const Poly& exact_poly) const;

 private:
	LieAlgebraPair pair_;
	std::uint32_t order_;
	PolyRing ring_, exact_ring_;
	std::shared_ptr<ContextCaches> caches_;
};

}  // namespace gq
