#include "gq/context.hpp"

#include "gq/detail/caches.hpp"

namespace gq {

Context::Context(LieAlgebraPair pair, std::uint32_t order)
    : pair_(std::move(pair)),
      order_(order),
      ring_(PolyRing::exact(pair_.dim_l())),
      exact_ring_(ring_),
      caches_(std::make_shared<ContextCaches>()) {}

Context::Context(LieAlgebraPair pair, std::uint32_t order, std::vector<Rational> base_point,
                 std::uint32_t jet_degree)
    : pair_(std::move(pair)),
      order_(order),
      ring_(PolyRing::jet(pair_.dim_l(), std::move(base_point), jet_degree)),
      exact_ring_(PolyRing::exact(pair_.dim_l())),
      caches_(std::make_shared<ContextCaches>()) {}

Poly Context::to_active(const Poly& exact_poly) const {
	if (!jet_mode()) return exact_poly;
	return exact_poly.embed(ring_);
}

}  // namespace gq
