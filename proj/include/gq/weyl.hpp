#pragma once

#include <functional>
#include <map>
#include <utility>

#include "gq/context.hpp"
#include "gq/multi_index.hpp"
#include "gq/series.hpp"

namespace gq {

// Differential operator in normal order: sum_alpha p_alpha(lambda) d^alpha
// with hbar-series polynomial coefficients in a fixed ring.
class DiffOp {
 public:
	DiffOp(PolyRing ring, std::uint32_t order) : ring_(std::move(ring)), order_(order) {}

	static DiffOp identity(const PolyRing& ring, std::uint32_t order) {
		DiffOp d(ring, order);
		d.add_term(MultiIndex(ring.nvars()), poly_series(order, Poly::constant(ring, Rational(1))));
		return d;
	}

	const PolyRing& ring() const { return ring_; }
	std::uint32_t order() const { return order_; }
	const std::map<MultiIndex, PolySeries>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(MultiIndex alpha, PolySeries coeff);
	DiffOp& operator+=(const DiffOp& o);
	DiffOp& operator-=(const DiffOp& o);
	friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
	friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
	friend bool operator==(const DiffOp& a, const DiffOp& b) = default;

	PolySeries apply(const PolySeries& f) const;

	// (p d^a) o (q d^b) = sum_{g <= a} C(a,g) p (d^g q) d^{a-g+b}
	friend DiffOp compose(const DiffOp& a, const DiffOp& b);

 private:
	PolyRing ring_;
	std::uint32_t order_;
	std::map<MultiIndex, PolySeries> terms_;
};

// Bidifferential operator sum c_{alpha beta}(lambda) d^alpha (x) d^beta.
class BiDiffOp {
 public:
	BiDiffOp(PolyRing ring, std::uint32_t order) : ring_(std::move(ring)), order_(order) {}

	const PolyRing& ring() const { return ring_; }
	std::uint32_t order() const { return order_; }
	const std::map<std::pair<MultiIndex, MultiIndex>, PolySeries>& terms() const { return terms_; }

	void add_term(MultiIndex alpha, MultiIndex beta, PolySeries coeff);
	PolySeries apply(const PolySeries& f, const PolySeries& g) const;

	// Same coefficients re-expanded in another ring (exact -> jet embedding).
	BiDiffOp embedded(const PolyRing& target) const;

 private:
	PolyRing ring_;
	std::uint32_t order_;
	std::map<std::pair<MultiIndex, MultiIndex>, PolySeries> terms_;
};

// Triangular extraction of a differential operator from a black-box linear
// map. The operator must have derivative order <= k at hbar^k (checked); the
// result is verified against `op` on all monomials of degree <= order+2.
DiffOp extract_diffop(const Context& ctx, const std::function<PolySeries(const Poly&)>& op);

// Binary version: derivative order <= k in each slot at hbar^k; verified on
// all monomial pairs of degree <= order+2.
BiDiffOp extract_bidiffop(const Context& ctx,
                          const std::function<PolySeries(const Poly&, const Poly&)>& star);

// The bidifferential form of *_PBW, extracted once per context and cached.
const BiDiffOp& theta_pbw(const Context& ctx);

// Same operator with coefficients in the active ring (identity in exact mode,
// jet re-expansion otherwise); also cached.
const BiDiffOp& theta_pbw_active(const Context& ctx);

// *_PBW through theta_pbw; works for jets (where pbw_star itself is defined
// through this operator) and doubles as a cross-check path in exact mode.
PolySeries star_via_theta(const Context& ctx, const PolySeries& f, const PolySeries& g);

// The operator g |-> f *_PBW g. Exact mode: independent unary extraction;
// jet mode: coefficients assembled from theta_pbw.
DiffOp star_mult_op(const Context& ctx, const PolySeries& f);

}  // namespace gq
