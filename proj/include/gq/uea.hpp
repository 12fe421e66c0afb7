#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gq/context.hpp"
#include "gq/multi_index.hpp"
#include "gq/series.hpp"

namespace gq {

// PBW basis monomial x_1^{a_1} ... x_n^{a_n} (generators in ascending basis
// order). Length dim_g for U(g), dim_l for U(l_hbar).
using PbwMonomial = MultiIndex;

// plain: x_j x_i -> x_i x_j + [x_j, x_i]            (U(g))
// hbar:  x_j x_i -> x_i x_j + hbar [x_j, x_i]       (U(l_hbar))
enum class UeaFlavor { plain, hbar };

// Element of U(g) or U(l_hbar) in the PBW basis with hbar-series coefficients.
class UeaElement {
 public:
	UeaElement(UeaFlavor flavor, std::uint32_t ngen, std::uint32_t order)
	    : flavor_(flavor), ngen_(ngen), order_(order) {}

	static UeaElement unit(UeaFlavor flavor, std::uint32_t ngen, std::uint32_t order) {
		UeaElement u(flavor, ngen, order);
		u.add_term(PbwMonomial(ngen), rat_series(order, Rational(1)));
		return u;
	}

	UeaFlavor flavor() const { return flavor_; }
	std::uint32_t ngen() const { return ngen_; }
	std::uint32_t order() const { return order_; }
	const std::map<PbwMonomial, RatSeries>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(PbwMonomial m, RatSeries c);
	UeaElement& operator+=(const UeaElement& o);
	UeaElement& operator-=(const UeaElement& o);
	friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
	friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
	UeaElement& operator*=(const Rational& q);
	friend bool operator==(const UeaElement& a, const UeaElement& b) = default;

 private:
	UeaFlavor flavor_;
	std::uint32_t ngen_, order_;
	std::map<PbwMonomial, RatSeries> terms_;
};

// Structure-constant expansion of the product of two PBW monomials over g,
// computed with plain rewrites and memoized. In the hbar flavor the result
// term at monomial w implicitly carries hbar^(deg a + deg b - deg w); the
// rewrite paths are identical, so one table serves both flavors.
const std::map<PbwMonomial, Rational>& word_product(const Context& ctx, const PbwMonomial& a,
                                                    const PbwMonomial& b);

UeaElement uea_mul(const Context& ctx, const UeaElement& a, const UeaElement& b);

// Normal form of an arbitrary generator word (indices into the basis).
UeaElement pbw_normalize(const Context& ctx, std::span<const std::uint32_t> word, UeaFlavor flavor);

// Symmetrization (1/k!) sum over all orderings of the multiset `content`.
UeaElement symmetrize(const Context& ctx, const PbwMonomial& content, UeaFlavor flavor);

// PBW quantization map Pol(l*)[[hbar]] -> U(l_hbar): lambda^a |-> symmetrized
// product of the l-generators. Exact coefficient mode only.
UeaElement pbw_map(const Context& ctx, const Poly& f);
UeaElement pbw_map(const Context& ctx, const PolySeries& f);

// Inverse of pbw_map, solved by valuation ascent: matching the written terms
// literally and re-mapping raises the hbar valuation of the remainder.
PolySeries pbw_unmap(const Context& ctx, const UeaElement& u);

// f *_PBW g = pbw_unmap(pbw_map(f) . pbw_map(g)); memoized on monomial pairs.
PolySeries pbw_star(const Context& ctx, const PolySeries& f, const PolySeries& g);
PolySeries pbw_star(const Context& ctx, const Poly& f, const Poly& g);

// Coproduct splits of a PBW monomial: Delta(x^a) = sum C(a,j) x^j (x) x^(a-j).
struct CoproductSplit {
	PbwMonomial left, right;
	Rational coeff;
};
std::vector<CoproductSplit> uea_coproduct(const PbwMonomial& m);

// Counit: coefficient of the empty monomial.
RatSeries uea_counit(const UeaElement& u);

}  // namespace gq
