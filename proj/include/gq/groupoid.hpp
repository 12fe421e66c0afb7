#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "gq/context.hpp"
#include "gq/multi_index.hpp"
#include "gq/series.hpp"
#include "gq/uea.hpp"

namespace gq {

// One slot of an n-fold tensor term: derivative part d^alpha and U(g) part u.
// The polynomial coefficient of the whole term lives on slot 1 (canonical
// representative of the tensor product over R; both module actions multiply
// coefficients, so sliding them left is an equality, not a choice).
struct HKey {
	std::vector<MultiIndex> alpha;   // derivative multi-indices over dim_l variables
	std::vector<PbwMonomial> mono;   // PBW monomials over dim_g generators

	friend bool operator==(const HKey&, const HKey&) = default;
	friend std::strong_ordering operator<=>(const HKey& a, const HKey& b) {
		for (std::size_t i = 0; i < a.alpha.size() && i < b.alpha.size(); ++i) {
			if (auto c = a.alpha[i] <=> b.alpha[i]; c != 0) return c;
			if (auto c = a.mono[i] <=> b.mono[i]; c != 0) return c;
		}
		return a.alpha.size() <=> b.alpha.size();
	}
};

// Element of H tensor_R ... tensor_R H (n factors), H = D (x) U(g)[[hbar]],
// in canonical form: all polynomial coefficients on factor 1.
class HTensor {
 public:
	HTensor() = default;  // empty placeholder; real tensors come from the ctx ctor
	HTensor(const Context& ctx, std::uint32_t arity);

	static HTensor unit(const Context& ctx, std::uint32_t arity);
	// Single term c * (d^{alpha_1} (x) u_1) (x) ... ; key lengths must equal arity.
	static HTensor term(const Context& ctx, HKey key, PolySeries coeff);

	std::uint32_t arity() const { return arity_; }
	std::uint32_t order() const { return order_; }
	const std::map<HKey, PolySeries>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(HKey key, PolySeries coeff);
	HTensor& operator+=(const HTensor& o);
	HTensor& operator-=(const HTensor& o);
	friend HTensor operator+(HTensor a, const HTensor& b) { return a += b; }
	friend HTensor operator-(HTensor a, const HTensor& b) { return a -= b; }
	HTensor& operator*=(const Rational& q);
	friend bool operator==(const HTensor& a, const HTensor& b) = default;

	// True when the hbar^0 slice equals the unit tensor.
	bool leading_is_unit() const;

 private:
	std::uint32_t arity_ = 0, order_ = 0;
	PolyRing ring_;
	std::map<HKey, PolySeries> terms_;
};

// Raw (non-canonical) tensor input: every factor carries its own coefficient.
struct RawFactor {
	PolySeries coeff;
	MultiIndex alpha;
	PbwMonomial mono;
};
using RawTerm = std::vector<RawFactor>;

// Slides all factor coefficients onto factor 1. This is the identity on the
// underlying tensor-over-R element.
HTensor htensor_normalize(const Context& ctx, const std::vector<RawTerm>& raw);

// Factorwise product: DiffOp composition on factor 1 (the only factor whose
// derivatives meet a polynomial coefficient), exponent addition on the other
// factors, U(g) multiplication on every factor.
// Componentwise product. b_coeff_slot names the factor b's coefficients are
// attached to; only that slot's derivatives of a differentiate them. The
// default (slot 0) multiplies two tensors in leading normal form; a tensor
// built as 1 (x) b carries b's coefficient on slot 1, etc. The placement must
// stay inside the slots covered by a coproduct on the a side, where the
// compatibility axiom Delta(x) (beta(c) (x) 1 - 1 (x) alpha(c)) = 0 makes the
// product independent of the chosen representative.
HTensor h_mul(const Context& ctx, const HTensor& a, const HTensor& b, std::uint32_t b_coeff_slot = 0);

// Coproduct applied to one slot (0-based); arity grows by one.
HTensor h_coproduct_slot(const Context& ctx, const HTensor& t, std::uint32_t slot);

// Counit applied to one slot of an arity >= 2 tensor; arity shrinks by one.
HTensor h_counit_slot(const Context& ctx, const HTensor& t, std::uint32_t slot);

// Counit of an arity-1 element: eps(p d^alpha (x) u) = p delta_{alpha,0} eps(u).
PolySeries h_counit(const Context& ctx, const HTensor& t);

// Unit factor inserted at `pos` (0 = prepend, arity = append).
HTensor h_insert_unit(const Context& ctx, const HTensor& t, std::uint32_t pos);

// Source/target embeddings R -> H (both are multiplication operators here).
HTensor h_source(const Context& ctx, const PolySeries& a);

// Anchor action of an arity-1 element on a coefficient: x |> a = eps(x alpha(a)).
PolySeries anchor_act(const Context& ctx, const HTensor& x, const PolySeries& a);

struct TwistorReport {
	bool cocycle_pass = false, counit_pass = false, sharp_invertible = false;
	HTensor cocycle_residual;        // arity 3
	HTensor counit_res1, counit_res2;  // arity 1
	bool pass() const { return cocycle_pass && counit_pass; }
};

// Twistor conditions for an arity-2 tensor F:
//   (Delta (x) id)F . (F (x) 1) = (id (x) Delta)F . (1 (x) F)
//   (eps (x) id)F = (id (x) eps)F = 1
TwistorReport check_twistor(const Context& ctx, const HTensor& f);

// a *_F b = sum (F_1i |> a)(F_2i |> b).
PolySeries twisted_product(const Context& ctx, const HTensor& f, const PolySeries& a,
                           const PolySeries& b);

// alpha_F(a) = sum alpha(F_1i |> a) . F_2i  and  beta_F(a) = sum beta(F_2i |> a) . F_1i.
HTensor twisted_source(const Context& ctx, const HTensor& f, const PolySeries& a);
HTensor twisted_target(const Context& ctx, const HTensor& f, const PolySeries& a);

// Delta_F(x) = (F#)^{-1}(Delta(x) . F), where F# is left multiplication by F
// on canonical representatives; solved order by order (F must be unital).
HTensor twisted_coproduct(const Context& ctx, const HTensor& f, const HTensor& x);

}  // namespace gq
