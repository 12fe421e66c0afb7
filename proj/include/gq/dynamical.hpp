#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gq/context.hpp"
#include "gq/groupoid.hpp"
#include "gq/series.hpp"
#include "gq/uea.hpp"

namespace gq {

// Element of C(V)[[hbar]] (x) U(g)^{(x) legs}: a function-valued tensor whose
// coefficient slot multiplies with *_PBW and whose legs multiply in U(g).
class CoeffTensor {
 public:
	CoeffTensor() = default;
	CoeffTensor(const Context& ctx, std::uint32_t legs);

	static CoeffTensor unit(const Context& ctx, std::uint32_t legs);
	static CoeffTensor term(const Context& ctx, std::vector<PbwMonomial> legs, PolySeries coeff);

	std::uint32_t legs() const { return legs_; }
	std::uint32_t order() const { return order_; }
	const std::map<std::vector<PbwMonomial>, PolySeries>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(std::vector<PbwMonomial> key, PolySeries coeff);
	CoeffTensor& operator+=(const CoeffTensor& o);
	CoeffTensor& operator-=(const CoeffTensor& o);
	friend CoeffTensor operator+(CoeffTensor a, const CoeffTensor& b) { return a += b; }
	friend CoeffTensor operator-(CoeffTensor a, const CoeffTensor& b) { return a -= b; }
	friend bool operator==(const CoeffTensor& a, const CoeffTensor& b) = default;

	bool leading_is_unit() const;

 private:
	std::uint32_t legs_ = 0, order_ = 0;
	PolyRing ring_;
	std::map<std::vector<PbwMonomial>, PolySeries> terms_;
};

// Dynamical twist F = sum_p hbar^p sum_{r,s} b_{p,rs} (x) U_r (x) U_s with
// F_0 = 1 (x) 1 (x) 1; a unital two-leg CoeffTensor.
using DynTwist = CoeffTensor;

// Legwise product, coefficient slot multiplied with *_PBW (left coefficient
// star right coefficient, in that order).
CoeffTensor ct_mul_star(const Context& ctx, const CoeffTensor& a, const CoeffTensor& b);

// Coproduct applied to one U(g) leg; legs grow by one.
CoeffTensor ct_coproduct_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t leg);

// Counit applied to one leg; legs shrink by one.
CoeffTensor ct_counit_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t leg);

CoeffTensor ct_insert_unit_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t pos);

CoeffTensor ct_swap_legs(const Context& ctx, const CoeffTensor& t);  // legs == 2

struct DynCounitReport {
	bool pass = false;
	CoeffTensor residual_left, residual_right;  // one leg each
};

// (id (x) eps (x) id)F = 1 (x) 1 = (id (x) id (x) eps)F.
DynCounitReport dyn_check_counit(const Context& ctx, const DynTwist& f);

// F_12^(3): the coefficient is Taylor-shifted along the l-directions, the new
// fourth slot receives the matching products of l-generators:
//   sum_{p,r,s} sum_k (hbar^{k+p}/k!) d^k b_{p,rs} (x) U_r (x) U_s (x) l_{i_1}...l_{i_k}.
CoeffTensor dyn_shift12(const Context& ctx, const DynTwist& f);

struct DynCocycleReport {
	bool pass = false;
	CoeffTensor residual;  // three legs
};

// Shifted cocycle condition:
//   (id (x) Delta (x) id)F *_PBW F_12^(3) = (id (x) id (x) Delta)F *_PBW F_23.
DynCocycleReport dyn_check_cocycle(const Context& ctx, const DynTwist& f);

struct DynInvarianceReport {
	bool pass = false;
	std::vector<CoeffTensor> residuals;  // one per l-generator, two legs
};

// l-invariance: ad*_{l_i} (x) 1 (x) 1 (F) + [1 (x) l_i (x) 1 + 1 (x) 1 (x) l_i, F] = 0.
DynInvarianceReport dyn_check_invariance(const Context& ctx, const DynTwist& f);

// Lift into H (x)_R H: sum hbar^p Delta(b_{p,rs} *_PBW) . (U_r (x) U_s).
HTensor lift_fbar(const Context& ctx, const DynTwist& f);

// Twistor of H induced by the PBW-to-Gutt comparison:
//   Theta_Gutt = sum_k (hbar^k/k!) ((Theta_PBW)_1 d_{i_1}..d_{i_k}) (x) ((Theta_PBW)_2 l_{i_1}..l_{i_k}).
// Cached per context.
const HTensor& gutt_twistor(const Context& ctx);

// Bridge: cal F = lift_fbar(F) . Theta_Gutt.
HTensor bridge(const Context& ctx, const DynTwist& f);

struct EquivalenceReport {
	bool invariance_pass = false;
	bool dyn_counit_pass = false, dyn_cocycle_pass = false;
	bool twistor_counit_pass = false, twistor_cocycle_pass = false;
	bool dyn_pass = false, twistor_pass = false, agree = false;
};

// Runs both characterizations of the same twist: the shifted-cocycle checks on
// F and the twistor checks on bridge(F). Throws InputError when F is not
// l-invariant (hypothesis of the equivalence).
EquivalenceReport check_equivalence(const Context& ctx, const DynTwist& f);

// Left multiplication by g in the Gutt product, as an element of H:
//   g *_Gutt = sum_k (1/k!) sum_{i_1..i_k} (d^k g / d l_{i_1}..d l_{i_k})(0)
//              (l_{i_1} *_PBW + hbar l_{i_1}) ... (l_{i_k} *_PBW + hbar l_{i_k}).
HTensor gutt_mult_op(const Context& ctx, const Poly& g);

// Delta(g *_Gutt) lift_fbar(F) - lift_fbar(F) Delta(g *_Gutt); zero whenever F
// is l-invariant.
HTensor lift_commutator_residual(const Context& ctx, const DynTwist& f, const Poly& g);

// Exchange element R = F_21^{-1} *_PBW F; the inverse exists because F_0 = 1.
CoeffTensor exchange_r(const Context& ctx, const DynTwist& f);

}  // namespace gq
