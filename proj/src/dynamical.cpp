#include "gq/dynamical.hpp"

#include <algorithm>
#include <stdexcept>

#include "gq/detail/caches.hpp"
#include "gq/lie.hpp"
#include "gq/weyl.hpp"

namespace gq {

CoeffTensor::CoeffTensor(const Context& ctx, std::uint32_t legs)
    : legs_(legs), order_(ctx.order()), ring_(ctx.ring()) {}

CoeffTensor CoeffTensor::unit(const Context& ctx, std::uint32_t legs) {
	CoeffTensor t(ctx, legs);
	t.add_term(std::vector<PbwMonomial>(legs, PbwMonomial(ctx.pair().dim_g())), ctx.one_series());
	return t;
}

CoeffTensor CoeffTensor::term(const Context& ctx, std::vector<PbwMonomial> legs, PolySeries coeff) {
	CoeffTensor t(ctx, static_cast<std::uint32_t>(legs.size()));
	t.add_term(std::move(legs), std::move(coeff));
	return t;
}

void CoeffTensor::add_term(std::vector<PbwMonomial> key, PolySeries coeff) {
	if (key.size() != legs_) throw std::invalid_argument("coeff tensor: key leg count mismatch");
	if (coeff.is_zero()) return;
	auto it = terms_.find(key);
	if (it == terms_.end()) {
		terms_.emplace(std::move(key), std::move(coeff));
	} else {
		it->second += coeff;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

CoeffTensor& CoeffTensor::operator+=(const CoeffTensor& o) {
	if (legs_ != o.legs_) throw std::invalid_argument("coeff tensor: leg count mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, c);
	return *this;
}

CoeffTensor& CoeffTensor::operator-=(const CoeffTensor& o) {
	if (legs_ != o.legs_) throw std::invalid_argument("coeff tensor: leg count mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, -c);
	return *this;
}

bool CoeffTensor::leading_is_unit() const {
	bool unit_seen = false;
	for (const auto& [k, c] : terms_) {
		bool trivial = true;
		for (const auto& m : k)
			if (!m.is_zero()) trivial = false;
		if (trivial) {
			if (!(c[0] == Poly::constant(ring_, Rational(1)))) return false;
			unit_seen = true;
		} else if (!c[0].is_zero()) {
			return false;
		}
	}
	return unit_seen;
}

namespace {

PolySeries coeff_star(const Context& ctx, const PolySeries& a, const PolySeries& b) {
	return ctx.jet_mode() ? star_via_theta(ctx, a, b) : pbw_star(ctx, a, b);
}

// W(mu) = sum over all generator sequences of content mu, each rewritten to
// the PBW basis of U(g). Plain rewriting keeps coefficients at hbar^0.
std::map<PbwMonomial, Rational> word_sum(const Context& ctx, const MultiIndex& mu) {
	std::vector<std::uint32_t> word;
	for (std::uint32_t i = 0; i < mu.size(); ++i) word.insert(word.end(), mu[i], i);
	std::map<PbwMonomial, Rational> out;
	do {
		const UeaElement n = pbw_normalize(ctx, word, UeaFlavor::plain);
		for (const auto& [m, c] : n.terms()) out[m] += c[0].value();
	} while (std::next_permutation(word.begin(), word.end()));
	for (auto it = out.begin(); it != out.end();)
		it = is_zero(it->second) ? out.erase(it) : std::next(it);
	return out;
}

// [x_i, m] in U(g), plain product.
std::map<PbwMonomial, Rational> gen_commutator(const Context& ctx, std::uint32_t i,
                                               const PbwMonomial& m) {
	const PbwMonomial gen = PbwMonomial::unit(ctx.pair().dim_g(), i);
	std::map<PbwMonomial, Rational> out = word_product(ctx, gen, m);
	for (const auto& [w, q] : word_product(ctx, m, gen)) {
		out[w] -= q;
		if (is_zero(out[w])) out.erase(w);
	}
	return out;
}

}  // namespace

CoeffTensor ct_mul_star(const Context& ctx, const CoeffTensor& a, const CoeffTensor& b) {
	if (a.legs() != b.legs()) throw std::invalid_argument("ct_mul_star: leg count mismatch");
	const std::uint32_t n = a.legs(), K = ctx.order();
	CoeffTensor out(ctx, n);
	for (const auto& [ka, ca] : a.terms())
		for (const auto& [kb, cb] : b.terms()) {
			if (ca.valuation() + cb.valuation() > K) continue;
			const PolySeries c = coeff_star(ctx, ca, cb);
			if (c.is_zero()) continue;
			std::vector<const std::map<PbwMonomial, Rational>*> opts(n);
			for (std::uint32_t i = 0; i < n; ++i) opts[i] = &word_product(ctx, ka[i], kb[i]);
			std::vector<std::map<PbwMonomial, Rational>::const_iterator> pos(n);
			for (std::uint32_t i = 0; i < n; ++i) pos[i] = opts[i]->begin();
			while (true) {
				Rational q(1);
				std::vector<PbwMonomial> key;
				key.reserve(n);
				for (std::uint32_t i = 0; i < n; ++i) {
					q *= pos[i]->second;
					key.push_back(pos[i]->first);
				}
				out.add_term(std::move(key), c * q);
				std::uint32_t i = 0;
				for (; i < n; ++i) {
					if (++pos[i] != opts[i]->end()) break;
					pos[i] = opts[i]->begin();
				}
				if (i == n) break;
			}
		}
	return out;
}

CoeffTensor ct_coproduct_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t leg) {
	if (leg >= t.legs()) throw std::invalid_argument("ct_coproduct_leg: leg out of range");
	CoeffTensor out(ctx, t.legs() + 1);
	for (const auto& [k, c] : t.terms())
		for (const auto& split : uea_coproduct(k[leg])) {
			std::vector<PbwMonomial> key(k.begin(), k.begin() + leg);
			key.push_back(split.left);
			key.push_back(split.right);
			key.insert(key.end(), k.begin() + leg + 1, k.end());
			out.add_term(std::move(key), c * split.coeff);
		}
	return out;
}

CoeffTensor ct_counit_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t leg) {
	if (leg >= t.legs()) throw std::invalid_argument("ct_counit_leg: leg out of range");
	CoeffTensor out(ctx, t.legs() - 1);
	for (const auto& [k, c] : t.terms()) {
		if (!k[leg].is_zero()) continue;
		std::vector<PbwMonomial> key(k.begin(), k.begin() + leg);
		key.insert(key.end(), k.begin() + leg + 1, k.end());
		out.add_term(std::move(key), c);
	}
	return out;
}

CoeffTensor ct_insert_unit_leg(const Context& ctx, const CoeffTensor& t, std::uint32_t pos) {
	if (pos > t.legs()) throw std::invalid_argument("ct_insert_unit_leg: position out of range");
	CoeffTensor out(ctx, t.legs() + 1);
	for (const auto& [k, c] : t.terms()) {
		std::vector<PbwMonomial> key = k;
		key.insert(key.begin() + pos, PbwMonomial(ctx.pair().dim_g()));
		out.add_term(std::move(key), c);
	}
	return out;
}

CoeffTensor ct_swap_legs(const Context& ctx, const CoeffTensor& t) {
	if (t.legs() != 2) throw std::invalid_argument("ct_swap_legs: need exactly two legs");
	CoeffTensor out(ctx, 2);
	for (const auto& [k, c] : t.terms()) out.add_term({k[1], k[0]}, c);
	return out;
}

DynCounitReport dyn_check_counit(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("dyn_check_counit: need exactly two legs");
	DynCounitReport rep;
	const CoeffTensor one = CoeffTensor::unit(ctx, 1);
	rep.residual_left = ct_counit_leg(ctx, f, 0) - one;
	rep.residual_right = ct_counit_leg(ctx, f, 1) - one;
	rep.pass = rep.residual_left.is_zero() && rep.residual_right.is_zero();
	return rep;
}

CoeffTensor dyn_shift12(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("dyn_shift12: need exactly two legs");
	const std::uint32_t K = ctx.order(), nl = ctx.pair().dim_l();
	CoeffTensor out(ctx, 3);
	for (const auto& [k, c] : f.terms())
		for (const auto& mu : multi_indices_up_to(nl, K)) {
			const std::uint32_t deg = mu.degree();
			if (c.valuation() + deg > K) continue;
			PolySeries cs = series_partial(c, mu).shift(deg);
			if (cs.is_zero()) continue;
			cs *= Rational(1) / factorial(deg);
			for (const auto& [w, q] : word_sum(ctx, mu))
				out.add_term({k[0], k[1], w}, cs * q);
		}
	return out;
}

DynCocycleReport dyn_check_cocycle(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("dyn_check_cocycle: need exactly two legs");
	DynCocycleReport rep;
	const CoeffTensor lhs = ct_mul_star(ctx, ct_coproduct_leg(ctx, f, 0), dyn_shift12(ctx, f));
	const CoeffTensor rhs = ct_mul_star(ctx, ct_coproduct_leg(ctx, f, 1), ct_insert_unit_leg(ctx, f, 0));
	rep.residual = lhs - rhs;
	rep.pass = rep.residual.is_zero();
	return rep;
}

DynInvarianceReport dyn_check_invariance(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("dyn_check_invariance: need exactly two legs");
	DynInvarianceReport rep;
	rep.pass = true;
	for (std::uint32_t i = 0; i < ctx.pair().dim_l(); ++i) {
		CoeffTensor r(ctx, 2);
		for (const auto& [k, c] : f.terms()) {
			PolySeries ad = c;
			for (std::uint32_t s = 0; s <= ad.order(); ++s) ad[s] = coadjoint_act(ctx.pair(), i, ad[s]);
			r.add_term(k, std::move(ad));
			for (const auto& [w, q] : gen_commutator(ctx, i, k[0])) r.add_term({w, k[1]}, c * q);
			for (const auto& [w, q] : gen_commutator(ctx, i, k[1])) r.add_term({k[0], w}, c * q);
		}
		if (!r.is_zero()) rep.pass = false;
		rep.residuals.push_back(std::move(r));
	}
	return rep;
}

HTensor lift_fbar(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("lift_fbar: need exactly two legs");
	HTensor out(ctx, 2);
	for (const auto& [k, c] : f.terms()) {
		// Delta_D of the star-multiplication operator of the coefficient, with
		// the two U(g) legs attached to the matching factors.
		const DiffOp op = star_mult_op(ctx, c);
		for (const auto& [alpha, p] : op.terms())
			for (const auto& g : multi_indices_up_to(alpha.size(), alpha.degree())) {
				if (!alpha.contains(g)) continue;
				out.add_term(HKey{{g, alpha - g}, {k[0], k[1]}}, p * binomial(alpha, g));
			}
	}
	return out;
}

const HTensor& gutt_twistor(const Context& ctx) {
	auto& slot = ctx.caches().gutt;
	if (slot) return *slot;
	const std::uint32_t K = ctx.order(), nl = ctx.pair().dim_l(), ng = ctx.pair().dim_g();
	HTensor t(ctx, 2);
	for (const auto& [ab, c] : theta_pbw_active(ctx).terms())
		for (const auto& mu : multi_indices_up_to(nl, K)) {
			const std::uint32_t deg = mu.degree();
			if (c.valuation() + deg > K) continue;
			PolySeries cs = c.shift(deg);
			if (cs.is_zero()) continue;
			cs *= Rational(1) / factorial(deg);
			for (const auto& [w, q] : word_sum(ctx, mu))
				t.add_term(HKey{{ab.first + mu, ab.second}, {PbwMonomial(ng), w}}, cs * q);
		}
	slot = std::move(t);
	return *slot;
}

HTensor bridge(const Context& ctx, const DynTwist& f) {
	return h_mul(ctx, lift_fbar(ctx, f), gutt_twistor(ctx));
}

EquivalenceReport check_equivalence(const Context& ctx, const DynTwist& f) {
	const DynInvarianceReport inv = dyn_check_invariance(ctx, f);
	if (!inv.pass)
		throw InputError("check_equivalence: twist is not l-invariant, the equivalence does not apply");
	EquivalenceReport rep;
	rep.invariance_pass = true;
	rep.dyn_counit_pass = dyn_check_counit(ctx, f).pass;
	rep.dyn_cocycle_pass = dyn_check_cocycle(ctx, f).pass;
	const TwistorReport tw = check_twistor(ctx, bridge(ctx, f));
	rep.twistor_counit_pass = tw.counit_pass;
	rep.twistor_cocycle_pass = tw.cocycle_pass;
	rep.dyn_pass = rep.dyn_counit_pass && rep.dyn_cocycle_pass;
	rep.twistor_pass = rep.twistor_counit_pass && rep.twistor_cocycle_pass;
	rep.agree = rep.dyn_pass == rep.twistor_pass;
	return rep;
}

HTensor gutt_mult_op(const Context& ctx, const Poly& g) {
	if (!(g.ring() == ctx.ring())) throw std::invalid_argument("gutt_mult_op: wrong coefficient ring");
	const std::uint32_t nl = ctx.pair().dim_l(), ng = ctx.pair().dim_g();
	// generator factors l_i *_PBW + hbar l_i, arity one
	std::vector<HTensor> gen;
	gen.reserve(nl);
	for (std::uint32_t i = 0; i < nl; ++i) {
		HTensor e(ctx, 1);
		const DiffOp op = star_mult_op(ctx, poly_series(ctx.order(), Poly::variable(ctx.ring(), i)));
		for (const auto& [alpha, p] : op.terms()) e.add_term(HKey{{alpha}, {PbwMonomial(ng)}}, p);
		PbwMonomial li(ng);
		li[i] = 1;
		e.add_term(HKey{{MultiIndex(nl)}, {li}}, ctx.one_series().shift(1));
		gen.push_back(std::move(e));
	}
	HTensor out(ctx, 1);
	for (const auto& [m, c] : g.terms()) {
		// mu!/k! times the sum over the k!/mu! orderings of the generator word
		const Rational scale = c * m.factorial() / factorial(m.degree());
		std::vector<std::uint32_t> word;
		for (std::uint32_t i = 0; i < nl; ++i) word.insert(word.end(), m[i], i);
		do {
			HTensor p = HTensor::unit(ctx, 1);
			for (std::uint32_t i : word) p = h_mul(ctx, p, gen[i]);
			p *= scale;
			out += p;
		} while (std::next_permutation(word.begin(), word.end()));
	}
	return out;
}

HTensor lift_commutator_residual(const Context& ctx, const DynTwist& f, const Poly& g) {
	const HTensor lift = lift_fbar(ctx, f);
	const HTensor d = h_coproduct_slot(ctx, gutt_mult_op(ctx, g), 0);
	return h_mul(ctx, d, lift) - h_mul(ctx, lift, d);
}

CoeffTensor exchange_r(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("exchange_r: need exactly two legs");
	if (!f.leading_is_unit()) throw InputError("exchange_r: twist is not unital at hbar^0");
	const CoeffTensor swapped = ct_swap_legs(ctx, f);
	const CoeffTensor one = CoeffTensor::unit(ctx, 2);
	// right inverse of F_21 by residual correction; the residual gains one
	// hbar order per pass because F_21 - 1 has positive valuation
	CoeffTensor x = one;
	for (std::uint32_t pass = 0; pass <= ctx.order(); ++pass)
		x += one - ct_mul_star(ctx, swapped, x);
	const CoeffTensor r = ct_mul_star(ctx, x, f);
	if (!(ct_mul_star(ctx, swapped, r) == f))
		throw std::logic_error("exchange_r: inverse iteration failed to converge");
	return r;
}

}  // namespace gq
