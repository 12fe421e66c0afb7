#include "gq/groupoid.hpp"

#include <stdexcept>

#include "gq/detail/caches.hpp"
#include "gq/lie.hpp"

namespace gq {

HTensor::HTensor(const Context& ctx, std::uint32_t arity)
    : arity_(arity), order_(ctx.order()), ring_(ctx.ring()) {}

HTensor HTensor::unit(const Context& ctx, std::uint32_t arity) {
	HTensor t(ctx, arity);
	HKey key{std::vector<MultiIndex>(arity, MultiIndex(ctx.pair().dim_l())),
	         std::vector<PbwMonomial>(arity, PbwMonomial(ctx.pair().dim_g()))};
	t.add_term(std::move(key), ctx.one_series());
	return t;
}

HTensor HTensor::term(const Context& ctx, HKey key, PolySeries coeff) {
	if (key.alpha.size() != key.mono.size()) throw std::invalid_argument("h-tensor: ragged key");
	HTensor t(ctx, static_cast<std::uint32_t>(key.alpha.size()));
	t.add_term(std::move(key), std::move(coeff));
	return t;
}

void HTensor::add_term(HKey key, PolySeries coeff) {
	if (key.alpha.size() != arity_ || key.mono.size() != arity_)
		throw std::invalid_argument("h-tensor: key arity mismatch");
	if (coeff.is_zero()) return;
	auto it = terms_.find(key);
	if (it == terms_.end()) {
		terms_.emplace(std::move(key), std::move(coeff));
	} else {
		it->second += coeff;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

HTensor& HTensor::operator+=(const HTensor& o) {
	if (arity_ != o.arity_) throw std::invalid_argument("h-tensor: arity mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, c);
	return *this;
}

HTensor& HTensor::operator-=(const HTensor& o) {
	if (arity_ != o.arity_) throw std::invalid_argument("h-tensor: arity mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, -c);
	return *this;
}

HTensor& HTensor::operator*=(const Rational& q) {
	if (gq::is_zero(q)) {
		terms_.clear();
		return *this;
	}
	for (auto& [k, c] : terms_) c *= q;
	return *this;
}

bool HTensor::leading_is_unit() const {
	bool unit_seen = false;
	for (const auto& [k, c] : terms_) {
		bool trivial = true;
		for (std::size_t i = 0; i < k.alpha.size(); ++i)
			if (!k.alpha[i].is_zero() || !k.mono[i].is_zero()) trivial = false;
		if (trivial) {
			if (!(c[0] == Poly::constant(ring_, Rational(1)))) return false;
			unit_seen = true;
		} else if (!c[0].is_zero()) {
			return false;
		}
	}
	return unit_seen;
}

HTensor htensor_normalize(const Context& ctx, const std::vector<RawTerm>& raw) {
	if (raw.empty()) throw std::invalid_argument("h-tensor: empty raw input");
	HTensor out(ctx, static_cast<std::uint32_t>(raw.front().size()));
	for (const auto& term : raw) {
		if (term.size() != out.arity()) throw std::invalid_argument("h-tensor: ragged raw input");
		PolySeries c = ctx.one_series();
		HKey key;
		for (const auto& f : term) {
			c *= f.coeff;
			key.alpha.push_back(f.alpha);
			key.mono.push_back(f.mono);
		}
		out.add_term(std::move(key), std::move(c));
	}
	return out;
}

HTensor h_mul(const Context& ctx, const HTensor& a, const HTensor& b, std::uint32_t b_coeff_slot) {
	if (a.arity() != b.arity()) throw std::invalid_argument("h_mul: arity mismatch");
	if (b_coeff_slot >= a.arity()) throw std::invalid_argument("h_mul: coefficient slot out of range");
	const std::uint32_t n = a.arity(), K = ctx.order();
	const std::uint32_t cs = b_coeff_slot;
	HTensor out(ctx, n);
	for (const auto& [ka, ca] : a.terms())
		for (const auto& [kb, cb] : b.terms()) {
			if (ca.valuation() + cb.valuation() > K) continue;
			// U(g) legs: plain PBW products, one option list per slot
			std::vector<const std::map<PbwMonomial, Rational>*> uopts(n);
			for (std::uint32_t i = 0; i < n; ++i) uopts[i] = &word_product(ctx, ka.mono[i], kb.mono[i]);
			// the slot holding b's coefficient is the only one where a
			// derivative hits it: (d^as)(cb d^bs) = sum_g C(as,g)(d^g cb) d^(as-g+bs);
			// the resulting functions slide to the front by the base-ring relations
			for (const auto& g : multi_indices_up_to(ka.alpha[cs].size(), ka.alpha[cs].degree())) {
				if (!ka.alpha[cs].contains(g)) continue;
				PolySeries c = ca * series_partial(cb, g);
				c *= binomial(ka.alpha[cs], g);
				if (c.is_zero()) continue;
				HKey base;
				for (std::uint32_t i = 0; i < n; ++i)
					base.alpha.push_back(i == cs ? ka.alpha[i] - g + kb.alpha[i]
					                             : ka.alpha[i] + kb.alpha[i]);
				// odometer over the U-leg options
				std::vector<std::map<PbwMonomial, Rational>::const_iterator> pos(n);
				for (std::uint32_t i = 0; i < n; ++i) pos[i] = uopts[i]->begin();
				while (true) {
					Rational q(1);
					HKey key = base;
					for (std::uint32_t i = 0; i < n; ++i) {
						q *= pos[i]->second;
						key.mono.push_back(pos[i]->first);
					}
					out.add_term(std::move(key), c * q);
					std::uint32_t i = 0;
					for (; i < n; ++i) {
						if (++pos[i] != uopts[i]->end()) break;
						pos[i] = uopts[i]->begin();
					}
					if (i == n) break;
				}
			}
		}
	return out;
}

HTensor h_coproduct_slot(const Context& ctx, const HTensor& t, std::uint32_t slot) {
	if (slot >= t.arity()) throw std::invalid_argument("h_coproduct_slot: slot out of range");
	HTensor out(ctx, t.arity() + 1);
	for (const auto& [k, c] : t.terms()) {
		const MultiIndex& a = k.alpha[slot];
		// Delta_D(d^a) = sum C(a,g) d^g (x) d^(a-g); Delta_U splits the PBW
		// monomial binomially (legs of a sorted word stay sorted).
		for (const auto& g : multi_indices_up_to(a.size(), a.degree())) {
			if (!a.contains(g)) continue;
			const Rational cg = binomial(a, g);
			for (const auto& split : uea_coproduct(k.mono[slot])) {
				HKey key;
				for (std::uint32_t i = 0; i < slot; ++i) {
					key.alpha.push_back(k.alpha[i]);
					key.mono.push_back(k.mono[i]);
				}
				key.alpha.push_back(g);
				key.mono.push_back(split.left);
				key.alpha.push_back(a - g);
				key.mono.push_back(split.right);
				for (std::uint32_t i = slot + 1; i < t.arity(); ++i) {
					key.alpha.push_back(k.alpha[i]);
					key.mono.push_back(k.mono[i]);
				}
				out.add_term(std::move(key), c * (cg * split.coeff));
			}
		}
	}
	return out;
}

HTensor h_counit_slot(const Context& ctx, const HTensor& t, std::uint32_t slot) {
	if (t.arity() < 2) throw std::invalid_argument("h_counit_slot: arity must be >= 2");
	if (slot >= t.arity()) throw std::invalid_argument("h_counit_slot: slot out of range");
	HTensor out(ctx, t.arity() - 1);
	for (const auto& [k, c] : t.terms()) {
		if (!k.alpha[slot].is_zero() || !k.mono[slot].is_zero()) continue;
		HKey key;
		for (std::uint32_t i = 0; i < t.arity(); ++i) {
			if (i == slot) continue;
			key.alpha.push_back(k.alpha[i]);
			key.mono.push_back(k.mono[i]);
		}
		out.add_term(std::move(key), c);
	}
	return out;
}

PolySeries h_counit(const Context& ctx, const HTensor& t) {
	if (t.arity() != 1) throw std::invalid_argument("h_counit: arity must be 1");
	PolySeries r = ctx.zero_series();
	for (const auto& [k, c] : t.terms())
		if (k.alpha[0].is_zero() && k.mono[0].is_zero()) r += c;
	return r;
}

HTensor h_insert_unit(const Context& ctx, const HTensor& t, std::uint32_t pos) {
	if (pos > t.arity()) throw std::invalid_argument("h_insert_unit: position out of range");
	HTensor out(ctx, t.arity() + 1);
	for (const auto& [k, c] : t.terms()) {
		HKey key = k;
		key.alpha.insert(key.alpha.begin() + pos, MultiIndex(ctx.pair().dim_l()));
		key.mono.insert(key.mono.begin() + pos, PbwMonomial(ctx.pair().dim_g()));
		out.add_term(std::move(key), c);
	}
	return out;
}

HTensor h_source(const Context& ctx, const PolySeries& a) {
	HTensor t(ctx, 1);
	HKey key{{MultiIndex(ctx.pair().dim_l())}, {PbwMonomial(ctx.pair().dim_g())}};
	t.add_term(std::move(key), a);
	return t;
}

PolySeries anchor_act(const Context& ctx, const HTensor& x, const PolySeries& a) {
	if (x.arity() != 1) throw std::invalid_argument("anchor_act: arity must be 1");
	PolySeries r = ctx.zero_series();
	for (const auto& [k, c] : x.terms()) {
		if (!k.mono[0].is_zero()) continue;  // eps_U kills every nonempty monomial
		r += c * series_partial(a, k.alpha[0]);
	}
	return r;
}

TwistorReport check_twistor(const Context& ctx, const HTensor& f) {
	if (f.arity() != 2) throw std::invalid_argument("check_twistor: arity must be 2");
	TwistorReport rep;
	const HTensor lhs = h_mul(ctx, h_coproduct_slot(ctx, f, 0), h_insert_unit(ctx, f, 2));
	// 1 (x) F keeps F's coefficients on its own first factor, slot 1 here
	const HTensor rhs = h_mul(ctx, h_coproduct_slot(ctx, f, 1), h_insert_unit(ctx, f, 0), 1);
	rep.cocycle_residual = lhs - rhs;
	rep.cocycle_pass = rep.cocycle_residual.is_zero();
	const HTensor one = HTensor::unit(ctx, 1);
	rep.counit_res1 = h_counit_slot(ctx, f, 0) - one;
	rep.counit_res2 = h_counit_slot(ctx, f, 1) - one;
	rep.counit_pass = rep.counit_res1.is_zero() && rep.counit_res2.is_zero();
	rep.sharp_invertible = f.leading_is_unit();
	return rep;
}

PolySeries twisted_product(const Context& ctx, const HTensor& f, const PolySeries& a,
                           const PolySeries& b) {
	if (f.arity() != 2) throw std::invalid_argument("twisted_product: arity must be 2");
	PolySeries r = ctx.zero_series();
	for (const auto& [k, c] : f.terms()) {
		if (!k.mono[0].is_zero() || !k.mono[1].is_zero()) continue;
		r += c * series_partial(a, k.alpha[0]) * series_partial(b, k.alpha[1]);
	}
	return r;
}

HTensor twisted_source(const Context& ctx, const HTensor& f, const PolySeries& a) {
	if (f.arity() != 2) throw std::invalid_argument("twisted_source: arity must be 2");
	HTensor out(ctx, 1);
	for (const auto& [k, c] : f.terms()) {
		if (!k.mono[0].is_zero()) continue;
		out.add_term(HKey{{k.alpha[1]}, {k.mono[1]}}, c * series_partial(a, k.alpha[0]));
	}
	return out;
}

HTensor twisted_target(const Context& ctx, const HTensor& f, const PolySeries& a) {
	if (f.arity() != 2) throw std::invalid_argument("twisted_target: arity must be 2");
	HTensor out(ctx, 1);
	for (const auto& [k, c] : f.terms()) {
		if (!k.mono[1].is_zero()) continue;
		out.add_term(HKey{{k.alpha[0]}, {k.mono[0]}}, c * series_partial(a, k.alpha[1]));
	}
	return out;
}

HTensor twisted_coproduct(const Context& ctx, const HTensor& f, const HTensor& x) {
	if (f.arity() != 2 || x.arity() != 1)
		throw std::invalid_argument("twisted_coproduct: need arity-2 twist and arity-1 argument");
	if (!f.leading_is_unit())
		throw InputError("twisted_coproduct: twist is not unital at hbar^0, F# is not invertible");
	const HTensor rhs = h_mul(ctx, h_coproduct_slot(ctx, x, 0), f);
	// F y = rhs with F = unit + N, N of positive hbar valuation: iterate
	// y <- rhs - N y; each pass fixes one more hbar order.
	const HTensor n = f - HTensor::unit(ctx, 2);
	HTensor y = rhs;
	for (std::uint32_t pass = 0; pass <= ctx.order(); ++pass) y = rhs - h_mul(ctx, n, y);
	if (!(h_mul(ctx, f, y) == rhs)) throw std::logic_error("twisted_coproduct: solver failed to converge");
	return y;
}

}  // namespace gq
