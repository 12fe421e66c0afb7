#include "gq/weyl.hpp"

#include <algorithm>

#include "gq/detail/caches.hpp"
#include "gq/lie.hpp"
#include "gq/uea.hpp"

namespace gq {

void DiffOp::add_term(MultiIndex alpha, PolySeries coeff) {
	if (coeff.is_zero()) return;
	auto it = terms_.find(alpha);
	if (it == terms_.end()) {
		terms_.emplace(std::move(alpha), std::move(coeff));
	} else {
		it->second += coeff;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
	for (const auto& [a, c] : o.terms_) add_term(a, c);
	return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
	for (const auto& [a, c] : o.terms_) add_term(a, -c);
	return *this;
}

PolySeries DiffOp::apply(const PolySeries& f) const {
	PolySeries r = poly_series(order_, ring_);
	for (const auto& [a, c] : terms_) r += c * series_partial(f, a);
	return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
	DiffOp r(a.ring_, a.order_);
	for (const auto& [al, p] : a.terms_)
		for (const auto& [be, q] : b.terms_)
			for (const auto& g : multi_indices_up_to(al.size(), al.degree())) {
				if (!al.contains(g)) continue;
				const Rational c = binomial(al, g);
				r.add_term(al - g + be, (p * series_partial(q, g)) * c);
			}
	return r;
}

void BiDiffOp::add_term(MultiIndex alpha, MultiIndex beta, PolySeries coeff) {
	if (coeff.is_zero()) return;
	auto key = std::make_pair(std::move(alpha), std::move(beta));
	auto it = terms_.find(key);
	if (it == terms_.end()) {
		terms_.emplace(std::move(key), std::move(coeff));
	} else {
		it->second += coeff;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

PolySeries BiDiffOp::apply(const PolySeries& f, const PolySeries& g) const {
	PolySeries r = poly_series(order_, ring_);
	for (const auto& [ab, c] : terms_) r += c * series_partial(f, ab.first) * series_partial(g, ab.second);
	return r;
}

BiDiffOp BiDiffOp::embedded(const PolyRing& target) const {
	BiDiffOp r(target, order_);
	for (const auto& [ab, c] : terms_) {
		PolySeries e = poly_series(order_, target);
		for (std::uint32_t k = 0; k <= order_; ++k) e[k] = c[k].embed(target);
		r.add_term(ab.first, ab.second, std::move(e));
	}
	return r;
}

DiffOp extract_diffop(const Context& ctx, const std::function<PolySeries(const Poly&)>& op) {
	const PolyRing& ring = ctx.exact_ring();
	const std::uint32_t K = ctx.order();
	DiffOp d(ring, K);
	// d^sigma lambda^alpha = (alpha!/(alpha-sigma)!) lambda^(alpha-sigma), so
	// probing monomials by ascending degree makes the system triangular.
	for (const auto& alpha : multi_indices_up_to(ring.nvars(), K)) {
		PolySeries r = op(Poly::monomial(ring, alpha));
		for (const auto& [sigma, p] : d.terms()) {
			if (!alpha.contains(sigma)) continue;
			const Rational c = alpha.factorial() / (alpha - sigma).factorial();
			r -= p.scaled_by(Poly::monomial(ring, alpha - sigma, c));
		}
		r *= Rational(1) / alpha.factorial();
		for (std::uint32_t k = 0; k < alpha.degree() && k <= K; ++k)
			if (!r[k].is_zero())
				throw std::logic_error("extract_diffop: derivative order exceeds hbar order at slot " +
				                       std::to_string(k));
		d.add_term(alpha, std::move(r));
	}
	for (const auto& m : multi_indices_up_to(ring.nvars(), K + 2)) {
		const Poly probe = Poly::monomial(ring, m);
		if (!(d.apply(poly_series(K, probe)) == op(probe)))
			throw std::logic_error("extract_diffop: extracted operator disagrees with the map on a monomial "
			                       "of degree " +
			                       std::to_string(m.degree()));
	}
	return d;
}

BiDiffOp extract_bidiffop(const Context& ctx,
                          const std::function<PolySeries(const Poly&, const Poly&)>& star) {
	const PolyRing& ring = ctx.exact_ring();
	const std::uint32_t K = ctx.order();
	BiDiffOp d(ring, K);
	const auto grid = multi_indices_up_to(ring.nvars(), K);
	std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
	for (const auto& a : grid)
		for (const auto& b : grid) pairs.emplace_back(a, b);
	std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
		const auto dx = x.first.degree() + x.second.degree();
		const auto dy = y.first.degree() + y.second.degree();
		return dx != dy ? dx < dy : x < y;
	});
	for (const auto& [alpha, beta] : pairs) {
		PolySeries r = star(Poly::monomial(ring, alpha), Poly::monomial(ring, beta));
		for (const auto& [st, p] : d.terms()) {
			if (!alpha.contains(st.first) || !beta.contains(st.second)) continue;
			const Rational c = (alpha.factorial() / (alpha - st.first).factorial()) *
			                   (beta.factorial() / (beta - st.second).factorial());
			r -= p.scaled_by(Poly::monomial(ring, alpha - st.first + beta - st.second, c));
		}
		r *= Rational(1) / (alpha.factorial() * beta.factorial());
		const std::uint32_t bound = std::max(alpha.degree(), beta.degree());
		for (std::uint32_t k = 0; k < bound && k <= K; ++k)
			if (!r[k].is_zero())
				throw std::logic_error("extract_bidiffop: derivative order exceeds hbar order at slot " +
				                       std::to_string(k));
		d.add_term(alpha, beta, std::move(r));
	}
	for (const auto& ma : multi_indices_up_to(ring.nvars(), K + 2))
		for (const auto& mb : multi_indices_up_to(ring.nvars(), K + 2)) {
			const Poly pa = Poly::monomial(ring, ma), pb = Poly::monomial(ring, mb);
			if (!(d.apply(poly_series(K, pa), poly_series(K, pb)) == star(pa, pb)))
				throw std::logic_error(
				    "extract_bidiffop: extracted operator disagrees with the map on monomials of degrees " +
				    std::to_string(ma.degree()) + ", " + std::to_string(mb.degree()));
		}
	return d;
}

const BiDiffOp& theta_pbw(const Context& ctx) {
	auto& slot = ctx.caches().theta;
	if (!slot)
		slot = extract_bidiffop(ctx, [&ctx](const Poly& f, const Poly& g) { return pbw_star(ctx, f, g); });
	return *slot;
}

const BiDiffOp& theta_pbw_active(const Context& ctx) {
	if (!ctx.jet_mode()) return theta_pbw(ctx);
	auto& slot = ctx.caches().theta_active;
	if (!slot) slot = theta_pbw(ctx).embedded(ctx.ring());
	return *slot;
}

PolySeries star_via_theta(const Context& ctx, const PolySeries& f, const PolySeries& g) {
	return theta_pbw_active(ctx).apply(f, g);
}

DiffOp star_mult_op(const Context& ctx, const PolySeries& f) {
	if (!ctx.jet_mode()) {
		return extract_diffop(
		    ctx, [&ctx, &f](const Poly& g) { return pbw_star(ctx, f, poly_series(ctx.order(), g)); });
	}
	// jet mode: f * g = sum c_ab (d^a f)(d^b g), so the operator coefficient at
	// d^b is sum_a c_ab d^a f.
	DiffOp d(ctx.ring(), ctx.order());
	for (const auto& [ab, c] : theta_pbw_active(ctx).terms()) {
		PolySeries fa = f;
		for (std::uint32_t k = 0; k <= fa.order(); ++k) fa[k] = fa[k].partial(ab.first);
		d.add_term(ab.second, c * fa);
	}
	return d;
}

}  // namespace gq
