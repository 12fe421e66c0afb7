#include "gq/sampler.hpp"

#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>

#include "gq/lie.hpp"
#include "gq/linalg.hpp"
#include "gq/multi_index.hpp"
#include "gq/uea.hpp"

namespace gq {

namespace {

std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::uint32_t d) {
	std::vector<MultiIndex> out;
	for (const auto& m : multi_indices_up_to(n, d))
		if (m.degree() == d) out.push_back(m);
	return out;
}

// Small signed integer drawn by modulo reduction from the raw engine; the
// stream is fully pinned by the seed, independent of platform distributions.
std::int64_t small_int(std::mt19937_64& rng) { return static_cast<std::int64_t>(rng() % 9) - 4; }

MultiIndex random_index(std::mt19937_64& rng, std::size_t n, std::uint32_t maxdeg) {
	MultiIndex m(n);
	const std::uint32_t d = static_cast<std::uint32_t>(rng() % (maxdeg + 1));
	for (std::uint32_t t = 0; t < d; ++t) ++m[rng() % n];
	return m;
}

}  // namespace

InvariantTwistSampler::InvariantTwistSampler(const Context& ctx, std::uint32_t max_coeff_degree,
                                             std::uint32_t max_leg_degree)
    : ctx_(ctx) {
	if (ctx.jet_mode()) throw InputError("InvariantTwistSampler: exact coefficient mode required");
	const auto& pair = ctx.pair();
	const std::uint32_t nl = pair.dim_l(), ng = pair.dim_g();
	// ad_{l_i} as a derivation on an S(g) monomial
	auto leg_act = [&](std::uint32_t i, const MultiIndex& mu) {
		std::map<MultiIndex, Rational> img;
		for (std::uint32_t j = 0; j < ng; ++j) {
			if (mu[j] == 0) continue;
			for (const auto& t : pair.bracket(i, j)) {
				MultiIndex m2 = mu;
				--m2[j];
				++m2[t.k];
				img[m2] += t.c * Rational(mu[j]);
			}
		}
		return img;
	};
	for (std::uint32_t dc = 0; dc <= max_coeff_degree; ++dc)
		for (std::uint32_t da = 0; da <= max_leg_degree; ++da)
			for (std::uint32_t db = 0; db <= max_leg_degree; ++db) {
				if (dc + da + db == 0) continue;  // constants only rescale the unit
				const auto mc = monomials_of_degree(nl, dc);
				const auto ma = monomials_of_degree(ng, da);
				const auto mb = monomials_of_degree(ng, db);
				std::map<MultiIndex, std::size_t> pc, pa, pb;
				for (std::size_t t = 0; t < mc.size(); ++t) pc[mc[t]] = t;
				for (std::size_t t = 0; t < ma.size(); ++t) pa[ma[t]] = t;
				for (std::size_t t = 0; t < mb.size(); ++t) pb[mb[t]] = t;
				const std::size_t B = mc.size() * ma.size() * mb.size();
				auto flat = [&](std::size_t ic, std::size_t ia, std::size_t ib) {
					return (ic * ma.size() + ia) * mb.size() + ib;
				};
				// rows: image coordinates of every generator action, stacked
				RatMatrix m(nl * B, std::vector<Rational>(B, Rational(0)));
				for (std::uint32_t i = 0; i < nl; ++i)
					for (std::size_t ic = 0; ic < mc.size(); ++ic)
						for (std::size_t ia = 0; ia < ma.size(); ++ia)
							for (std::size_t ib = 0; ib < mb.size(); ++ib) {
								const std::size_t col = flat(ic, ia, ib);
								const Poly ad = coadjoint_act(
								    pair, i, Poly::monomial(ctx.exact_ring(), mc[ic]));
								for (const auto& [m2, c] : ad.terms())
									m[i * B + flat(pc.at(m2), ia, ib)][col] += c;
								for (const auto& [m2, c] : leg_act(i, ma[ia]))
									m[i * B + flat(ic, pa.at(m2), ib)][col] += c;
								for (const auto& [m2, c] : leg_act(i, mb[ib]))
									m[i * B + flat(ic, ia, pb.at(m2))][col] += c;
							}
				for (const auto& v : nullspace(std::move(m), B)) {
					CoeffTensor elem(ctx, 2);
					for (std::size_t ic = 0; ic < mc.size(); ++ic)
						for (std::size_t ia = 0; ia < ma.size(); ++ia)
							for (std::size_t ib = 0; ib < mb.size(); ++ib) {
								const Rational& q = v[flat(ic, ia, ib)];
								if (is_zero(q)) continue;
								// legs enter U(g) through symmetrization,
								// which intertwines the adjoint action
								const UeaElement ua = symmetrize(ctx, ma[ia], UeaFlavor::plain);
								const UeaElement ub = symmetrize(ctx, mb[ib], UeaFlavor::plain);
								for (const auto& [wa, qa] : ua.terms())
									for (const auto& [wb, qb] : ub.terms())
										elem.add_term(
										    {wa, wb},
										    poly_series(ctx.order(),
										                Poly::monomial(ctx.exact_ring(), mc[ic],
										                               q * qa[0].value() *
										                                   qb[0].value())));
							}
					basis_.push_back(std::move(elem));
				}
			}
}

DynTwist InvariantTwistSampler::sample(std::uint64_t seed) const {
	std::mt19937_64 rng(seed);
	DynTwist f = CoeffTensor::unit(ctx_, 2);
	for (const auto& b : basis_) {
		const std::int64_t c = small_int(rng);
		if (c == 0) continue;
		for (const auto& [k, cc] : b.terms()) f.add_term(k, (cc * Rational(c)).shift(1));
	}
	if (!dyn_check_invariance(ctx_, f).pass)
		throw std::logic_error("InvariantTwistSampler: sampled twist failed re-verification");
	return f;
}

DynTwist random_unital_twist(const Context& ctx, std::uint64_t seed, std::uint32_t max_coeff_degree,
                             std::uint32_t max_leg_degree) {
	std::mt19937_64 rng(seed);
	const std::uint32_t nl = ctx.pair().dim_l(), ng = ctx.pair().dim_g();
	DynTwist f = CoeffTensor::unit(ctx, 2);
	for (std::uint32_t p = 1; p <= ctx.order(); ++p)
		for (int t = 0; t < 3; ++t) {
			const std::int64_t c = small_int(rng);
			if (c == 0) continue;
			const MultiIndex mc = random_index(rng, nl, max_coeff_degree);
			PolySeries coeff =
			    poly_series(ctx.order(), Poly::monomial(ctx.ring(), mc, Rational(c)));
			f.add_term({random_index(rng, ng, max_leg_degree), random_index(rng, ng, max_leg_degree)},
			           coeff.shift(p));
		}
	return f;
}

}  // namespace gq
