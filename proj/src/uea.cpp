#include "gq/uea.hpp"

#include <algorithm>

#include "gq/detail/caches.hpp"

namespace gq {

void UeaElement::add_term(PbwMonomial m, RatSeries c) {
	if (c.is_zero()) return;
	auto it = terms_.find(m);
	if (it == terms_.end()) {
		terms_.emplace(std::move(m), std::move(c));
	} else {
		it->second += c;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

UeaElement& UeaElement::operator+=(const UeaElement& o) {
	for (const auto& [m, c] : o.terms_) add_term(m, c);
	return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
	for (const auto& [m, c] : o.terms_) add_term(m, -c);
	return *this;
}

UeaElement& UeaElement::operator*=(const Rational& q) {
	if (gq::is_zero(q)) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, c] : terms_) c *= q;
	return *this;
}

namespace {

using MonoMap = std::map<PbwMonomial, Rational>;

std::uint32_t max_index(const PbwMonomial& m) {
	for (std::size_t i = m.size(); i-- > 0;)
		if (m[i] > 0) return static_cast<std::uint32_t>(i);
	return 0;
}

// m . x_i rewritten into the PBW basis with plain rewrites:
// m x_i = (m' x_i) x_j + m' [x_j, x_i]  where m = m' x_j, j = top generator.
MonoMap mul_by_gen(const LieAlgebraPair& pair, const PbwMonomial& m, std::uint32_t i) {
	if (m.is_zero() || max_index(m) <= i) {
		PbwMonomial r = m;
		r[i] += 1;
		return {{std::move(r), Rational(1)}};
	}
	const std::uint32_t j = max_index(m);
	PbwMonomial m1 = m;
	m1[j] -= 1;
	MonoMap out;
	for (auto& [w, c] : mul_by_gen(pair, m1, i)) {
		PbwMonomial wj = w;  // all indices of w are <= j, appending x_j is sorted
		wj[j] += 1;
		out[std::move(wj)] += c;
	}
	for (const auto& t : pair.bracket(j, i))
		for (auto& [w, c] : mul_by_gen(pair, m1, t.k)) out[w] += c * t.c;
	for (auto it = out.begin(); it != out.end();)
		it = is_zero(it->second) ? out.erase(it) : std::next(it);
	return out;
}

MonoMap word_product_uncached(const LieAlgebraPair& pair, const PbwMonomial& a, const PbwMonomial& b) {
	MonoMap acc{{a, Rational(1)}};
	for (std::uint32_t i = 0; i < b.size(); ++i)
		for (std::uint32_t rep = 0; rep < b[i]; ++rep) {
			MonoMap next;
			for (const auto& [w, c] : acc)
				for (auto& [w2, c2] : mul_by_gen(pair, w, i)) next[w2] += c * c2;
			for (auto it = next.begin(); it != next.end();)
				it = is_zero(it->second) ? next.erase(it) : std::next(it);
			acc = std::move(next);
		}
	return acc;
}

}  // namespace

const MonoMap& word_product(const Context& ctx, const PbwMonomial& a, const PbwMonomial& b) {
	auto& cache = ctx.caches().word_products;
	const auto key = std::make_pair(a, b);
	auto it = cache.find(key);
	if (it == cache.end()) it = cache.emplace(key, word_product_uncached(ctx.pair(), a, b)).first;
	return it->second;
}

UeaElement uea_mul(const Context& ctx, const UeaElement& a, const UeaElement& b) {
	if (a.flavor() != b.flavor() || a.ngen() != b.ngen() || a.order() != b.order())
		throw std::invalid_argument("uea_mul: mismatched operands");
	UeaElement out(a.flavor(), a.ngen(), a.order());
	for (const auto& [ma, ca] : a.terms())
		for (const auto& [mb, cb] : b.terms()) {
			RatSeries c = ca * cb;
			if (c.is_zero()) continue;
			const std::uint32_t total = ma.degree() + mb.degree();
			for (const auto& [w, q] : word_product(ctx, ma, mb)) {
				RatSeries cw = c;
				cw *= q;
				// hbar flavor: every unit of degree drop cost one rewrite = one hbar
				if (a.flavor() == UeaFlavor::hbar) cw = cw.shift(total - w.degree());
				out.add_term(w, std::move(cw));
			}
		}
	return out;
}

UeaElement pbw_normalize(const Context& ctx, std::span<const std::uint32_t> word, UeaFlavor flavor) {
	const std::uint32_t ngen = flavor == UeaFlavor::hbar ? ctx.pair().dim_l() : ctx.pair().dim_g();
	UeaElement acc = UeaElement::unit(flavor, ngen, ctx.order());
	for (auto i : word) {
		if (i >= ngen) throw std::invalid_argument("pbw_normalize: generator index out of range");
		UeaElement gen(flavor, ngen, ctx.order());
		gen.add_term(PbwMonomial::unit(ngen, i), rat_series(ctx.order(), Rational(1)));
		acc = uea_mul(ctx, acc, gen);
	}
	return acc;
}

UeaElement symmetrize(const Context& ctx, const PbwMonomial& content, UeaFlavor flavor) {
	const std::uint32_t ngen = flavor == UeaFlavor::hbar ? ctx.pair().dim_l() : ctx.pair().dim_g();
	if (content.size() != ngen) throw std::invalid_argument("symmetrize: content length mismatch");
	std::vector<std::uint32_t> word;
	for (std::uint32_t i = 0; i < content.size(); ++i)
		word.insert(word.end(), content[i], i);
	UeaElement out(flavor, ngen, ctx.order());
	// (1/k!) sum over S_k = (content!/k!) sum over distinct arrangements
	const Rational weight = content.factorial() / factorial(content.degree());
	do {
		UeaElement w = pbw_normalize(ctx, word, flavor);
		w *= weight;
		out += w;
	} while (std::next_permutation(word.begin(), word.end()));
	return out;
}

UeaElement pbw_map(const Context& ctx, const Poly& f) {
	if (f.ring().mode() != PolyMode::exact)
		throw InputError("pbw_map: exact coefficient mode required");
	UeaElement out(UeaFlavor::hbar, ctx.pair().dim_l(), ctx.order());
	for (const auto& [m, c] : f.terms()) {
		UeaElement s = symmetrize(ctx, m, UeaFlavor::hbar);
		s *= c;
		out += s;
	}
	return out;
}

UeaElement pbw_map(const Context& ctx, const PolySeries& f) {
	UeaElement out(UeaFlavor::hbar, ctx.pair().dim_l(), ctx.order());
	for (std::uint32_t k = 0; k <= f.order(); ++k) {
		if (f[k].is_zero()) continue;
		UeaElement uk = pbw_map(ctx, f[k]);
		for (const auto& [m, c] : uk.terms()) out.add_term(m, c.shift(k));
	}
	return out;
}

PolySeries pbw_unmap(const Context& ctx, const UeaElement& u) {
	if (u.flavor() != UeaFlavor::hbar) throw std::invalid_argument("pbw_unmap: hbar flavor required");
	const auto& ring = ctx.exact_ring();
	PolySeries f = poly_series(ctx.order(), ring);
	UeaElement r = u;
	for (std::uint32_t pass = 0; pass <= ctx.order() + 1 && !r.is_zero(); ++pass) {
		// read the remainder literally as a polynomial series
		PolySeries t = poly_series(ctx.order(), ring);
		for (const auto& [m, c] : r.terms())
			for (std::uint32_t k = 0; k <= ctx.order(); ++k)
				t[k] += Poly::monomial(ring, m, c[k].value());
		f += t;
		r -= pbw_map(ctx, t);  // kills t's terms, leaves only higher hbar valuation
	}
	if (!r.is_zero()) throw std::logic_error("pbw_unmap: valuation ascent failed");
	return f;
}

PolySeries pbw_star(const Context& ctx, const PolySeries& f, const PolySeries& g) {
	if (f[0].ring().mode() != PolyMode::exact || g[0].ring().mode() != PolyMode::exact)
		throw InputError("pbw_star: exact coefficient mode required");
	PolySeries out = poly_series(ctx.order(), ctx.exact_ring());
	for (std::uint32_t i = 0; i <= f.order(); ++i) {
		if (f[i].is_zero()) continue;
		for (std::uint32_t j = 0; i + j <= g.order(); ++j) {
			if (g[j].is_zero()) continue;
			const PolySeries s = pbw_star(ctx, f[i], g[j]);
			for (std::uint32_t k = 0; i + j + k <= out.order(); ++k) out[i + j + k] += s[k];
		}
	}
	return out;
}

PolySeries pbw_star(const Context& ctx, const Poly& f, const Poly& g) {
	if (f.ring().mode() != PolyMode::exact || g.ring().mode() != PolyMode::exact)
		throw InputError("pbw_star: exact coefficient mode required");
	auto& cache = ctx.caches().star_monomials;
	PolySeries out = poly_series(ctx.order(), ctx.exact_ring());
	for (const auto& [ma, ca] : f.terms())
		for (const auto& [mb, cb] : g.terms()) {
			const auto key = std::make_pair(ma, mb);
			auto it = cache.find(key);
			if (it == cache.end()) {
				const UeaElement prod =
				    uea_mul(ctx, pbw_map(ctx, Poly::monomial(ctx.exact_ring(), ma)),
				            pbw_map(ctx, Poly::monomial(ctx.exact_ring(), mb)));
				it = cache.emplace(key, pbw_unmap(ctx, prod)).first;
			}
			PolySeries s = it->second;
			s *= ca * cb;
			out += s;
		}
	return out;
}

std::vector<CoproductSplit> uea_coproduct(const PbwMonomial& m) {
	std::vector<CoproductSplit> out;
	std::vector<PbwMonomial> lefts{PbwMonomial(m.size())};
	std::vector<Rational> coeffs{Rational(1)};
	for (std::uint32_t i = 0; i < m.size(); ++i) {
		if (m[i] == 0) continue;
		std::vector<PbwMonomial> nl;
		std::vector<Rational> nc;
		for (std::size_t t = 0; t < lefts.size(); ++t)
			for (std::uint32_t j = 0; j <= m[i]; ++j) {
				PbwMonomial l = lefts[t];
				l[i] = j;
				nl.push_back(std::move(l));
				nc.push_back(coeffs[t] * binomial(m[i], j));
			}
		lefts = std::move(nl);
		coeffs = std::move(nc);
	}
	out.reserve(lefts.size());
	for (std::size_t t = 0; t < lefts.size(); ++t) out.push_back({lefts[t], m - lefts[t], coeffs[t]});
	return out;
}

RatSeries uea_counit(const UeaElement& u) {
	auto it = u.terms().find(PbwMonomial(u.ngen()));
	return it == u.terms().end() ? rat_series(u.order()) : it->second;
}

}  // namespace gq
