#include "gq/classical.hpp"

#include <stdexcept>

#include "gq/lie.hpp"

namespace gq {

MultiVector::MultiVector(const Context& ctx, std::uint32_t degree) : degree_(degree) {
	(void)ctx;
}

void MultiVector::add_term(std::vector<std::uint32_t> idx, Poly c) {
	if (idx.size() != degree_) throw std::invalid_argument("multivector: index tuple length mismatch");
	if (c.is_zero()) return;
	// insertion sort with parity; a repeated frame index kills the term
	bool negate = false;
	for (std::size_t i = 1; i < idx.size(); ++i)
		for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
			if (idx[j] == idx[j - 1]) return;
			std::swap(idx[j], idx[j - 1]);
			negate = !negate;
		}
	if (negate) c *= Rational(-1);
	auto it = terms_.find(idx);
	if (it == terms_.end()) {
		terms_.emplace(std::move(idx), std::move(c));
	} else {
		it->second += c;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
	if (degree_ != o.degree_) throw std::invalid_argument("multivector: degree mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, c);
	return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
	if (degree_ != o.degree_) throw std::invalid_argument("multivector: degree mismatch");
	for (const auto& [k, c] : o.terms_) add_term(k, -c);
	return *this;
}

namespace {

// rho(e_i): coordinate derivative for the d-part of the frame, zero for the
// invariant part.
Poly anchor_derive(std::uint32_t frame_idx, std::uint32_t nl, const Poly& f) {
	return frame_idx < nl ? f.partial(frame_idx) : Poly::zero(f.ring());
}

std::vector<std::uint32_t> without(const std::vector<std::uint32_t>& v, std::size_t skip) {
	std::vector<std::uint32_t> r;
	r.reserve(v.size() - 1);
	for (std::size_t i = 0; i < v.size(); ++i)
		if (i != skip) r.push_back(v[i]);
	return r;
}

}  // namespace

MultiVector wedge(const Context& ctx, const MultiVector& a, const MultiVector& b) {
	MultiVector out(ctx, a.degree() + b.degree());
	for (const auto& [ka, fa] : a.terms())
		for (const auto& [kb, fb] : b.terms()) {
			std::vector<std::uint32_t> idx = ka;
			idx.insert(idx.end(), kb.begin(), kb.end());
			out.add_term(std::move(idx), fa * fb);
		}
	return out;
}

MultiVector schouten(const Context& ctx, const MultiVector& a, const MultiVector& b) {
	const std::uint32_t nl = ctx.pair().dim_l();
	const std::uint32_t p = a.degree(), q = b.degree();
	if (p == 0 && q == 0) return MultiVector(ctx, 0);
	if (q == 0) {
		// [P, g] = sum_i (-1)^(p-i) f rho(e_i)(g) e_(A minus i)
		MultiVector out(ctx, p - 1);
		for (const auto& [ka, f] : a.terms())
			for (const auto& [kb, g] : b.terms())
				for (std::size_t i = 0; i < p; ++i) {
					Poly d = anchor_derive(ka[i], nl, g);
					if (d.is_zero()) continue;
					d *= f;
					if ((p - 1 - i) % 2 != 0) d *= Rational(-1);
					out.add_term(without(ka, i), std::move(d));
				}
		return out;
	}
	if (p == 0) {
		// graded antisymmetry: [f, Q] = -(-1)^(q-1) [Q, f]
		MultiVector r = schouten(ctx, b, a);
		MultiVector out(ctx, r.degree());
		const bool flip = (q - 1) % 2 == 0;  // - (-1)^(q-1)
		for (const auto& [k, c] : r.terms()) out.add_term(k, flip ? -c : c);
		return out;
	}
	// Decomposable terms f e_(a_1..a_p), g e_(b_1..b_q) with the coefficient on
	// the first factor expand through vector-field brackets:
	//   [P,Q] = sum_(i,j) (-1)^(i+j) [P_i, Q_j] ^ (P minus i) ^ (Q minus j)
	//   [f u, g v] = f g [u,v] + f rho(u)(g) v - g rho(v)(f) u
	MultiVector out(ctx, p + q - 1);
	for (const auto& [ka, f] : a.terms())
		for (const auto& [kb, g] : b.terms()) {
			const Poly fg = f * g;
			for (std::size_t i = 0; i < p; ++i)
				for (std::size_t j = 0; j < q; ++j) {
					const bool neg = (i + j) % 2 != 0;  // (-1)^(i+j) with 1-based i, j
					const auto rest_a = without(ka, i), rest_b = without(kb, j);
					auto emit = [&](std::uint32_t front, Poly c) {
						if (neg) c *= Rational(-1);
						std::vector<std::uint32_t> idx{front};
						idx.insert(idx.end(), rest_a.begin(), rest_a.end());
						idx.insert(idx.end(), rest_b.begin(), rest_b.end());
						out.add_term(std::move(idx), std::move(c));
					};
					if (ka[i] >= nl && kb[j] >= nl)
						for (const auto& t : ctx.pair().bracket(ka[i] - nl, kb[j] - nl))
							emit(nl + t.k, fg * t.c);
					if (j == 0) {
						Poly d = anchor_derive(ka[i], nl, g);
						if (!d.is_zero()) emit(kb[j], f * d);
					}
					if (i == 0) {
						Poly d = anchor_derive(kb[j], nl, f);
						if (!d.is_zero()) emit(ka[i], -(g * d));
					}
				}
		}
	return out;
}

MultiVector classical_theta(const Context& ctx, const DynTwist& f) {
	if (f.legs() != 2) throw std::invalid_argument("classical_theta: need exactly two legs");
	const std::uint32_t nl = ctx.pair().dim_l();
	MultiVector theta(ctx, 2);
	for (const auto& [k, c] : f.terms()) {
		if (f.order() < 1 || c[1].is_zero()) continue;
		std::size_t g0 = 0, g1 = 0;
		if (k[0].degree() != 1 || k[1].degree() != 1)
			throw InputError("classical_theta: hbar^1 part is not of bivector type");
		for (std::size_t t = 0; t < k[0].size(); ++t) {
			if (k[0][t] == 1) g0 = t;
			if (k[1][t] == 1) g1 = t;
		}
		// antisymmetrized hbar^1 slice: X_a (x) X_b picks up X_a ^ X_b
		theta.add_term({nl + static_cast<std::uint32_t>(g0), nl + static_cast<std::uint32_t>(g1)}, c[1]);
	}
	return theta;
}

MultiVector assemble_pi(const Context& ctx, const MultiVector& theta) {
	if (theta.degree() != 2) throw std::invalid_argument("assemble_pi: theta must be a bivector");
	const std::uint32_t nl = ctx.pair().dim_l();
	MultiVector pi(ctx, 2);
	// linear Poisson structure on l*: sum_(i<j) (sum_k c_ij^k lambda_k) d_i ^ d_j
	for (std::uint32_t i = 0; i < nl; ++i)
		for (std::uint32_t j = i + 1; j < nl; ++j) {
			Poly c = Poly::zero(ctx.ring());
			for (const auto& t : ctx.pair().bracket(i, j)) c += Poly::variable(ctx.ring(), t.k) * t.c;
			pi.add_term({i, j}, std::move(c));
		}
	// mixed part pairing each coordinate derivative with its invariant partner
	for (std::uint32_t i = 0; i < nl; ++i)
		pi.add_term({i, nl + i}, Poly::constant(ctx.ring(), Rational(1)));
	pi += theta;
	return pi;
}

SchoutenReport schouten_jacobi(const Context& ctx, const MultiVector& pi) {
	SchoutenReport rep;
	rep.residual = schouten(ctx, pi, pi);
	rep.pass = rep.residual.is_zero();
	return rep;
}

}  // namespace gq
