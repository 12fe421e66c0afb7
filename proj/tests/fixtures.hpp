#pragma once

// Inline copies of the bundled Lie pairs and twists, so the library suites run
// without touching the filesystem. The JSON files under data/ mirror these
// definitions; the CLI tests load those instead.

#include <cstdint>
#include <random>
#include <vector>

#include "gq/context.hpp"
#include "gq/dynamical.hpp"
#include "gq/lie.hpp"

namespace fixtures {

using namespace gq;

inline LieAlgebraPair abelian1() { return LieAlgebraPair("abelian1", 1, 1, {"l1"}, {}); }

inline LieAlgebraPair axb() {
	return LieAlgebraPair("axb", 2, 2, {"l1", "l2"}, {{{0, 1}, {{1, rat(1)}}}});
}

inline LieAlgebraPair heisenberg() {
	// central element first so that l = span(e3)
	return LieAlgebraPair("heisenberg", 3, 1, {"e3", "e1", "e2"}, {{{1, 2}, {{0, rat(1)}}}});
}

inline LieAlgebraPair sl2_cartan() {
	return LieAlgebraPair("sl2_cartan", 3, 1, {"h", "e", "f"},
	                      {{{0, 1}, {{1, rat(2)}}}, {{0, 2}, {{2, rat(-2)}}}, {{1, 2}, {{0, rat(1)}}}});
}

inline LieAlgebraPair sl2_borel() {
	return LieAlgebraPair("sl2_borel", 3, 2, {"h", "e", "f"},
	                      {{{0, 1}, {{1, rat(2)}}}, {{0, 2}, {{2, rat(-2)}}}, {{1, 2}, {{0, rat(1)}}}});
}

inline LieAlgebraPair sl2_full() {
	return LieAlgebraPair("sl2_full", 3, 3, {"h", "e", "f"},
	                      {{{0, 1}, {{1, rat(2)}}}, {{0, 2}, {{2, rat(-2)}}}, {{1, 2}, {{0, rat(1)}}}});
}

inline LieAlgebraPair solvable4() {
	return LieAlgebraPair("solvable4", 4, 2, {"d", "x", "y", "z"},
	                      {{{0, 1}, {{1, rat(1)}}},
	                       {{0, 2}, {{2, rat(1)}}},
	                       {{0, 3}, {{3, rat(2)}}},
	                       {{1, 2}, {{3, rat(1)}}}});
}

inline LieAlgebraPair sl2_corrupt() {
	// [e, f] = e breaks Jacobi on (h, e, f)
	return LieAlgebraPair("sl2_corrupt", 3, 1, {"h", "e", "f"},
	                      {{{0, 1}, {{1, rat(2)}}}, {{0, 2}, {{2, rat(-2)}}}, {{1, 2}, {{1, rat(1)}}}});
}

inline std::vector<LieAlgebraPair> bundled_pairs() {
	return {abelian1(), axb(), heisenberg(), sl2_cartan(), sl2_borel(), solvable4()};
}

// F = sum_k (hbar^k / k!) 1 (x) e1^k (x) e3^k over the heisenberg pair; a full
// dynamical twist at every truncation order.
inline DynTwist heisenberg_exp_twist(const Context& ctx, std::uint32_t kmax) {
	DynTwist f(ctx, 2);
	for (std::uint32_t k = 0; k <= kmax; ++k) {
		MultiIndex l(3), r(3);
		l[1] = k;
		r[0] = k;
		f.add_term({l, r}, ctx.one_series().shift(k) * (Rational(1) / factorial(k)));
	}
	return f;
}

// Small deterministic rationals/integers for property tests.
inline Rational small_rat(std::mt19937_64& rng) {
	const long num = static_cast<long>(rng() % 19) - 9;
	const long den = static_cast<long>(rng() % 4) + 1;
	return rat(num, den);
}

inline Poly random_poly(std::mt19937_64& rng, const PolyRing& ring, std::uint32_t maxdeg,
                        std::uint32_t nterms) {
	Poly p(ring);
	for (std::uint32_t t = 0; t < nterms; ++t) {
		MultiIndex m(ring.nvars());
		const std::uint32_t deg = rng() % (maxdeg + 1);
		for (std::uint32_t u = 0; u < deg; ++u) m[rng() % ring.nvars()] += 1;
		p.add_term(m, small_rat(rng));
	}
	return p;
}

}  // namespace fixtures
