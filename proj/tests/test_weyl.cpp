#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "gq/io.hpp"
#include "gq/uea.hpp"
#include "gq/weyl.hpp"

#include "fixtures.hpp"

using namespace gq;

TEST_CASE("diff op composition matches sequential application") {
	std::mt19937_64 rng(31);
	const PolyRing ring = PolyRing::exact(2);
	const std::uint32_t K = 2;
	auto random_op = [&] {
		DiffOp d(ring, K);
		for (int t = 0; t < 3; ++t) {
			MultiIndex alpha(2);
			alpha[rng() % 2] = rng() % 3;
			PolySeries c = poly_series(K, ring);
			c[rng() % (K + 1)] = fixtures::random_poly(rng, ring, 2, 2);
			d.add_term(alpha, c);
		}
		return d;
	};
	for (int t = 0; t < 40; ++t) {
		const DiffOp a = random_op(), b = random_op();
		const PolySeries f = poly_series(K, fixtures::random_poly(rng, ring, 3, 3));
		REQUIRE(compose(a, b).apply(f) == a.apply(b.apply(f)));
		const DiffOp c = random_op();
		REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
		REQUIRE(compose(DiffOp::identity(ring, K), a) == a);
		REQUIRE(compose(a, DiffOp::identity(ring, K)) == a);
	}
}

TEST_CASE("extract_diffop recovers a known operator") {
	Context ctx(fixtures::axb(), 2);
	const PolyRing ring = ctx.ring();
	// op = la1 id + hbar d2 + hbar^2 la2 d1 d2
	DiffOp want(ring, 2);
	want.add_term(MultiIndex({0, 0}), poly_series(2, Poly::variable(ring, 0)));
	want.add_term(MultiIndex({0, 1}), poly_series(2, Poly::constant(ring, rat(1))).shift(1));
	want.add_term(MultiIndex({1, 1}), poly_series(2, Poly::variable(ring, 1)).shift(2));
	const DiffOp got = extract_diffop(
	    ctx, [&](const Poly& f) { return want.apply(poly_series(2, f)); });
	REQUIRE(got == want);
}

TEST_CASE("star_mult_op represents left star multiplication") {
	std::mt19937_64 rng(32);
	for (const auto& pair : {fixtures::axb(), fixtures::sl2_borel(), fixtures::heisenberg()}) {
		CAPTURE(pair.name());
		Context ctx(pair, 3);
		for (int t = 0; t < 10; ++t) {
			const Poly f = fixtures::random_poly(rng, ctx.ring(), 3, 2);
			const Poly g = fixtures::random_poly(rng, ctx.ring(), 3, 2);
			const DiffOp op = star_mult_op(ctx, poly_series(3, f));
			REQUIRE(op.apply(poly_series(3, g)) == pbw_star(ctx, f, g));
			// algebra map: op(f *_PBW g) = op(f) o op(g)
			const DiffOp og = star_mult_op(ctx, poly_series(3, g));
			const DiffOp ofg = star_mult_op(ctx, pbw_star(ctx, f, g));
			REQUIRE(compose(op, og) == ofg);
		}
	}
}

TEST_CASE("theta_pbw reproduces the star product beyond its extraction grid") {
	for (const auto& pair : fixtures::bundled_pairs()) {
		CAPTURE(pair.name());
		Context ctx(pair, 2);
		const BiDiffOp& theta = theta_pbw(ctx);
		const std::uint32_t nl = pair.dim_l();
		for (const auto& ma : multi_indices_up_to(nl, 4))
			for (const auto& mb : multi_indices_up_to(nl, 4)) {
				const Poly f = Poly::monomial(ctx.ring(), ma);
				const Poly g = Poly::monomial(ctx.ring(), mb);
				REQUIRE(theta.apply(poly_series(2, f), poly_series(2, g)) == pbw_star(ctx, f, g));
			}
	}
}

TEST_CASE("axb theta hbar^1 slice is the half Poisson bivector") {
	Context ctx(fixtures::axb(), 2);
	const BiDiffOp& theta = theta_pbw(ctx);
	const Poly la2 = Poly::variable(ctx.ring(), 1);
	// [la1, la2] = hbar la2: theta_1 = (la2/2)(d1 (x) d2 - d2 (x) d1)
	const auto& terms = theta.terms();
	const auto t12 = terms.find({MultiIndex({1, 0}), MultiIndex({0, 1})});
	REQUIRE(t12 != terms.end());
	REQUIRE(t12->second[1] == la2 * rat(1, 2));
	const auto t21 = terms.find({MultiIndex({0, 1}), MultiIndex({1, 0})});
	REQUIRE(t21 != terms.end());
	REQUIRE(t21->second[1] == la2 * rat(-1, 2));
	// hbar^0 slice is plain multiplication
	const auto t00 = terms.find({MultiIndex({0, 0}), MultiIndex({0, 0})});
	REQUIRE(t00 != terms.end());
	REQUIRE(t00->second[0] == Poly::constant(ctx.ring(), rat(1)));
}

TEST_CASE("star_via_theta equals pbw_star on random polynomials") {
	std::mt19937_64 rng(33);
	for (const auto& pair : fixtures::bundled_pairs()) {
		Context ctx(pair, 2);
		for (int t = 0; t < 15; ++t) {
			const Poly f = fixtures::random_poly(rng, ctx.ring(), 3, 3);
			const Poly g = fixtures::random_poly(rng, ctx.ring(), 3, 3);
			REQUIRE(star_via_theta(ctx, poly_series(2, f), poly_series(2, g)) ==
			        pbw_star(ctx, f, g));
		}
	}
}

TEST_CASE("jet-mode star agrees with the exact star inside the window") {
	std::mt19937_64 rng(34);
	for (const auto& pair : {fixtures::axb(), fixtures::sl2_cartan()}) {
		CAPTURE(pair.name());
		const std::uint32_t K = 2, L = 6;
		std::vector<Rational> base;
		for (std::uint32_t i = 0; i < pair.dim_l(); ++i) base.push_back(rat(1 + (long)i));
		Context ex(pair, K);
		Context jet(pair, K, base, L);
		for (int t = 0; t < 10; ++t) {
			// inputs of degree <= 2; derivative loss <= K keeps everything exact
			const Poly f = fixtures::random_poly(rng, ex.ring(), 2, 2);
			const Poly g = fixtures::random_poly(rng, ex.ring(), 2, 2);
			const PolySeries exact = pbw_star(ex, f, g);
			const PolySeries jetstar =
			    star_via_theta(jet, poly_series(K, jet.to_active(f)), poly_series(K, jet.to_active(g)));
			for (std::uint32_t p = 0; p <= K; ++p)
				REQUIRE(jetstar[p] == jet.to_active(exact[p]));
		}
	}
}

TEST_CASE("theta coefficients obey the derivative-order-by-hbar bound") {
	for (const auto& pair : fixtures::bundled_pairs()) {
		Context ctx(pair, 3);
		for (const auto& [key, c] : theta_pbw(ctx).terms())
			for (std::uint32_t p = 0; p <= 3; ++p)
				if (!c[p].is_zero()) {
					REQUIRE(key.first.degree() <= p);
					REQUIRE(key.second.degree() <= p);
				}
	}
}

TEST_CASE("bidifferential operators round trip through files byte for byte") {
	Context ctx(fixtures::sl2_borel(), 2);
	const BiDiffOp& th = theta_pbw(ctx);
	const std::string pa = "bidiff_a.json", pb = "bidiff_b.json";
	save_bidiffop(ctx, th, pa);
	const BiDiffOp back = load_bidiffop(ctx, pa);
	REQUIRE(back.terms() == th.terms());
	save_bidiffop(ctx, back, pb);
	std::ifstream ia(pa), ib(pb);
	std::stringstream sa, sb;
	sa << ia.rdbuf();
	sb << ib.rdbuf();
	REQUIRE(sa.str() == sb.str());
	REQUIRE_FALSE(sa.str().empty());
	std::remove(pa.c_str());
	std::remove(pb.c_str());
}
