#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gq/lie.hpp"
#include "gq/linalg.hpp"
#include "gq/uea.hpp"

#include "fixtures.hpp"

using namespace gq;

TEST_CASE("jacobi identity holds on every bundled pair") {
	for (const auto& pair : fixtures::bundled_pairs()) {
		CAPTURE(pair.name());
		REQUIRE(check_jacobi(pair).empty());
	}
	REQUIRE(check_jacobi(fixtures::sl2_full()).empty());
}

TEST_CASE("corrupted sl2 fails jacobi exactly on (h, e, f)") {
	const auto v = check_jacobi(fixtures::sl2_corrupt());
	REQUIRE(v.size() == 1);
	REQUIRE(v[0].i == 0);
	REQUIRE(v[0].j == 1);
	REQUIRE(v[0].k == 2);
	// J(h,e,f) = [[h,e],f] + [[e,f],h] + [[f,h],e] = 2e - 2e - 2e = -2e
	REQUIRE(v[0].residual == std::vector<Rational>{rat(0), rat(-2), rat(0)});
}

TEST_CASE("bracket is antisymmetric and bilinear") {
	std::mt19937_64 rng(11);
	for (const auto& pair : {fixtures::sl2_full(), fixtures::solvable4()}) {
		const std::uint32_t n = pair.dim_g();
		for (std::uint32_t i = 0; i < n; ++i)
			for (std::uint32_t j = 0; j < n; ++j) {
				if (i == j) continue;
				auto ij = pair.bracket(i, j);
				auto ji = pair.bracket(j, i);
				std::vector<Rational> sum(n, 0);
				for (const auto& t : ij) sum[t.k] += t.c;
				for (const auto& t : ji) sum[t.k] += t.c;
				for (const auto& c : sum) REQUIRE(is_zero(c));
			}
		for (int t = 0; t < 50; ++t) {
			std::vector<Rational> u(n), v(n), w(n);
			for (std::uint32_t i = 0; i < n; ++i) {
				u[i] = fixtures::small_rat(rng);
				v[i] = fixtures::small_rat(rng);
				w[i] = fixtures::small_rat(rng);
			}
			const Rational a = fixtures::small_rat(rng);
			std::vector<Rational> av_w(n);
			for (std::uint32_t i = 0; i < n; ++i) av_w[i] = a * v[i] + w[i];
			const auto lhs = pair.bracket_vectors(u, av_w);
			const auto bv = pair.bracket_vectors(u, v);
			const auto bw = pair.bracket_vectors(u, w);
			for (std::uint32_t i = 0; i < n; ++i) REQUIRE(lhs[i] == a * bv[i] + bw[i]);
			const auto vu = pair.bracket_vectors(v, u);
			const auto uv = pair.bracket_vectors(u, v);
			for (std::uint32_t i = 0; i < n; ++i) REQUIRE(uv[i] == -vu[i]);
		}
	}
}

TEST_CASE("coadjoint action: generator rule, Leibniz, and star-commutator consistency") {
	std::mt19937_64 rng(12);
	// generator rule: ad*_{l_i}(la_j) = sum_k c_{ij}^k la_k
	{
		const auto pair = fixtures::axb();
		const PolyRing ring = PolyRing::exact(2);
		REQUIRE(coadjoint_act(pair, 0, Poly::variable(ring, 1)) == Poly::variable(ring, 1));
		REQUIRE(coadjoint_act(pair, 1, Poly::variable(ring, 0)) ==
		        Poly::variable(ring, 1) * rat(-1));
		REQUIRE(coadjoint_act(pair, 0, Poly::variable(ring, 0)).is_zero());
	}
	{
		const auto pair = fixtures::sl2_borel();
		const PolyRing ring = PolyRing::exact(2);
		REQUIRE(coadjoint_act(pair, 0, Poly::variable(ring, 1)) ==
		        Poly::variable(ring, 1) * rat(2));
	}
	for (const auto& pair : fixtures::bundled_pairs()) {
		CAPTURE(pair.name());
		const PolyRing ring = PolyRing::exact(pair.dim_l());
		Context ctx(pair, 2);
		for (std::uint32_t i = 0; i < pair.dim_l(); ++i) {
			const Poly f = fixtures::random_poly(rng, ring, 3, 3);
			const Poly g = fixtures::random_poly(rng, ring, 3, 3);
			// derivation property
			REQUIRE(coadjoint_act(pair, i, f * g) ==
			        coadjoint_act(pair, i, f) * g + f * coadjoint_act(pair, i, g));
			// the hbar^1 slice of the star commutator [la_i, f]_* is ad*_{l_i}(f)
			const PolySeries comm =
			    pbw_star(ctx, Poly::variable(ring, i), f) - pbw_star(ctx, f, Poly::variable(ring, i));
			REQUIRE(comm[0].is_zero());
			REQUIRE(comm[1] == coadjoint_act(pair, i, f));
		}
	}
}

TEST_CASE("sl2 polarization: omega, determinant, witness") {
	const auto pair = fixtures::sl2_cartan();
	const Polarization pol{{1}, {2}};  // u+ = e, u- = f
	validate_polarization(pair, pol);
	const auto omega = omega_matrix(pair, pol);
	const PolyRing ring = omega[0][0].ring();
	REQUIRE(omega.size() == 2);
	REQUIRE(omega[0][0].is_zero());
	REQUIRE(omega[0][1] == Poly::variable(ring, 0));       // lambda([e, f]) = la_h
	REQUIRE(omega[1][0] == Poly::variable(ring, 0) * rat(-1));
	REQUIRE(omega[1][1].is_zero());
	const auto nd = det_omega(pair, pol);
	REQUIRE(nd.nondegenerate);
	REQUIRE(nd.det == Poly::monomial(ring, MultiIndex({2})));  // la_h^2
	REQUIRE(nd.witness.has_value());
	REQUIRE(*nd.witness == std::vector<Rational>{rat(1)});  // first point in scan order 0,1,-1,...
}

TEST_CASE("heisenberg polarization: D = la1^2 with witness") {
	const auto pair = fixtures::heisenberg();
	const Polarization pol{{1}, {2}};  // u+ = e1, u- = e2
	validate_polarization(pair, pol);
	const auto nd = det_omega(pair, pol);
	const PolyRing ring = nd.det.ring();
	REQUIRE(nd.det == Poly::monomial(ring, MultiIndex({2})));
	REQUIRE(nd.nondegenerate);
	REQUIRE(*nd.witness == std::vector<Rational>{rat(1)});
}

TEST_CASE("degenerate and invalid polarizations") {
	// solvable4 with u+ = {y, z}: valid splitting, omega = 0 identically
	{
		const auto pair = fixtures::solvable4();
		const Polarization pol{{2, 3}, {}};
		validate_polarization(pair, pol);
		const auto nd = det_omega(pair, pol);
		REQUIRE_FALSE(nd.nondegenerate);
		REQUIRE(nd.det.is_zero());
		REQUIRE_FALSE(nd.witness.has_value());
	}
	// solvable4 with u+ = {y}, u- = {z}: [x, y] = z leaves u+, rejected
	{
		const auto pair = fixtures::solvable4();
		REQUIRE_THROWS_AS(validate_polarization(pair, Polarization{{2}, {3}}), InputError);
	}
	// complement not covered
	REQUIRE_THROWS_AS(validate_polarization(fixtures::sl2_cartan(), Polarization{{1}, {}}),
	                  InputError);
	// overlap between u+ and u-
	REQUIRE_THROWS_AS(validate_polarization(fixtures::sl2_cartan(), Polarization{{1, 2}, {2}}),
	                  InputError);
	// l-generators may not appear
	REQUIRE_THROWS_AS(validate_polarization(fixtures::sl2_cartan(), Polarization{{0, 1}, {2}}),
	                  InputError);
}

TEST_CASE("character locus bases") {
	auto locus = [](const LieAlgebraPair& p) { return character_locus(p); };
	REQUIRE(locus(fixtures::abelian1()) == RatMatrix{{rat(1)}});
	REQUIRE(locus(fixtures::sl2_cartan()) == RatMatrix{{rat(1)}});
	REQUIRE(locus(fixtures::heisenberg()) == RatMatrix{{rat(1)}});
	// axb: [l1, l2] = l2, so W = { la : la(l2) = 0 }
	REQUIRE(locus(fixtures::axb()) == RatMatrix{{rat(1), rat(0)}});
	// sl2 borel: [h, e] = 2e
	REQUIRE(locus(fixtures::sl2_borel()) == RatMatrix{{rat(1), rat(0)}});
	// solvable4: [d, x] = x
	REQUIRE(locus(fixtures::solvable4()) == RatMatrix{{rat(1), rat(0)}});
	// full sl2 is perfect: W = 0
	REQUIRE(locus(fixtures::sl2_full()).empty());
}

TEST_CASE("lie pair constructor validation") {
	REQUIRE_THROWS_AS(LieAlgebraPair("bad", 2, 3, {"a", "b"}, {}), InputError);  // dim_l > dim_g
	REQUIRE_THROWS_AS(LieAlgebraPair("bad", 2, 1, {"a"}, {}), InputError);       // basis size
	REQUIRE_THROWS_AS(LieAlgebraPair("bad", 2, 1, {"a", "b"}, {{{1, 1}, {{0, rat(1)}}}}),
	                  InputError);  // needs i < j
	REQUIRE_THROWS_AS(LieAlgebraPair("bad", 2, 1, {"a", "b"}, {{{0, 1}, {{5, rat(1)}}}}),
	                  InputError);  // target out of range
}
