#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gq/linalg.hpp"
#include "gq/multi_index.hpp"
#include "gq/poly.hpp"
#include "gq/rational.hpp"
#include "gq/series.hpp"

#include "fixtures.hpp"

using namespace gq;

TEST_CASE("rational arithmetic laws on 10^4 random triples") {
	std::mt19937_64 rng(1);
	for (int i = 0; i < 10000; ++i) {
		const Rational a = fixtures::small_rat(rng), b = fixtures::small_rat(rng),
		               c = fixtures::small_rat(rng);
		REQUIRE((a + b) + c == a + (b + c));
		REQUIRE((a * b) * c == a * (b * c));
		REQUIRE(a * (b + c) == a * b + a * c);
		REQUIRE(a + b == b + a);
		REQUIRE(a - a == 0);
		if (!is_zero(b)) REQUIRE((a / b) * b == a);
	}
}

TEST_CASE("rational parsing round trip and canonicalization") {
	std::mt19937_64 rng(2);
	for (int i = 0; i < 2000; ++i) {
		const Rational a = fixtures::small_rat(rng);
		REQUIRE(parse_rational(to_string(a)) == a);
	}
	REQUIRE(parse_rational("2/4") == rat(1, 2));
	REQUIRE(parse_rational("-6/3") == rat(-2));
	REQUIRE(to_string(parse_rational("2/4")) == "1/2");
	REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
	REQUIRE_THROWS_AS(parse_rational("abc"), std::invalid_argument);
	REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
	REQUIRE_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
	REQUIRE(factorial(0) == 1);
	REQUIRE(factorial(10) == 3628800);
	for (std::uint32_t n = 1; n < 12; ++n)
		for (std::uint32_t k = 1; k < n; ++k)
			REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
	REQUIRE(binomial(5, 7) == 0);
	// multi-index binomial is the product of componentwise binomials
	REQUIRE(binomial(MultiIndex({3, 2}), MultiIndex({1, 1})) == rat(6));
	REQUIRE(MultiIndex({3, 2, 1}).factorial() == rat(12));
}

TEST_CASE("multi-index order is degree-then-lex and deterministic") {
	const auto all = multi_indices_up_to(3, 4);
	// |{deg <= d in n vars}| = C(n + d, n)
	REQUIRE(all.size() == 35);
	for (const auto& m : all) REQUIRE(m.degree() <= 4);
	auto sorted = all;
	std::sort(sorted.begin(), sorted.end());
	for (std::size_t i = 1; i < sorted.size(); ++i) {
		REQUIRE(sorted[i - 1] < sorted[i]);
		REQUIRE(sorted[i - 1].degree() <= sorted[i].degree());
	}
	REQUIRE(MultiIndex::unit(3, 1) + MultiIndex::unit(3, 1) == MultiIndex({0, 2, 0}));
	REQUIRE(MultiIndex({2, 1}) - MultiIndex({1, 0}) == MultiIndex({1, 1}));
}

TEST_CASE("truncated series arithmetic") {
	std::mt19937_64 rng(3);
	const std::uint32_t K = 4;
	auto random_series = [&] {
		RatSeries s = rat_series(K);
		for (std::uint32_t p = 0; p <= K; ++p) s[p] = RatScalar(fixtures::small_rat(rng));
		return s;
	};
	for (int i = 0; i < 300; ++i) {
		const RatSeries a = random_series(), b = random_series(), c = random_series();
		REQUIRE((a * b) * c == a * (b * c));
		REQUIRE(a * b == b * a);
		REQUIRE(a * (b + c) == a * b + a * c);
		REQUIRE(a - a == rat_series(K));
	}
	// shift raises valuation and truncates at the order
	RatSeries s = rat_series(2, rat(1));
	s[1] = RatScalar(rat(3));
	const RatSeries sh = s.shift(2);
	REQUIRE(sh.valuation() == 2);
	REQUIRE(sh[2] == RatScalar(rat(1)));
	REQUIRE(s.shift(3).is_zero());
}

TEST_CASE("polynomial ring laws, Leibniz rule, evaluation homomorphism") {
	std::mt19937_64 rng(4);
	const PolyRing ring = PolyRing::exact(3);
	for (int i = 0; i < 200; ++i) {
		const Poly f = fixtures::random_poly(rng, ring, 3, 4);
		const Poly g = fixtures::random_poly(rng, ring, 3, 4);
		const Poly h = fixtures::random_poly(rng, ring, 2, 3);
		REQUIRE((f * g) * h == f * (g * h));
		REQUIRE(f * g == g * f);
		REQUIRE(f * (g + h) == f * g + f * h);
		REQUIRE(f.partial(0).partial(1) == f.partial(1).partial(0));
		REQUIRE((f * g).partial(2) == f.partial(2) * g + f * g.partial(2));
		const std::vector<Rational> pt = {fixtures::small_rat(rng), fixtures::small_rat(rng),
		                                  fixtures::small_rat(rng)};
		REQUIRE((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
		REQUIRE((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
	}
	REQUIRE(Poly::monomial(ring, MultiIndex({2, 0, 1})).partial(MultiIndex({1, 0, 1})) ==
	        Poly::monomial(ring, MultiIndex({1, 0, 0}), rat(2)));
}

TEST_CASE("jet ring agrees with exact ring inside the truncation window") {
	std::mt19937_64 rng(5);
	const PolyRing ex = PolyRing::exact(2);
	const std::vector<Rational> base = {rat(1), rat(-1, 2)};
	const PolyRing jet = PolyRing::jet(2, base, 6);
	auto both = [&](auto&& build) { return std::pair(build(ex), build(jet)); };
	for (int i = 0; i < 100; ++i) {
		// same expression in both rings: products of coordinates and constants
		std::vector<std::pair<std::size_t, Rational>> script;
		for (int t = 0; t < 3; ++t) script.push_back({rng() % 2, fixtures::small_rat(rng)});
		auto [pe, pj] = both([&](const PolyRing& r) {
			Poly p = Poly::constant(r, rat(1));
			for (const auto& [v, c] : script)
				p = p * (Poly::variable(r, v) + Poly::constant(r, c));
			return p;
		});
		// degree 3 expression, jet degree 6: evaluation must agree exactly
		const std::vector<Rational> pt = {fixtures::small_rat(rng), fixtures::small_rat(rng)};
		REQUIRE(pe.eval(pt) == pj.eval(pt));
		// derivatives also stay inside the window
		REQUIRE(pe.partial(0).eval(pt) == pj.partial(0).eval(pt));
	}
	// outside the window the jet truncates: degree 7 term vanishes
	Poly mu = Poly::monomial(jet, MultiIndex({7, 0}));
	REQUIRE(mu.is_zero());
}

TEST_CASE("rref and nullspace are exact and deterministic") {
	std::mt19937_64 rng(6);
	for (int i = 0; i < 100; ++i) {
		const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
		RatMatrix m(rows, std::vector<Rational>(cols));
		for (auto& row : m)
			for (auto& x : row) x = rat(static_cast<long>(rng() % 7) - 3);
		RatMatrix mc = m;
		const auto pivots = rref(mc);
		const RatMatrix null = nullspace(m, cols);
		REQUIRE(pivots.size() + null.size() == cols);  // rank + nullity
		for (const auto& v : null) {
			for (const auto& row : m) {
				Rational dot = 0;
				for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
				REQUIRE(is_zero(dot));
			}
		}
		// determinism: same input, same output
		RatMatrix mc2 = m;
		rref(mc2);
		REQUIRE(mc == mc2);
	}
}

TEST_CASE("series of polynomials: partial derivative helper") {
	const PolyRing ring = PolyRing::exact(2);
	PolySeries s = poly_series(2, ring);
	s[0] = Poly::monomial(ring, MultiIndex({2, 1}));
	s[1] = Poly::variable(ring, 0);
	const PolySeries d = series_partial(s, MultiIndex({1, 0}));
	REQUIRE(d[0] == Poly::monomial(ring, MultiIndex({1, 1}), rat(2)));
	REQUIRE(d[1] == Poly::constant(ring, rat(1)));
	REQUIRE(series_partial(s, MultiIndex({3, 0})).is_zero());
}
