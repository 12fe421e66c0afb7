#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gq {

// Exact rational scalar. Canonical form (lowest terms, positive denominator)
// is maintained by GMP as long as values are built through these helpers.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
	if (den == 0) throw std::invalid_argument("rational: zero denominator");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

// Accepts "p" or "p/q" with optional leading '-'. Rejects anything else.
inline Rational parse_rational(const std::string& s) {
	if (s.empty()) throw std::invalid_argument("rational: empty string");
	for (char c : s)
		if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
			throw std::invalid_argument("rational: bad character in '" + s + "'");
	mpq_class r;
	if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational: unparsable '" + s + "'");
	if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
	r.canonicalize();
	return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// n! as an exact integer-valued rational.
inline Rational factorial(std::uint32_t n) {
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(f);
}

// Binomial coefficient C(n, k), zero when k > n.
inline Rational binomial(std::uint32_t n, std::uint32_t k) {
	if (k > n) return Rational(0);
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rational(b);
}

}  // namespace gq
