#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gq/context.hpp"
#include "gq/dynamical.hpp"
#include "gq/poly.hpp"

namespace gq {

// Multivector field on l* x G in the frame d_1..d_N (coordinate derivatives
// on l*) followed by X_1..X_M (left-invariant, acting as zero on polynomial
// coefficients, bracketing through the structure constants of g). Keys are
// strictly increasing frame-index tuples; d_i has index i, X_a index N + a.
class MultiVector {
 public:
	MultiVector() = default;
	MultiVector(const Context& ctx, std::uint32_t degree);

	std::uint32_t degree() const { return degree_; }
	const std::map<std::vector<std::uint32_t>, Poly>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	// Adds c * e_{idx_1} ^ ... ^ e_{idx_d}; indices are sorted with the sign of
	// the permutation, repeated indices vanish.
	void add_term(std::vector<std::uint32_t> idx, Poly c);
	MultiVector& operator+=(const MultiVector& o);
	MultiVector& operator-=(const MultiVector& o);
	friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
	friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
	friend bool operator==(const MultiVector& a, const MultiVector& b) = default;

 private:
	std::uint32_t degree_ = 0;
	std::map<std::vector<std::uint32_t>, Poly> terms_;
};

// Exterior product, degree-additive.
MultiVector wedge(const Context& ctx, const MultiVector& a, const MultiVector& b);

// Schouten bracket in the frame calculus: frame vectors act on coefficients
// through the anchor (d_i differentiates, X_a annihilates) and bracket through
// the structure constants ([X_a, X_b] = sum c_{ab}^k X_k, all else zero).
MultiVector schouten(const Context& ctx, const MultiVector& a, const MultiVector& b);

// theta = F_1 - (F_1)_21 read off the hbar^1 slice of a twist whose hbar^1
// U-legs all have PBW degree 1; X-leg bivector with polynomial coefficients.
MultiVector classical_theta(const Context& ctx, const DynTwist& f);

// pi = pi_{l*} + sum_i d_i ^ X_i + theta, with
// pi_{l*} = (1/2) sum_{ij} (sum_k c_{ij}^k lambda_k) d_i ^ d_j.
MultiVector assemble_pi(const Context& ctx, const MultiVector& theta);

struct SchoutenReport {
	bool pass = false;
	MultiVector residual;  // [pi, pi], a trivector
};

SchoutenReport schouten_jacobi(const Context& ctx, const MultiVector& pi);

}  // namespace gq
