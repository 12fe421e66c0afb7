#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gq/poly.hpp"
#include "gq/rational.hpp"

namespace gq {

// Thrown on malformed or inconsistent input (bad JSON, dimension mismatches,
// hypothesis violations). The CLI maps it to exit code 2; mathematical FAILs
// (nonzero residuals) are ordinary results, not exceptions.
struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct BracketTerm {
	std::uint32_t k;
	Rational c;
};

// Finite-dimensional Lie algebra g with a distinguished subalgebra l spanned
// by the first dim_l basis vectors. Structure constants are stored for i < j;
// [x_j, x_i] is derived by antisymmetry.
class LieAlgebraPair {
 public:
	LieAlgebraPair(std::string name, std::uint32_t dim_g, std::uint32_t dim_l,
	               std::vector<std::string> basis,
	               std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> brackets);

	const std::string& name() const { return name_; }
	std::uint32_t dim_g() const { return dim_g_; }
	std::uint32_t dim_l() const { return dim_l_; }
	const std::vector<std::string>& basis() const { return basis_; }

	// [x_i, x_j] as a sparse coefficient vector; valid for any i != j.
	std::vector<BracketTerm> bracket(std::uint32_t i, std::uint32_t j) const;

	// [v, w] for dense coefficient vectors over the basis.
	std::vector<Rational> bracket_vectors(const std::vector<Rational>& v,
	                                      const std::vector<Rational>& w) const;

 private:
	std::string name_;
	std::uint32_t dim_g_, dim_l_;
	std::vector<std::string> basis_;
	std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> br_;
};

struct JacobiViolation {
	std::uint32_t i, j, k;
	std::vector<Rational> residual;  // coefficients of the Jacobiator over the basis
};

// Jacobiator J(i,j,k) = [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
// for all i < j < k; returns every violated triple.
std::vector<JacobiViolation> check_jacobi(const LieAlgebraPair& pair);

// Coadjoint action of l_i on functions on l*: the derivation with
// ad*_{l_i}(lambda_j) = sum_k c_{ij}^k lambda_k. Requires i < dim_l.
Poly coadjoint_act(const LieAlgebraPair& pair, std::uint32_t i, const Poly& f);

// Splitting g = l + u+ + u- with [l, u+-] inside u+-; u+ and u- index the
// complement of l (indices dim_l..dim_g-1).
struct Polarization {
	std::vector<std::uint32_t> uplus, uminus;
};

void validate_polarization(const LieAlgebraPair& pair, const Polarization& pol);

// omega(lambda)(u_a, u_b) = lambda([u_a, u_b]) over the ordered list u+ then u-;
// entries are linear polynomials in the exact ring over dim_l variables.
std::vector<std::vector<Poly>> omega_matrix(const LieAlgebraPair& pair, const Polarization& pol);

Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m);

struct NondegeneracyReport {
	Poly det;
	bool nondegenerate;                            // det is not the zero polynomial
	std::optional<std::vector<Rational>> witness;  // integer point in [-3,3]^N with det != 0
};

// Witness search scans each coordinate in the order 0, 1, -1, 2, -2, 3, -3,
// so the first (smallest) nonvanishing point found is deterministic.
NondegeneracyReport det_omega(const LieAlgebraPair& pair, const Polarization& pol);

// Basis of the character locus W = { lambda in l* : lambda([l,l]) = 0 }.
std::vector<std::vector<Rational>> character_locus(const LieAlgebraPair& pair);

}  // namespace gq
