#pragma once

#include <string>

#include "gq/classical.hpp"
#include "gq/context.hpp"
#include "gq/dynamical.hpp"
#include "gq/groupoid.hpp"
#include "gq/lie.hpp"
#include "gq/uea.hpp"
#include "gq/weyl.hpp"

namespace gq {

// Lie-algebra file: {name, dimG, dimL, basis:[names],
// brackets:[{i, j, terms:[{k, coeff:"p/q"}]}]}, 0-based, i < j.
LieAlgebraPair load_lie_pair(const std::string& path);

// Twist files: JSON list of {hbar, coeff: [{exp, c}], left, right}; duplicate
// keys merge, slots beyond the context order truncate away.
DynTwist load_dyn_twist(const Context& ctx, const std::string& path);
void save_dyn_twist(const Context& ctx, const DynTwist& f, const std::string& path);

// Tensor files: JSON list of {alphas, monomials, coeff:{hbarPower: polyTerms}};
// save o load is the identity byte for byte on canonical files.
HTensor load_htensor(const Context& ctx, const std::string& path);
void save_htensor(const Context& ctx, const HTensor& t, const std::string& path);

// {pairs:[{gen1, gen2, coeff}]}, frame names d1..dN then the basis names.
void save_bivector(const Context& ctx, const MultiVector& v, const std::string& path);

// Enveloping-algebra elements: JSON list of {exponents, coeff} where coeff is
// the hbar-coefficient list of "p/q" strings (slot 0 first).
UeaElement load_uea(UeaFlavor flavor, std::uint32_t ngen, std::uint32_t order,
                    const std::string& path);
void save_uea(const UeaElement& u, const std::string& path);

// Bidifferential operators: JSON list of {alpha, beta, coeff:{hbarPower:
// polyTerms}}; save o load is the identity byte for byte on canonical files.
BiDiffOp load_bidiffop(const Context& ctx, const std::string& path);
void save_bidiffop(const Context& ctx, const BiDiffOp& op, const std::string& path);

}  // namespace gq
