#include "gq/lie.hpp"

#include <algorithm>
#include <set>

#include "gq/linalg.hpp"

namespace gq {

LieAlgebraPair::LieAlgebraPair(
    std::string name, std::uint32_t dim_g, std::uint32_t dim_l, std::vector<std::string> basis,
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> brackets)
    : name_(std::move(name)), dim_g_(dim_g), dim_l_(dim_l), basis_(std::move(basis)), br_(std::move(brackets)) {
	if (dim_g_ == 0) throw InputError("algebra: dimG must be positive");
	if (dim_l_ == 0 || dim_l_ > dim_g_) throw InputError("algebra: need 0 < dimL <= dimG");
	if (basis_.size() != dim_g_) throw InputError("algebra: basis name count != dimG");
	std::set<std::string> names(basis_.begin(), basis_.end());
	if (names.size() != basis_.size()) throw InputError("algebra: duplicate basis names");
	for (auto& [ij, terms] : br_) {
		if (ij.first >= ij.second) throw InputError("algebra: bracket indices must satisfy i < j");
		if (ij.second >= dim_g_) throw InputError("algebra: bracket index out of range");
		std::set<std::uint32_t> seen;
		for (auto& t : terms) {
			if (t.k >= dim_g_) throw InputError("algebra: bracket target index out of range");
			if (!seen.insert(t.k).second) throw InputError("algebra: duplicate bracket term");
		}
		// l must be closed under the bracket: [l,l] stays in the span of l.
		if (ij.second < dim_l_)
			for (auto& t : terms)
				if (t.k >= dim_l_ && !is_zero(t.c))
					throw InputError("algebra: l is not a subalgebra (bracket [" + basis_[ij.first] + "," +
					                 basis_[ij.second] + "] leaves l)");
	}
}

std::vector<BracketTerm> LieAlgebraPair::bracket(std::uint32_t i, std::uint32_t j) const {
	if (i == j) return {};
	const bool flip = i > j;
	if (flip) std::swap(i, j);
	auto it = br_.find({i, j});
	if (it == br_.end()) return {};
	std::vector<BracketTerm> out = it->second;
	if (flip)
		for (auto& t : out) t.c = -t.c;
	return out;
}

std::vector<Rational> LieAlgebraPair::bracket_vectors(const std::vector<Rational>& v,
                                                      const std::vector<Rational>& w) const {
	std::vector<Rational> out(dim_g_, Rational(0));
	for (std::uint32_t i = 0; i < dim_g_; ++i) {
		if (is_zero(v[i])) continue;
		for (std::uint32_t j = 0; j < dim_g_; ++j) {
			if (is_zero(w[j])) continue;
			for (const auto& t : bracket(i, j)) out[t.k] += v[i] * w[j] * t.c;
		}
	}
	return out;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebraPair& pair) {
	std::vector<JacobiViolation> out;
	const auto m = pair.dim_g();
	auto basis_vec = [&](std::uint32_t i) {
		std::vector<Rational> v(m, Rational(0));
		v[i] = 1;
		return v;
	};
	for (std::uint32_t i = 0; i < m; ++i)
		for (std::uint32_t j = i + 1; j < m; ++j)
			for (std::uint32_t k = j + 1; k < m; ++k) {
				const auto xi = basis_vec(i), xj = basis_vec(j), xk = basis_vec(k);
				auto res = pair.bracket_vectors(pair.bracket_vectors(xi, xj), xk);
				const auto t2 = pair.bracket_vectors(pair.bracket_vectors(xj, xk), xi);
				const auto t3 = pair.bracket_vectors(pair.bracket_vectors(xk, xi), xj);
				bool zero = true;
				for (std::uint32_t a = 0; a < m; ++a) {
					res[a] += t2[a] + t3[a];
					if (!is_zero(res[a])) zero = false;
				}
				if (!zero) out.push_back({i, j, k, std::move(res)});
			}
	return out;
}

Poly coadjoint_act(const LieAlgebraPair& pair, std::uint32_t i, const Poly& f) {
	if (i >= pair.dim_l()) throw InputError("coadjoint_act: generator index outside l");
	const auto& ring = f.ring();
	if (ring.nvars() != pair.dim_l()) throw InputError("coadjoint_act: variable count != dimL");
	Poly out = Poly::zero(ring);
	for (std::uint32_t j = 0; j < pair.dim_l(); ++j) {
		const Poly df = f.partial(j);
		if (df.is_zero()) continue;
		Poly image = Poly::zero(ring);  // ad*_{l_i}(lambda_j) = sum_k c_{ij}^k lambda_k
		for (const auto& t : pair.bracket(i, j)) image += Poly::variable(ring, t.k) * t.c;
		out += df * image;
	}
	return out;
}

void validate_polarization(const LieAlgebraPair& pair, const Polarization& pol) {
	const auto n = pair.dim_l(), m = pair.dim_g();
	std::set<std::uint32_t> seen;
	for (const auto* side : {&pol.uplus, &pol.uminus})
		for (auto a : *side) {
			if (a < n || a >= m) throw InputError("polarization: index must lie in the complement of l");
			if (!seen.insert(a).second) throw InputError("polarization: repeated index");
		}
	if (seen.size() != m - n) throw InputError("polarization: u+ and u- must partition the complement of l");
	// [l, u+-] must stay inside the respective side.
	for (const auto* side : {&pol.uplus, &pol.uminus})
		for (auto a : *side)
			for (std::uint32_t i = 0; i < n; ++i)
				for (const auto& t : pair.bracket(i, a)) {
					if (is_zero(t.c)) continue;
					if (std::find(side->begin(), side->end(), t.k) == side->end())
						throw InputError("polarization: [l, " + pair.basis()[a] + "] leaves its side");
				}
}

std::vector<std::vector<Poly>> omega_matrix(const LieAlgebraPair& pair, const Polarization& pol) {
	validate_polarization(pair, pol);
	std::vector<std::uint32_t> u = pol.uplus;
	u.insert(u.end(), pol.uminus.begin(), pol.uminus.end());
	const auto ring = PolyRing::exact(pair.dim_l());
	std::vector<std::vector<Poly>> w(u.size(), std::vector<Poly>(u.size(), Poly::zero(ring)));
	for (std::size_t a = 0; a < u.size(); ++a)
		for (std::size_t b = 0; b < u.size(); ++b)
			for (const auto& t : pair.bracket(u[a], u[b]))
				if (t.k < pair.dim_l()) w[a][b] += Poly::variable(ring, t.k) * t.c;
	return w;
}

Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m) {
	if (m.empty()) throw InputError("det: empty matrix");
	const std::size_t n = m.size();
	if (n == 1) return m[0][0];
	const auto& ring = m[0][0].ring();
	Poly det = Poly::zero(ring);
	// cofactor expansion along the first row; sizes here are tiny
	for (std::size_t c = 0; c < n; ++c) {
		if (m[0][c].is_zero()) continue;
		std::vector<std::vector<Poly>> minor;
		for (std::size_t r = 1; r < n; ++r) {
			std::vector<Poly> row;
			for (std::size_t cc = 0; cc < n; ++cc)
				if (cc != c) row.push_back(m[r][cc]);
			minor.push_back(std::move(row));
		}
		Poly term = m[0][c] * det_poly_matrix(minor);
		det += (c % 2 == 0) ? term : -term;
	}
	return det;
}

NondegeneracyReport det_omega(const LieAlgebraPair& pair, const Polarization& pol) {
	const auto w = omega_matrix(pair, pol);
	NondegeneracyReport rep{det_poly_matrix(w), false, std::nullopt};
	rep.nondegenerate = !rep.det.is_zero();
	if (!rep.nondegenerate) return rep;
	const std::uint32_t n = pair.dim_l();
	static const long scan[] = {0, 1, -1, 2, -2, 3, -3};
	std::vector<std::size_t> odo(n, 0);
	while (true) {
		std::vector<Rational> pt;
		pt.reserve(n);
		for (auto s : odo) pt.emplace_back(scan[s]);
		if (!is_zero(rep.det.eval(pt))) {
			rep.witness = std::move(pt);
			return rep;
		}
		std::size_t d = 0;
		while (d < n && odo[d] == 6) odo[d++] = 0;
		if (d == n) break;
		++odo[d];
	}
	return rep;  // nonzero polynomial with no witness in the box
}

std::vector<std::vector<Rational>> character_locus(const LieAlgebraPair& pair) {
	const auto n = pair.dim_l();
	RatMatrix rows;
	for (std::uint32_t i = 0; i < n; ++i)
		for (std::uint32_t j = i + 1; j < n; ++j) {
			std::vector<Rational> row(n, Rational(0));
			bool nonzero = false;
			for (const auto& t : pair.bracket(i, j)) {
				row[t.k] = t.c;
				nonzero = nonzero || !is_zero(t.c);
			}
			if (nonzero) rows.push_back(std::move(row));
		}
	if (rows.empty()) {
		// l abelian: W = l*
		std::vector<std::vector<Rational>> basis;
		for (std::uint32_t i = 0; i < n; ++i) {
			std::vector<Rational> v(n, Rational(0));
			v[i] = 1;
			basis.push_back(std::move(v));
		}
		return basis;
	}
	return nullspace(std::move(rows), n);
}

}  // namespace gq
