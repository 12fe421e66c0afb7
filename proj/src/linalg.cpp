#include "gq/linalg.hpp"

namespace gq {

std::vector<std::size_t> rref(RatMatrix& m) {
	std::vector<std::size_t> pivots;
	if (m.empty()) return pivots;
	const std::size_t rows = m.size(), cols = m[0].size();
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t sel = r;
		while (sel < rows && is_zero(m[sel][c])) ++sel;
		if (sel == rows) continue;
		std::swap(m[sel], m[r]);
		const Rational inv = 1 / m[r][c];
		for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == r || is_zero(m[i][c])) continue;
			const Rational f = m[i][c];
			for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

RatMatrix nullspace(RatMatrix m, std::size_t ncols) {
	for (auto& row : m)
		if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
	const auto pivots = rref(m);
	std::vector<bool> is_pivot(ncols, false);
	for (auto c : pivots) is_pivot[c] = true;
	RatMatrix basis;
	for (std::size_t free = 0; free < ncols; ++free) {
		if (is_pivot[free]) continue;
		std::vector<Rational> v(ncols, Rational(0));
		v[free] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
		basis.push_back(std::move(v));
	}
	return basis;
}

}  // namespace gq
