#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gq/rational.hpp"

namespace gq {

// Exponent vector of fixed length. Doubles as a derivative multi-index and as
// a PBW-basis monomial. Ordered by total degree first, then lexicographically;
// every container iteration in the engine inherits this deterministic order.
class MultiIndex {
 public:
	MultiIndex() = default;
	explicit MultiIndex(std::size_t n) : e_(n, 0) {}
	MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
	explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

	static MultiIndex unit(std::size_t n, std::size_t i) {
		MultiIndex m(n);
		m.e_.at(i) = 1;
		return m;
	}

	std::size_t size() const { return e_.size(); }
	std::uint32_t operator[](std::size_t i) const { return e_[i]; }
	std::uint32_t& operator[](std::size_t i) { return e_[i]; }
	const std::vector<std::uint32_t>& exponents() const { return e_; }

	std::uint32_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint32_t{0}); }
	bool is_zero() const { return degree() == 0; }

	friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

	friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
		if (auto c = a.degree() <=> b.degree(); c != 0) return c;
		if (auto c = a.e_.size() <=> b.e_.size(); c != 0) return c;
		for (std::size_t i = 0; i < a.e_.size(); ++i)
			if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
		return std::strong_ordering::equal;
	}

	MultiIndex operator+(const MultiIndex& o) const {
		check_size(o);
		MultiIndex r(*this);
		for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
		return r;
	}

	// Componentwise difference; caller must ensure o <= *this componentwise.
	MultiIndex operator-(const MultiIndex& o) const {
		check_size(o);
		MultiIndex r(*this);
		for (std::size_t i = 0; i < e_.size(); ++i) {
			if (o.e_[i] > e_[i]) throw std::invalid_argument("multi-index: negative exponent");
			r.e_[i] -= o.e_[i];
		}
		return r;
	}

	bool contains(const MultiIndex& o) const {
		check_size(o);
		for (std::size_t i = 0; i < e_.size(); ++i)
			if (o.e_[i] > e_[i]) return false;
		return true;
	}

	// alpha! = prod alpha_i!
	Rational factorial() const {
		Rational f(1);
		for (auto x : e_) f *= gq::factorial(x);
		return f;
	}

	// C(alpha, gamma) = prod C(alpha_i, gamma_i); zero unless gamma <= alpha.
	friend Rational binomial(const MultiIndex& a, const MultiIndex& g) {
		a.check_size(g);
		Rational b(1);
		for (std::size_t i = 0; i < a.e_.size(); ++i) {
			b *= gq::binomial(a.e_[i], g.e_[i]);
			if (gq::is_zero(b)) return b;
		}
		return b;
	}

 private:
	void check_size(const MultiIndex& o) const {
		if (e_.size() != o.e_.size()) throw std::invalid_argument("multi-index: length mismatch");
	}

	std::vector<std::uint32_t> e_;
};

// Enumerates all multi-indices of length n with total degree <= maxdeg,
// in the canonical (degree, lex) order.
inline std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::uint32_t maxdeg) {
	std::vector<MultiIndex> out;
	out.emplace_back(n);
	for (std::uint32_t d = 1; d <= maxdeg; ++d) {
		// build all compositions of d into n parts, lexicographically
		std::vector<MultiIndex> layer;
		MultiIndex cur(n);
		auto rec = [&](auto&& self, std::size_t pos, std::uint32_t rem) -> void {
			if (pos + 1 == n) {
				cur[pos] = rem;
				layer.push_back(cur);
				return;
			}
			for (std::uint32_t v = 0; v <= rem; ++v) {
				cur[pos] = v;
				self(self, pos + 1, rem - v);
			}
			cur[pos] = 0;
		};
		if (n == 0) break;
		rec(rec, 0, d);
		std::sort(layer.begin(), layer.end());
		out.insert(out.end(), layer.begin(), layer.end());
	}
	return out;
}

}  // namespace gq
