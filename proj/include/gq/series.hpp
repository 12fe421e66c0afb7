#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gq/poly.hpp"
#include "gq/rational.hpp"

namespace gq {

// Formal power series in hbar truncated at a fixed order K: slots 0..K.
// Every binary operation insists on matching truncation orders; mixed-order
// arithmetic is a silent-error factory and is rejected outright.
template <class T>
class Series {
 public:
	Series() = default;
	Series(std::uint32_t order, T zero) : c_(order + 1, zero) {}

	static Series constant(std::uint32_t order, T zero, T value) {
		Series s(order, std::move(zero));
		s.c_[0] = std::move(value);
		return s;
	}

	std::uint32_t order() const { return static_cast<std::uint32_t>(c_.size()) - 1; }
	const T& operator[](std::size_t k) const { return c_.at(k); }
	T& operator[](std::size_t k) { return c_.at(k); }
	const std::vector<T>& coeffs() const { return c_; }

	bool is_zero() const {
		for (const auto& x : c_)
			if (!x.is_zero()) return false;
		return true;
	}

	// Lowest hbar power with a nonzero slot; order()+1 when the series is zero.
	std::uint32_t valuation() const {
		for (std::uint32_t k = 0; k < c_.size(); ++k)
			if (!c_[k].is_zero()) return k;
		return order() + 1;
	}

	friend bool operator==(const Series& a, const Series& b) = default;

	Series& operator+=(const Series& o) {
		check(o);
		for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
		return *this;
	}
	Series& operator-=(const Series& o) {
		check(o);
		for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
		return *this;
	}
	friend Series operator+(Series a, const Series& b) { return a += b; }
	friend Series operator-(Series a, const Series& b) { return a -= b; }
	friend Series operator-(Series a) {
		for (auto& x : a.c_) x = -x;
		return a;
	}

	friend Series operator*(const Series& a, const Series& b) {
		a.check(b);
		Series r = a.zero_like();
		for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
			if (a.c_[i].is_zero()) continue;
			for (std::uint32_t j = 0; i + j < b.c_.size(); ++j) {
				if (b.c_[j].is_zero()) continue;
				r.c_[i + j] += a.c_[i] * b.c_[j];
			}
		}
		return r;
	}
	Series& operator*=(const Series& o) { return *this = *this * o; }

	Series& operator*=(const Rational& q) {
		for (auto& x : c_) x *= q;
		return *this;
	}
	friend Series operator*(Series a, const Rational& q) { return a *= q; }
	friend Series operator*(const Rational& q, Series a) { return a *= q; }

	// Multiplication by hbar^j: shifts slots up, top slots fall off.
	Series shift(std::uint32_t j) const {
		Series r = zero_like();
		for (std::uint32_t k = 0; k + j < c_.size(); ++k) r.c_[k + j] = c_[k];
		return r;
	}

	Series zero_like() const {
		Series r = *this;
		for (auto& x : r.c_) x = zero_of(x);
		return r;
	}

	// Slotwise product with a fixed element of the coefficient ring.
	Series scaled_by(const T& x) const {
		Series r = *this;
		for (auto& v : r.c_) v = v * x;
		return r;
	}

 private:
	static T zero_of(const T& x) {
		if constexpr (std::is_same_v<T, Poly>)
			return Poly::zero(x.ring());
		else
			return T(0);
	}

	void check(const Series& o) const {
		if (c_.size() != o.c_.size()) throw std::invalid_argument("series: truncation order mismatch");
	}

	std::vector<T> c_;
};

// Rational scalars: mpq_class has no is_zero()/member arithmetic mismatch, so
// series of rationals use a thin adapter.
class RatScalar {
 public:
	RatScalar(Rational v = Rational(0)) : v_(std::move(v)) {}
	const Rational& value() const { return v_; }
	bool is_zero() const { return gq::is_zero(v_); }
	friend bool operator==(const RatScalar&, const RatScalar&) = default;
	RatScalar& operator+=(const RatScalar& o) {
		v_ += o.v_;
		return *this;
	}
	RatScalar& operator-=(const RatScalar& o) {
		v_ -= o.v_;
		return *this;
	}
	friend RatScalar operator+(RatScalar a, const RatScalar& b) { return a += b; }
	friend RatScalar operator-(RatScalar a, const RatScalar& b) { return a -= b; }
	friend RatScalar operator-(RatScalar a) {
		a.v_ = -a.v_;
		return a;
	}
	friend RatScalar operator*(const RatScalar& a, const RatScalar& b) { return RatScalar(a.v_ * b.v_); }
	RatScalar& operator*=(const RatScalar& o) {
		v_ *= o.v_;
		return *this;
	}
	RatScalar& operator*=(const Rational& q) {
		v_ *= q;
		return *this;
	}

 private:
	Rational v_;
};

using RatSeries = Series<RatScalar>;
using PolySeries = Series<Poly>;

inline RatSeries rat_series(std::uint32_t order) { return RatSeries(order, RatScalar()); }
inline RatSeries rat_series(std::uint32_t order, const Rational& c0) {
	return RatSeries::constant(order, RatScalar(), RatScalar(c0));
}

inline PolySeries poly_series(std::uint32_t order, const PolyRing& ring) {
	return PolySeries(order, Poly::zero(ring));
}

// Slotwise d^alpha.
inline PolySeries series_partial(const PolySeries& f, const MultiIndex& alpha) {
	PolySeries r = f;
	for (std::uint32_t k = 0; k <= r.order(); ++k) r[k] = r[k].partial(alpha);
	return r;
}
inline PolySeries poly_series(std::uint32_t order, Poly c0) {
	PolySeries s(order, Poly::zero(c0.ring()));
	s[0] = std::move(c0);
	return s;
}

}  // namespace gq
