#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gq/multi_index.hpp"
#include "gq/rational.hpp"

namespace gq {

enum class PolyMode { exact, jet };

// Value-semantic ring descriptor. Exact mode: polynomials in the coordinates
// lambda_1..lambda_n. Jet mode: truncated expansions at base_point in the
// shifted variables mu_i = lambda_i - base_i, degrees > max_degree dropped.
class PolyRing {
 public:
	PolyRing() = default;
	static PolyRing exact(std::size_t nvars) { return PolyRing(nvars, PolyMode::exact, 0, nullptr); }
	static PolyRing jet(std::size_t nvars, std::vector<Rational> base, std::uint32_t max_degree) {
		if (base.size() != nvars) throw std::invalid_argument("jet ring: base point size mismatch");
		return PolyRing(nvars, PolyMode::jet, max_degree,
		                std::make_shared<const std::vector<Rational>>(std::move(base)));
	}

	std::size_t nvars() const { return nvars_; }
	PolyMode mode() const { return mode_; }
	std::uint32_t jet_degree() const { return jet_degree_; }
	const std::vector<Rational>& base_point() const { return *base_; }

	friend bool operator==(const PolyRing& a, const PolyRing& b) {
		if (a.nvars_ != b.nvars_ || a.mode_ != b.mode_) return false;
		if (a.mode_ == PolyMode::exact) return true;
		return a.jet_degree_ == b.jet_degree_ && *a.base_ == *b.base_;
	}

 private:
	PolyRing(std::size_t n, PolyMode m, std::uint32_t d, std::shared_ptr<const std::vector<Rational>> b)
	    : nvars_(n), mode_(m), jet_degree_(d), base_(std::move(b)) {}

	std::size_t nvars_ = 0;
	PolyMode mode_ = PolyMode::exact;
	std::uint32_t jet_degree_ = 0;
	std::shared_ptr<const std::vector<Rational>> base_;
};

// Sparse polynomial (or jet) with exact rational coefficients. The term map
// never stores zero coefficients, so equality is structural.
class Poly {
 public:
	Poly() = default;
	explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}

	static Poly zero(const PolyRing& ring) { return Poly(ring); }

	static Poly constant(const PolyRing& ring, Rational c) {
		Poly p(ring);
		p.add_term(MultiIndex(ring.nvars()), std::move(c));
		return p;
	}

	// Monomial in the ring's native variables (mu_i when in jet mode).
	static Poly monomial(const PolyRing& ring, MultiIndex m, Rational c = Rational(1)) {
		if (m.size() != ring.nvars()) throw std::invalid_argument("poly: monomial length mismatch");
		Poly p(ring);
		p.add_term(std::move(m), std::move(c));
		return p;
	}

	// The coordinate lambda_i. In jet mode this is base_i + mu_i.
	static Poly variable(const PolyRing& ring, std::size_t i) {
		Poly p = monomial(ring, MultiIndex::unit(ring.nvars(), i));
		if (ring.mode() == PolyMode::jet) p.add_term(MultiIndex(ring.nvars()), ring.base_point()[i]);
		return p;
	}

	const PolyRing& ring() const { return ring_; }
	const std::map<MultiIndex, Rational>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	std::uint32_t degree() const {
		std::uint32_t d = 0;
		for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
		return d;
	}

	Rational coeff(const MultiIndex& m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	void add_term(MultiIndex m, Rational c) {
		if (gq::is_zero(c)) return;
		if (ring_.mode() == PolyMode::jet && m.degree() > ring_.jet_degree()) return;
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(std::move(m), std::move(c));
		} else {
			it->second += c;
			if (gq::is_zero(it->second)) terms_.erase(it);
		}
	}

	friend bool operator==(const Poly& a, const Poly& b) {
		return a.ring_ == b.ring_ && a.terms_ == b.terms_;
	}

	Poly& operator+=(const Poly& o) {
		check_ring(o);
		for (const auto& [m, c] : o.terms_) add_term(m, c);
		return *this;
	}
	Poly& operator-=(const Poly& o) {
		check_ring(o);
		for (const auto& [m, c] : o.terms_) add_term(m, -c);
		return *this;
	}
	friend Poly operator+(Poly a, const Poly& b) { return a += b; }
	friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
	friend Poly operator-(const Poly& a) {
		Poly r(a.ring_);
		for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
		return r;
	}

	friend Poly operator*(const Poly& a, const Poly& b) {
		a.check_ring(b);
		Poly r(a.ring_);
		for (const auto& [ma, ca] : a.terms_)
			for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
		return r;
	}
	Poly& operator*=(const Poly& o) { return *this = *this * o; }

	Poly& operator*=(const Rational& c) {
		if (gq::is_zero(c)) {
			terms_.clear();
			return *this;
		}
		for (auto& [m, v] : terms_) v *= c;
		return *this;
	}
	friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
	friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

	// d/dlambda_i; in jet mode equals d/dmu_i.
	Poly partial(std::size_t i) const {
		Poly r(ring_);
		for (const auto& [m, c] : terms_) {
			if (m[i] == 0) continue;
			MultiIndex d = m;
			d[i] -= 1;
			r.add_term(std::move(d), c * Rational(static_cast<long>(m[i])));
		}
		return r;
	}

	Poly partial(const MultiIndex& alpha) const {
		Poly r = *this;
		for (std::size_t i = 0; i < alpha.size(); ++i)
			for (std::uint32_t k = 0; k < alpha[i]; ++k) r = r.partial(i);
		return r;
	}

	// Evaluation at a rational point given in lambda coordinates.
	Rational eval(std::span<const Rational> lambda) const {
		if (lambda.size() != ring_.nvars()) throw std::invalid_argument("poly: eval point size");
		std::vector<Rational> x(lambda.begin(), lambda.end());
		if (ring_.mode() == PolyMode::jet)
			for (std::size_t i = 0; i < x.size(); ++i) x[i] -= ring_.base_point()[i];
		Rational total(0);
		for (const auto& [m, c] : terms_) {
			Rational t = c;
			for (std::size_t i = 0; i < x.size(); ++i)
				for (std::uint32_t k = 0; k < m[i]; ++k) t *= x[i];
			total += t;
		}
		return total;
	}

	// Re-expands an exact polynomial in the given jet ring (lambda = base + mu).
	Poly embed(const PolyRing& target) const {
		if (ring_.mode() != PolyMode::exact) throw std::invalid_argument("poly: embed expects exact source");
		if (target.mode() == PolyMode::exact) {
			if (!(target == ring_)) throw std::invalid_argument("poly: embed ring mismatch");
			return *this;
		}
		Poly r(target);
		for (const auto& [m, c] : terms_) {
			Poly t = Poly::constant(target, c);
			for (std::size_t i = 0; i < m.size(); ++i)
				for (std::uint32_t k = 0; k < m[i]; ++k) t *= Poly::variable(target, i);
			r += t;
		}
		return r;
	}

 private:
	void check_ring(const Poly& o) const {
		if (!(ring_ == o.ring_)) throw std::invalid_argument("poly: ring mismatch");
	}

	PolyRing ring_;
	std::map<MultiIndex, Rational> terms_;
};

}  // namespace gq
