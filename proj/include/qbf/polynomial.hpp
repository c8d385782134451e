#pragma once

#include "qbf/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qbf {

/// Dense univariate polynomial over a commutative coefficient ring R,
/// coefficients ascending in the power of the variable, trailing
/// coefficient nonzero (zero polynomial stores no coefficients).
template <typename R> class Poly {
  public:
	Poly() = default;
	Poly(int c) : Poly(R(c)) {}
	Poly(R c)
	{
		if (!detail::is_zero_of(c))
			c_.push_back(std::move(c));
	}
	explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

	static Poly variable() { return monomial(R(1), 1); }

	static Poly monomial(R coeff, int power)
	{
		assert(power >= 0);
		Poly p;
		if (detail::is_zero_of(coeff))
			return p;
		p.c_.assign(power + 1, R(0));
		p.c_[power] = std::move(coeff);
		return p;
	}

	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }
	bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }

	const std::vector<R> &coefficients() const { return c_; }

	R coeff(int power) const
	{
		if (power < 0 || power > degree())
			return R(0);
		return c_[power];
	}

	const R &leading() const
	{
		assert(!c_.empty());
		return c_.back();
	}

	friend Poly operator+(const Poly &a, const Poly &b)
	{
		Poly r;
		r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
		for (size_t i = 0; i < a.c_.size(); ++i)
			r.c_[i] = a.c_[i];
		for (size_t i = 0; i < b.c_.size(); ++i)
			r.c_[i] = r.c_[i] + b.c_[i];
		r.trim();
		return r;
	}

	friend Poly operator-(const Poly &a, const Poly &b)
	{
		Poly r;
		r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
		for (size_t i = 0; i < a.c_.size(); ++i)
			r.c_[i] = a.c_[i];
		for (size_t i = 0; i < b.c_.size(); ++i)
			r.c_[i] = r.c_[i] - b.c_[i];
		r.trim();
		return r;
	}

	friend Poly operator-(const Poly &a) { return Poly() - a; }

	friend Poly operator*(const Poly &a, const Poly &b)
	{
		if (a.is_zero() || b.is_zero())
			return Poly();
		Poly r;
		r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
		for (size_t i = 0; i < a.c_.size(); ++i)
			for (size_t j = 0; j < b.c_.size(); ++j)
				r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
		r.trim();
		return r;
	}

	friend Poly operator*(const R &s, const Poly &p)
	{
		Poly r = p;
		for (auto &c : r.c_)
			c = s * c;
		r.trim();
		return r;
	}

	Poly &operator+=(const Poly &o) { return *this = *this + o; }
	Poly &operator-=(const Poly &o) { return *this = *this - o; }
	Poly &operator*=(const Poly &o) { return *this = *this * o; }

	friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }

	Poly shifted(int power) const
	{
		if (is_zero())
			return Poly();
		assert(power >= 0);
		Poly r;
		r.c_.assign(c_.size() + power, R(0));
		for (size_t i = 0; i < c_.size(); ++i)
			r.c_[i + power] = c_[i];
		return r;
	}

	Poly pow(int e) const
	{
		assert(e >= 0);
		Poly r(R(1)), base = *this;
		for (; e > 0; e >>= 1) {
			if (e & 1)
				r = r * base;
			base = base * base;
		}
		return r;
	}

	template <typename S> S evaluate(const S &x) const
	{
		S acc = detail::zero_of(x);
		for (size_t i = c_.size(); i-- > 0;)
			acc = acc * x + S(c_[i]);
		return acc;
	}

	// Quotient and remainder; requires invertible leading coefficient.
	friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
	{
		if (b.is_zero())
			throw std::domain_error("polynomial division by zero");
		Poly q, r = a;
		const R inv_lead = R(1) / b.leading();
		while (!r.is_zero() && r.degree() >= b.degree()) {
			R f = r.leading() * inv_lead;
			int d = r.degree() - b.degree();
			q += monomial(f, d);
			r -= monomial(f, d) * b;
		}
		return {q, r};
	}

	/// Monic gcd (field coefficients).
	friend Poly gcd(Poly a, Poly b)
	{
		while (!b.is_zero()) {
			a = divmod(a, b).second;
			std::swap(a, b);
		}
		if (!a.is_zero())
			a = (R(1) / a.leading()) * a;
		return a;
	}

  private:
	void trim()
	{
		while (!c_.empty() && detail::is_zero_of(c_.back()))
			c_.pop_back();
	}

	std::vector<R> c_;
};

/// Polynomial in the deformation parameter q over the rationals.
using PolyQ = Poly<BigRat>;

template <typename R> Poly<R> zero_like(const Poly<R> &) { return Poly<R>(); }
template <typename R> Poly<R> one_like(const Poly<R> &) { return Poly<R>(R(1)); }
template <typename R> bool is_zero(const Poly<R> &p) { return p.is_zero(); }

inline PolyQ q_power(int e)
{
	assert(e >= 0);
	return PolyQ::monomial(BigRat(1), e);
}

} // namespace qbf
