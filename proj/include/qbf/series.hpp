#pragma once

#include "qbf/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace qbf {

/// Formal power series truncated eagerly at a fixed order: exactly O+1
/// stored coefficients, arithmetic never reads beyond the truncation.
/// Binary operations truncate at the smaller of the two input orders.
template <typename R> class VSeries {
  public:
	VSeries() = default;
	explicit VSeries(std::vector<R> coeffs) : c_(std::move(coeffs))
	{
		assert(!c_.empty());
	}
	static VSeries constant(R c0, int order)
	{
		assert(order >= 0);
		std::vector<R> c;
		c.reserve(order + 1);
		c.push_back(std::move(c0));
		for (int r = 1; r <= order; ++r)
			c.push_back(detail::zero_of(c.front()));
		return VSeries(std::move(c));
	}

	int order() const { return static_cast<int>(c_.size()) - 1; }
	const R &operator[](int r) const { return c_[r]; }
	R &operator[](int r) { return c_[r]; }
	const std::vector<R> &coefficients() const { return c_; }

	VSeries truncated(int order) const
	{
		assert(order >= 0 && order <= this->order());
		return VSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1));
	}

	friend VSeries operator+(const VSeries &a, const VSeries &b)
	{
		int o = std::min(a.order(), b.order());
		std::vector<R> c;
		c.reserve(o + 1);
		for (int r = 0; r <= o; ++r)
			c.push_back(a[r] + b[r]);
		return VSeries(std::move(c));
	}

	friend VSeries operator-(const VSeries &a, const VSeries &b)
	{
		int o = std::min(a.order(), b.order());
		std::vector<R> c;
		c.reserve(o + 1);
		for (int r = 0; r <= o; ++r)
			c.push_back(a[r] - b[r]);
		return VSeries(std::move(c));
	}

	friend VSeries operator*(const VSeries &a, const VSeries &b)
	{
		int o = std::min(a.order(), b.order());
		std::vector<R> c;
		c.reserve(o + 1);
		for (int r = 0; r <= o; ++r) {
			R acc = a[0] * b[r];
			for (int s = 1; s <= r; ++s)
				acc = acc + a[s] * b[r - s];
			c.push_back(std::move(acc));
		}
		return VSeries(std::move(c));
	}

	friend VSeries operator*(const R &s, const VSeries &a)
	{
		std::vector<R> c;
		c.reserve(a.order() + 1);
		for (const R &x : a.c_)
			c.push_back(s * x);
		return VSeries(std::move(c));
	}

	VSeries &operator+=(const VSeries &o) { return *this = *this + o; }
	VSeries &operator-=(const VSeries &o) { return *this = *this - o; }
	VSeries &operator*=(const VSeries &o) { return *this = *this * o; }

	friend bool operator==(const VSeries &a, const VSeries &b) { return a.c_ == b.c_; }

	bool is_zero() const
	{
		for (const R &x : c_)
			if (!detail::is_zero_of(x))
				return false;
		return true;
	}

	/// f(u) -> f(u q^{2s}): coefficient r picks up q^{2sr}.
	VSeries shift_q(int s) const
	{
		std::vector<R> c;
		c.reserve(c_.size());
		for (int r = 0; r < static_cast<int>(c_.size()); ++r)
			c.push_back(detail::q_shifted(c_[r], 2 * s * r));
		return VSeries(std::move(c));
	}

	/// Two-sided series inverse given the inverse of the constant term.
	VSeries invert_with(const R &inv0) const
	{
		std::vector<R> x;
		x.reserve(c_.size());
		x.push_back(inv0);
		for (int r = 1; r <= order(); ++r) {
			// x_r = -inv0 * sum_{s=1..r} c_s x_{r-s}
			R acc = c_[1] * x[r - 1];
			for (int s = 2; s <= r; ++s)
				acc = acc + c_[s] * x[r - s];
			x.push_back(detail::zero_of(acc) - inv0 * acc);
		}
		return VSeries(std::move(x));
	}

	/// Series inverse over a field-like ring; constant term must be a unit.
	VSeries invert() const
	{
		if (detail::is_zero_of(c_[0]))
			throw std::domain_error("series inverse: constant term is not a unit");
		return invert_with(detail::one_of(c_[0]) / c_[0]);
	}

  private:
	std::vector<R> c_;
};

template <typename R> VSeries<R> zero_like(const VSeries<R> &s)
{
	return VSeries<R>::constant(zero_like(s[0]), s.order());
}
template <typename R> VSeries<R> one_like(const VSeries<R> &s)
{
	return VSeries<R>::constant(one_like(s[0]), s.order());
}
template <typename R> bool is_zero(const VSeries<R> &s) { return s.is_zero(); }

template <typename R> VSeries<R> mul_q_power(const VSeries<R> &s, int e)
{
	std::vector<R> c;
	c.reserve(s.order() + 1);
	for (int r = 0; r <= s.order(); ++r)
		c.push_back(detail::q_shifted(s[r], e));
	return VSeries<R>(std::move(c));
}

} // namespace qbf
