#pragma once

#include "qbf/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace qbf {

/// Rational function in q over the rationals. Canonical form: numerator and
/// denominator coprime, denominator monic and nonzero. Equality of canonical
/// forms is the equality test.
class RatFunc {
  public:
	RatFunc() : num_(), den_(BigRat(1)) {}
	RatFunc(int c) : num_(BigRat(c)), den_(BigRat(1)) {}
	RatFunc(const BigRat &c) : num_(c), den_(BigRat(1)) {}
	RatFunc(PolyQ p) : num_(std::move(p)), den_(BigRat(1)) {}
	RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den))
	{
		if (den_.is_zero())
			throw std::domain_error("rational function with zero denominator");
		reduce();
	}

	const PolyQ &num() const { return num_; }
	const PolyQ &den() const { return den_; }

	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }
	bool is_polynomial() const { return den_.is_one(); }

	friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
	{
		return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
	}
	friend RatFunc operator-(const RatFunc &a, const RatFunc &b)
	{
		return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
	}
	friend RatFunc operator-(const RatFunc &a) { return RatFunc(-a.num_, a.den_); }
	friend RatFunc operator*(const RatFunc &a, const RatFunc &b)
	{
		return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
	}
	friend RatFunc operator/(const RatFunc &a, const RatFunc &b)
	{
		if (b.is_zero())
			throw std::domain_error("rational function division by zero");
		return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
	}

	RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
	RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
	RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
	RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

	friend bool operator==(const RatFunc &a, const RatFunc &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}

	/// q^e, negative exponents allowed.
	static RatFunc q_pow(int e)
	{
		if (e >= 0)
			return RatFunc(q_power(e));
		return RatFunc(PolyQ(1), q_power(-e));
	}

	/// Evaluate at a numeric q; S is double or std::complex<double>.
	template <typename S> S evaluate(const S &q) const
	{
		S n = num_.evaluate(q);
		S d = den_.evaluate(q);
		return n / d;
	}

  private:
	void reduce()
	{
		if (num_.is_zero()) {
			den_ = PolyQ(BigRat(1));
			return;
		}
		PolyQ g = gcd(num_, den_);
		if (!g.is_one()) {
			num_ = divmod(num_, g).first;
			den_ = divmod(den_, g).first;
		}
		BigRat lead = den_.leading();
		if (lead != 1) {
			BigRat inv = 1 / lead;
			num_ = inv * num_;
			den_ = inv * den_;
		}
	}

	PolyQ num_, den_;
};

using RatFuncQ = RatFunc;

inline RatFunc zero_like(const RatFunc &) { return RatFunc(); }
inline RatFunc one_like(const RatFunc &) { return RatFunc(1); }
inline bool is_zero(const RatFunc &f) { return f.is_zero(); }

/// f(q) -> q^e f(q); the substitution hook used by series shift_q.
inline RatFunc mul_q_power(const RatFunc &f, int e) { return f * RatFunc::q_pow(e); }

/// Polynomial in the quasi-periodicity variable z over rational functions of q.
using PolyZ = Poly<RatFuncQ>;

inline PolyZ mul_q_power(const PolyZ &p, int e)
{
	std::vector<RatFuncQ> c = p.coefficients();
	for (auto &x : c)
		x = mul_q_power(x, e);
	return PolyZ(std::move(c));
}

inline PolyZ z_power(int e) { return PolyZ::monomial(RatFuncQ(1), e); }

} // namespace qbf
