#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qbf {

/// Arbitrary-precision rational, canonical form (gcd 1, positive denominator).
/// GMP keeps results of arithmetic canonical; only raw construction needs care.
using BigRat = mpq_class;

inline BigRat ratio(long num, long den = 1)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	BigRat r(num, den);
	r.canonicalize();
	return r;
}

inline BigRat rat_div(const BigRat &a, const BigRat &b)
{
	if (b == 0)
		throw std::domain_error("rational division by zero");
	return a / b;
}

inline std::string to_string(const BigRat &r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws on malformed input or zero denominator.
inline BigRat parse_rat(const std::string &s)
{
	BigRat r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("bad rational literal: " + s);
	if (r.get_den() == 0)
		throw std::domain_error("rational with zero denominator: " + s);
	r.canonicalize();
	return r;
}

inline double to_double(const BigRat &r) { return r.get_d(); }

inline BigRat zero_like(const BigRat &) { return BigRat(0); }
inline BigRat one_like(const BigRat &) { return BigRat(1); }
inline bool is_zero(const BigRat &r) { return r == 0; }

// Dispatch helpers for generic code. Ordinary lookup covers the BigRat
// overloads above; argument-dependent lookup picks up the per-type
// overloads that later headers declare in this namespace.
namespace detail {
template <typename T> bool is_zero_of(const T &x) { return is_zero(x); }
template <typename T> T zero_of(const T &x) { return zero_like(x); }
template <typename T> T one_of(const T &x) { return one_like(x); }
template <typename T> T q_shifted(const T &x, int e) { return mul_q_power(x, e); }
} // namespace detail

} // namespace qbf
