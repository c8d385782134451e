#pragma once

#include "qbf/rational.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbf {

/// Sparse multivariate polynomial over a commutative ring R in a fixed
/// universe of commuting variables. Terms map canonical exponent vectors
/// (fixed variable order, length = number of variables) to nonzero
/// coefficients.
template <typename R> class SparsePoly {
  public:
	using Exponents = std::vector<int>;

	SparsePoly() : nvars_(0) {}
	/// A constant; carries no variables of its own and broadcasts into any
	/// universe on arithmetic.
	SparsePoly(int c) : SparsePoly(constant(0, R(c))) {}

	static SparsePoly zero(int nvars) { return SparsePoly(nvars, {}); }

	static SparsePoly constant(int nvars, R c)
	{
		SparsePoly p = zero(nvars);
		if (!detail::is_zero_of(c))
			p.terms_.emplace(Exponents(nvars, 0), std::move(c));
		return p;
	}

	static SparsePoly variable(int nvars, int index, int power = 1)
	{
		assert(index >= 0 && index < nvars && power >= 0);
		SparsePoly p = zero(nvars);
		Exponents e(nvars, 0);
		e[index] = power;
		p.terms_.emplace(std::move(e), R(1));
		return p;
	}

	static SparsePoly monomial(int nvars, Exponents e, R c)
	{
		assert(static_cast<int>(e.size()) == nvars);
		SparsePoly p = zero(nvars);
		if (!detail::is_zero_of(c))
			p.terms_.emplace(std::move(e), std::move(c));
		return p;
	}

	int nvars() const { return nvars_; }
	bool is_zero() const { return terms_.empty(); }
	const std::map<Exponents, R> &terms() const { return terms_; }
	size_t term_count() const { return terms_.size(); }

	R coeff(const Exponents &e) const
	{
		auto it = terms_.find(e);
		return it == terms_.end() ? R(0) : it->second;
	}

	friend SparsePoly operator+(const SparsePoly &a, const SparsePoly &b)
	{
		auto [x, y] = aligned(a, b);
		SparsePoly r = x;
		for (const auto &[e, c] : y.terms_)
			r.add_term(e, c);
		return r;
	}

	friend SparsePoly operator-(const SparsePoly &a, const SparsePoly &b)
	{
		auto [x, y] = aligned(a, b);
		SparsePoly r = x;
		for (const auto &[e, c] : y.terms_)
			r.add_term(e, R(0) - c);
		return r;
	}

	friend SparsePoly operator-(const SparsePoly &a) { return zero(a.nvars_) - a; }

	friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b)
	{
		auto [x, y] = aligned(a, b);
		SparsePoly r = zero(x.nvars_);
		Exponents e(x.nvars_);
		for (const auto &[ea, ca] : x.terms_)
			for (const auto &[eb, cb] : y.terms_) {
				for (int i = 0; i < x.nvars_; ++i)
					e[i] = ea[i] + eb[i];
				r.add_term(e, ca * cb);
			}
		return r;
	}

	friend SparsePoly operator*(const R &s, const SparsePoly &p)
	{
		SparsePoly r = zero(p.nvars_);
		for (const auto &[e, c] : p.terms_)
			r.add_term(e, s * c);
		return r;
	}

	SparsePoly &operator+=(const SparsePoly &o) { return *this = *this + o; }
	SparsePoly &operator-=(const SparsePoly &o) { return *this = *this - o; }
	SparsePoly &operator*=(const SparsePoly &o) { return *this = *this * o; }

	friend bool operator==(const SparsePoly &a, const SparsePoly &b)
	{
		if (a.nvars_ == b.nvars_)
			return a.terms_ == b.terms_;
		auto [x, y] = aligned(a, b);
		return x.terms_ == y.terms_;
	}

	SparsePoly partial_derivative(int index) const
	{
		if (index < 0 || index >= nvars_)
			throw std::invalid_argument("partial_derivative: unknown variable");
		SparsePoly r = zero(nvars_);
		for (const auto &[e, c] : terms_) {
			if (e[index] == 0)
				continue;
			Exponents f = e;
			f[index] -= 1;
			r.add_term(f, R(e[index]) * c);
		}
		return r;
	}

	int total_degree() const
	{
		int d = 0;
		for (const auto &[e, c] : terms_) {
			int t = 0;
			for (int x : e)
				t += x;
			d = std::max(d, t);
		}
		return d;
	}

	std::string to_string(const std::function<std::string(int)> &var_name) const
	{
		if (terms_.empty())
			return "0";
		std::string out;
		for (const auto &[e, c] : terms_) {
			if (!out.empty())
				out += " + ";
			std::string mono;
			for (int i = 0; i < nvars_; ++i) {
				if (e[i] == 0)
					continue;
				if (!mono.empty())
					mono += "*";
				mono += var_name(i);
				if (e[i] > 1)
					mono += "^" + std::to_string(e[i]);
			}
			std::string cs = coeff_string(c);
			if (mono.empty())
				out += cs;
			else if (cs == "1")
				out += mono;
			else
				out += "(" + cs + ")*" + mono;
		}
		return out;
	}

  private:
	static std::string coeff_string(const R &c)
	{
		using qbf::to_string;
		return to_string(c);
	}

	SparsePoly(int nvars, std::map<Exponents, R> terms)
	    : nvars_(nvars), terms_(std::move(terms))
	{
	}

	/// Scalars (no variables of their own) broadcast; genuinely different
	/// universes are a caller bug.
	static std::pair<SparsePoly, SparsePoly> aligned(const SparsePoly &a, const SparsePoly &b)
	{
		if (a.nvars_ == b.nvars_)
			return {a, b};
		if (a.nvars_ == 0)
			return {a.lifted(b.nvars_), b};
		if (b.nvars_ == 0)
			return {a, b.lifted(a.nvars_)};
		throw std::invalid_argument("sparse polynomials over different variable universes");
	}

	SparsePoly lifted(int nvars) const
	{
		SparsePoly r = zero(nvars);
		for (const auto &[e, c] : terms_)
			r.terms_.emplace(Exponents(nvars, 0), c);
		return r;
	}

	void add_term(const Exponents &e, const R &c)
	{
		if (detail::is_zero_of(c))
			return;
		auto it = terms_.find(e);
		if (it == terms_.end()) {
			terms_.emplace(e, c);
			return;
		}
		it->second = it->second + c;
		if (detail::is_zero_of(it->second))
			terms_.erase(it);
	}

	int nvars_;
	std::map<Exponents, R> terms_;
};

/// Commutative polynomials in the classical fields psi_1..psi_n,
/// psi*_1..psi*_n (variables 0..n-1 and n..2n-1 respectively).
using MultiPoly = SparsePoly<BigRat>;

template <typename R> SparsePoly<R> zero_like(const SparsePoly<R> &p)
{
	return SparsePoly<R>::zero(p.nvars());
}
template <typename R> SparsePoly<R> one_like(const SparsePoly<R> &p)
{
	return SparsePoly<R>::constant(p.nvars(), R(1));
}
template <typename R> bool is_zero(const SparsePoly<R> &p) { return p.is_zero(); }

} // namespace qbf
