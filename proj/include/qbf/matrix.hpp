#pragma once

#include "qbf/rational.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qbf {

/// Dense matrix over a commutative ring. Zero-by-n shapes are legal; they
/// show up as blocks into the empty particle sector.
template <typename R> class Matrix {
  public:
	Matrix() : rows_(0), cols_(0) {}
	Matrix(int rows, int cols, R fill = R(0))
	    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill)
	{
		assert(rows >= 0 && cols >= 0);
	}

	static Matrix identity(int n)
	{
		Matrix m(n, n);
		for (int i = 0; i < n; ++i)
			m(i, i) = R(1);
		return m;
	}

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	R &operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
	const R &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

	friend Matrix operator+(const Matrix &a, const Matrix &b)
	{
		a.check_shape(b);
		Matrix r = a;
		for (size_t i = 0; i < r.a_.size(); ++i)
			r.a_[i] = r.a_[i] + b.a_[i];
		return r;
	}

	friend Matrix operator-(const Matrix &a, const Matrix &b)
	{
		a.check_shape(b);
		Matrix r = a;
		for (size_t i = 0; i < r.a_.size(); ++i)
			r.a_[i] = r.a_[i] - b.a_[i];
		return r;
	}

	friend Matrix operator-(const Matrix &a)
	{
		Matrix r = a;
		for (auto &x : r.a_)
			x = R(0) - x;
		return r;
	}

	friend Matrix operator*(const Matrix &a, const Matrix &b)
	{
		if (a.cols_ != b.rows_)
			throw std::invalid_argument("matrix product shape mismatch");
		Matrix r(a.rows_, b.cols_);
		for (int i = 0; i < a.rows_; ++i)
			for (int k = 0; k < a.cols_; ++k) {
				const R &aik = a(i, k);
				if (detail::is_zero_of(aik))
					continue;
				for (int j = 0; j < b.cols_; ++j)
					r(i, j) = r(i, j) + aik * b(k, j);
			}
		return r;
	}

	friend Matrix operator*(const R &s, const Matrix &m)
	{
		Matrix r = m;
		for (auto &x : r.a_)
			x = s * x;
		return r;
	}

	Matrix &operator+=(const Matrix &o) { return *this = *this + o; }
	Matrix &operator-=(const Matrix &o) { return *this = *this - o; }
	Matrix &operator*=(const Matrix &o) { return *this = *this * o; }

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
	}

	bool is_zero() const
	{
		for (const auto &x : a_)
			if (!detail::is_zero_of(x))
				return false;
		return true;
	}

	Matrix transposed() const
	{
		Matrix r(cols_, rows_);
		for (int i = 0; i < rows_; ++i)
			for (int j = 0; j < cols_; ++j)
				r(j, i) = (*this)(i, j);
		return r;
	}

	template <typename F> auto map(F f) const -> Matrix<decltype(f(R(0)))>
	{
		Matrix<decltype(f(R(0)))> r(rows_, cols_);
		for (int i = 0; i < rows_; ++i)
			for (int j = 0; j < cols_; ++j)
				r(i, j) = f((*this)(i, j));
		return r;
	}

	/// Exact determinant by division-free Laplace expansion, memoized over
	/// column subsets. Sizes in scope stay small (at most 8x8).
	R determinant() const
	{
		if (rows_ != cols_)
			throw std::invalid_argument("determinant of non-square matrix");
		int n = rows_;
		if (n == 0)
			return R(1);
		if (n > 16)
			throw std::invalid_argument("determinant: matrix too large");
		// memo[mask] = det of top-left |mask| rows restricted to columns in mask
		std::vector<std::optional<R>> memo(uint32_t(1) << n);
		memo[0] = R(1);
		return det_rec((uint32_t(1) << n) - 1, memo);
	}

  private:
	R det_rec(uint32_t mask, std::vector<std::optional<R>> &memo) const
	{
		if (memo[mask])
			return *memo[mask];
		int m = __builtin_popcount(mask); // expanding along row m-1
		R acc = R(0);
		int t = 0;
		for (uint32_t bits = mask; bits; bits &= bits - 1, ++t) {
			int j = __builtin_ctz(bits);
			const R &e = (*this)(m - 1, j);
			if (!detail::is_zero_of(e)) {
				R sub = det_rec(mask & ~(uint32_t(1) << j), memo);
				if (((m - 1 + t) & 1) == 0)
					acc = acc + e * sub;
				else
					acc = acc - e * sub;
			}
		}
		memo[mask] = acc;
		return acc;
	}

	void check_shape(const Matrix &o) const
	{
		if (rows_ != o.rows_ || cols_ != o.cols_)
			throw std::invalid_argument("matrix shape mismatch");
	}

	int rows_, cols_;
	std::vector<R> a_;
};

template <typename R> Matrix<R> zero_like(const Matrix<R> &m)
{
	return Matrix<R>(m.rows(), m.cols());
}
template <typename R> Matrix<R> one_like(const Matrix<R> &m)
{
	assert(m.rows() == m.cols());
	return Matrix<R>::identity(m.rows());
}
template <typename R> bool is_zero(const Matrix<R> &m) { return m.is_zero(); }

template <typename R> Matrix<R> mul_q_power(const Matrix<R> &m, int e)
{
	return m.map([e](const R &x) { return mul_q_power(x, e); });
}

/// Reduced row echelon form over a field; returns pivot column indices.
template <typename R> std::vector<int> rref_in_place(Matrix<R> &m)
{
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
		int p = -1;
		for (int i = row; i < m.rows(); ++i)
			if (!detail::is_zero_of(m(i, col))) {
				p = i;
				break;
			}
		if (p < 0)
			continue;
		if (p != row)
			for (int j = 0; j < m.cols(); ++j)
				std::swap(m(p, j), m(row, j));
		R inv = R(1) / m(row, col);
		for (int j = col; j < m.cols(); ++j)
			m(row, j) = inv * m(row, j);
		for (int i = 0; i < m.rows(); ++i) {
			if (i == row || detail::is_zero_of(m(i, col)))
				continue;
			R f = m(i, col);
			for (int j = col; j < m.cols(); ++j)
				m(i, j) = m(i, j) - f * m(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

/// Solves a x = b over a field. Empty optional when inconsistent; throws
/// when the solution is not unique.
template <typename R>
std::optional<std::vector<R>> solve_unique(const Matrix<R> &a, const std::vector<R> &b)
{
	assert(static_cast<int>(b.size()) == a.rows());
	Matrix<R> aug(a.rows(), a.cols() + 1);
	for (int i = 0; i < a.rows(); ++i) {
		for (int j = 0; j < a.cols(); ++j)
			aug(i, j) = a(i, j);
		aug(i, a.cols()) = b[i];
	}
	std::vector<int> pivots = rref_in_place(aug);
	for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
		if (!detail::is_zero_of(aug(i, a.cols())))
			return std::nullopt;
	if (!pivots.empty() && pivots.back() == a.cols())
		return std::nullopt; // pivot in the augmented column
	if (static_cast<int>(pivots.size()) != a.cols())
		throw std::invalid_argument("solve_unique: underdetermined system");
	std::vector<R> x(a.cols(), R(0));
	for (size_t i = 0; i < pivots.size(); ++i)
		x[pivots[i]] = aug(static_cast<int>(i), a.cols());
	return x;
}

} // namespace qbf
