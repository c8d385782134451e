#pragma once

#include "qbf/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbf {

/// Integer partition: weakly decreasing positive parts, empty = 0.
/// The Fock-space dictionary "one particle at site j <-> one column of
/// height j" lives here and nowhere else.
class Partition {
  public:
	Partition() = default;
	Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
	explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
	{
		while (!parts_.empty() && parts_.back() == 0)
			parts_.pop_back();
		for (size_t i = 0; i < parts_.size(); ++i) {
			if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
				throw std::invalid_argument("not weakly decreasing positive parts");
		}
	}

	const std::vector<int> &parts() const { return parts_; }
	int length() const { return static_cast<int>(parts_.size()); }
	bool empty() const { return parts_.empty(); }

	/// 1-based part access, zero beyond the length.
	int part(int i) const
	{
		assert(i >= 1);
		return i <= length() ? parts_[i - 1] : 0;
	}

	int first_part() const { return part(1); }

	int size() const
	{
		int s = 0;
		for (int p : parts_)
			s += p;
		return s;
	}

	/// Number of columns of height exactly j in the Young diagram.
	int multiplicity(int j) const
	{
		assert(j >= 1);
		return part(j) - part(j + 1);
	}

	Partition conjugate() const
	{
		std::vector<int> c;
		for (int j = 1; j <= first_part(); ++j) {
			int h = 0;
			while (h < length() && parts_[h] >= j)
				++h;
			c.push_back(h);
		}
		return Partition(std::move(c));
	}

	/// Inserts one column of height j (every row up to j gains a box).
	Partition with_column_added(int j) const
	{
		assert(j >= 1);
		std::vector<int> p = parts_;
		if (static_cast<int>(p.size()) < j)
			p.resize(j, 0);
		for (int i = 0; i < j; ++i)
			p[i] += 1;
		return Partition(std::move(p));
	}

	/// Deletes one column of height j; requires multiplicity(j) > 0.
	Partition with_column_removed(int j) const
	{
		if (multiplicity(j) <= 0)
			throw std::invalid_argument("no column of height " + std::to_string(j) +
			                            " to remove");
		std::vector<int> p = parts_;
		for (int i = 0; i < j; ++i)
			p[i] -= 1;
		return Partition(std::move(p));
	}

	friend bool operator==(const Partition &a, const Partition &b) = default;
	friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
	{
		return a.parts_ <=> b.parts_; // lexicographic
	}

	/// a dominates b (same size assumed by callers where it matters).
	static bool dominates(const Partition &a, const Partition &b)
	{
		int pa = 0, pb = 0;
		int len = std::max(a.length(), b.length());
		for (int i = 1; i <= len; ++i) {
			pa += a.part(i);
			pb += b.part(i);
			if (pa < pb)
				return false;
		}
		return true;
	}

	std::string to_string() const
	{
		std::string s = "(";
		for (size_t i = 0; i < parts_.size(); ++i) {
			if (i)
				s += ",";
			s += std::to_string(parts_[i]);
		}
		return s + ")";
	}

  private:
	std::vector<int> parts_;
};

/// n-tuple of nonnegative integers.
struct Composition {
	std::vector<int> entries;
	int sum() const
	{
		int s = 0;
		for (int e : entries)
			s += e;
		return s;
	}
};

inline int64_t binomial(int n, int k)
{
	if (k < 0 || k > n)
		return 0;
	int64_t r = 1;
	for (int i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

/// Dimension of the k-particle sector on n sites: C(n+k-1, k).
inline int64_t fock_dim(int n, int k)
{
	if (k < 0)
		return 0;
	return binomial(n + k - 1, k);
}

namespace detail {
inline void partitions_below(int maxpart, int maxlen, std::vector<int> &stack,
                             std::vector<Partition> &out)
{
	out.emplace_back(std::vector<int>(stack));
	if (maxlen == 0)
		return;
	for (int p = std::min(maxpart, stack.empty() ? maxpart : stack.back()); p >= 1; --p) {
		stack.push_back(p);
		partitions_below(maxpart, maxlen - 1, stack, out);
		stack.pop_back();
	}
}
} // namespace detail

/// All partitions with at most `maxlen` parts, each part at most `maxpart`.
inline std::vector<Partition> partitions_in_box(int maxpart, int maxlen)
{
	std::vector<Partition> out;
	std::vector<int> stack;
	detail::partitions_below(maxpart, std::max(maxlen, 0), stack, out);
	return out;
}

/// Canonical basis of the k-particle sector: partitions with at most n
/// parts and first part exactly k, graded by size, lexicographically
/// descending within a grade. This order is fixed forever; matrix indices
/// and serialized output depend on it.
inline std::vector<Partition> fock_basis(int n, int k)
{
	assert(n >= 1 && k >= 0);
	if (k == 0)
		return {Partition()};
	std::vector<Partition> out;
	for (const Partition &tail : partitions_in_box(k, n - 1)) {
		std::vector<int> p;
		p.push_back(k);
		for (int x : tail.parts())
			p.push_back(x);
		out.emplace_back(std::move(p));
	}
	std::sort(out.begin(), out.end(), [](const Partition &a, const Partition &b) {
		if (a.size() != b.size())
			return a.size() < b.size();
		return b < a;
	});
	assert(static_cast<int64_t>(out.size()) == fock_dim(n, k));
	return out;
}

inline int fock_index(const std::vector<Partition> &basis, const Partition &p)
{
	auto it = std::find(basis.begin(), basis.end(), p);
	if (it == basis.end())
		throw std::invalid_argument("partition not in basis: " + p.to_string());
	return static_cast<int>(it - basis.begin());
}

/// All n-tuples of nonnegative integers summing to r, lexicographically
/// descending (so (r,0,..,0) first).
inline std::vector<Composition> compositions(int r, int n)
{
	assert(r >= 0 && n >= 1);
	std::vector<Composition> out;
	std::vector<int> cur(n, 0);
	auto rec = [&](auto &&self, int pos, int rem) -> void {
		if (pos == n - 1) {
			cur[pos] = rem;
			out.push_back(Composition{cur});
			return;
		}
		for (int v = rem; v >= 0; --v) {
			cur[pos] = v;
			self(self, pos + 1, rem - v);
		}
	};
	rec(rec, 0, r);
	return out;
}

/// (q^2)_m = prod_{j=1..m} (1 - q^{2j}).
inline PolyQ pochhammer_q2(int m)
{
	assert(m >= 0);
	PolyQ r(1);
	for (int j = 1; j <= m; ++j)
		r *= PolyQ(1) - q_power(2 * j);
	return r;
}

/// Gaussian binomial [m r]_{q^2}; an exact polynomial, zero unless 0<=r<=m.
inline PolyQ gaussian_binomial(int m, int r)
{
	if (r < 0 || r > m)
		return PolyQ();
	// product form avoids rational-function intermediates:
	// [m r] = prod_{j=1..r} (1-q^{2(m-r+j)})/(1-q^{2j})
	PolyQ num(1), den(1);
	for (int j = 1; j <= r; ++j) {
		num *= PolyQ(1) - q_power(2 * (m - r + j));
		den *= PolyQ(1) - q_power(2 * j);
	}
	auto [quot, rem] = divmod(num, den);
	assert(rem.is_zero());
	return quot;
}

/// b_lambda = prod_j (q^2)_{m_j(lambda)}.
inline PolyQ b_factor(const Partition &lambda)
{
	PolyQ r(1);
	for (int j = 1; j <= lambda.length(); ++j)
		r *= pochhammer_q2(lambda.multiplicity(j));
	return r;
}

struct ReducedPartition {
	Partition reduced;    // all height-n columns stripped
	int height_n_columns; // how many were stripped
	Partition complement; // reflection in the (n-1) x k box
};

/// Strips the height-n columns and forms the box complement
/// (k - reduced_{n-1}, ..., k - reduced_1).
inline ReducedPartition reduce_and_complement(const Partition &lambda, int n, int k)
{
	assert(lambda.length() <= n && lambda.first_part() <= k);
	int m = lambda.part(n);
	std::vector<int> red;
	for (int i = 1; i <= n; ++i)
		if (lambda.part(i) - m > 0)
			red.push_back(lambda.part(i) - m);
	Partition reduced(std::move(red));
	std::vector<int> comp;
	for (int i = n - 1; i >= 1; --i)
		comp.push_back(k - reduced.part(i));
	Partition complement{std::vector<int>(comp)};
	return {std::move(reduced), m, std::move(complement)};
}

/// Inverse of the reduction on the k-particle sector: pad with height-n
/// columns until the first part is k.
inline Partition unreduce(const Partition &reduced, int n, int k)
{
	assert(reduced.length() <= n - 1 && reduced.first_part() <= k);
	int m = k - reduced.first_part();
	std::vector<int> p;
	for (int i = 1; i <= n; ++i)
		p.push_back(reduced.part(i) + m);
	return Partition(std::move(p));
}

} // namespace qbf
