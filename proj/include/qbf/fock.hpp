#pragma once

#include "qbf/matrix.hpp"
#include "qbf/partition.hpp"
#include "qbf/ratfunc.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbf {

enum class GenKind {
	Annihilate, // beta_j
	Create,     // beta*_j
	QNum,       // q^{+N_j}
	QNumInv,    // q^{-N_j}
	Number      // N_j
};

/// One q-boson generator attached to a site. Sites are cyclic: 0 means n,
/// n+1 means 1.
struct Generator {
	GenKind kind;
	int site; // any integer; reduced mod n on use

	static Generator annihilate(int j) { return {GenKind::Annihilate, j}; }
	static Generator create(int j) { return {GenKind::Create, j}; }
	static Generator q_num(int j) { return {GenKind::QNum, j}; }
	static Generator q_num_inv(int j) { return {GenKind::QNumInv, j}; }
	static Generator number(int j) { return {GenKind::Number, j}; }
};

inline int cyclic_site(int j, int n)
{
	int r = j % n;
	if (r <= 0)
		r += n;
	return r;
}

/// Product of generator powers with a scalar in front; the rightmost factor
/// acts first.
struct OperatorWord {
	std::vector<std::pair<Generator, int>> factors;
	PolyZ scalar = PolyZ(RatFuncQ(1));

	OperatorWord() = default;
	explicit OperatorWord(std::vector<std::pair<Generator, int>> f,
	                      PolyZ s = PolyZ(RatFuncQ(1)))
	    : factors(std::move(f)), scalar(std::move(s))
	{
		for (const auto &[g, p] : factors)
			if (p < 1)
				throw std::invalid_argument("operator word with power < 1");
	}

	/// Net particle-number change.
	int degree() const
	{
		int d = 0;
		for (const auto &[g, p] : factors) {
			if (g.kind == GenKind::Create)
				d += p;
			else if (g.kind == GenKind::Annihilate)
				d -= p;
		}
		return d;
	}
};

/// Finite linear combination of canonical basis vectors with PolyZ
/// coefficients; no explicit zeros stored.
class FockVector {
  public:
	FockVector() = default;
	static FockVector basis_vector(const Partition &p)
	{
		FockVector v;
		v.c_.emplace(p, PolyZ(RatFuncQ(1)));
		return v;
	}

	const std::map<Partition, PolyZ> &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }

	PolyZ coeff(const Partition &p) const
	{
		auto it = c_.find(p);
		return it == c_.end() ? PolyZ() : it->second;
	}

	void add(const Partition &p, const PolyZ &c)
	{
		if (c.is_zero())
			return;
		auto it = c_.find(p);
		if (it == c_.end()) {
			c_.emplace(p, c);
			return;
		}
		it->second += c;
		if (it->second.is_zero())
			c_.erase(it);
	}

	friend FockVector operator+(const FockVector &a, const FockVector &b)
	{
		FockVector r = a;
		for (const auto &[p, c] : b.c_)
			r.add(p, c);
		return r;
	}

	friend FockVector operator*(const PolyZ &s, const FockVector &v)
	{
		FockVector r;
		for (const auto &[p, c] : v.c_)
			r.add(p, s * c);
		return r;
	}

	friend bool operator==(const FockVector &a, const FockVector &b) = default;

  private:
	std::map<Partition, PolyZ> c_;
};

/// Action of a single generator on the canonical basis, extended linearly.
/// beta removes a column (coefficient 1, zero vector when the site is
/// empty), beta* adds one with coefficient 1-q^{2m+2}, q^{+-N} and N are
/// diagonal.
inline FockVector apply_generator(int n, const Generator &g, const FockVector &x)
{
	int j = cyclic_site(g.site, n);
	FockVector out;
	for (const auto &[p, c] : x.coeffs()) {
		int m = p.multiplicity(j);
		switch (g.kind) {
		case GenKind::Annihilate:
			if (m > 0)
				out.add(p.with_column_removed(j), c);
			break;
		case GenKind::Create:
			// j <= n after cyclic reduction, so the new column fits in n rows
			out.add(p.with_column_added(j),
			        (RatFuncQ(1) - RatFuncQ::q_pow(2 * m + 2)) * c);
			break;
		case GenKind::QNum:
			out.add(p, mul_q_power(c, m));
			break;
		case GenKind::QNumInv:
			out.add(p, mul_q_power(c, -m));
			break;
		case GenKind::Number:
			out.add(p, RatFuncQ(m) * c);
			break;
		}
	}
	return out;
}

/// Rightmost factor first; the scalar multiplies at the end.
inline FockVector apply_word(int n, const OperatorWord &w, const FockVector &x)
{
	FockVector v = x;
	for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
		const auto &[g, p] = *it;
		for (int i = 0; i < p && !v.is_zero(); ++i)
			v = apply_generator(n, g, v);
	}
	return w.scalar * v;
}

/// Dual-basis pairing <lambda| x>.
inline PolyZ pairing(const Partition &lambda, const FockVector &x)
{
	return x.coeff(lambda);
}

/// The inner-product map <lambda| |mu> = delta b_lambda(q^2).
inline RatFuncQ bra_form(const Partition &lambda, const Partition &mu)
{
	if (lambda != mu)
		return RatFuncQ();
	return RatFuncQ(b_factor(lambda));
}

/// Exact matrix of a fixed-degree operator between particle-number sectors:
/// columns indexed by fock_basis(n, k), rows by fock_basis(n, k + degree).
struct GradedOperator {
	int sites = 1;  // n
	int source = 0; // k
	int degree = 0; // d
	Matrix<PolyZ> mat;

	GradedOperator() = default;
	GradedOperator(int n, int k, int d)
	    : sites(n), source(k), degree(d),
	      mat(static_cast<int>(fock_dim(n, k + d)), static_cast<int>(fock_dim(n, k)))
	{
	}

	static GradedOperator identity(int n, int k)
	{
		GradedOperator op(n, k, 0);
		op.mat = Matrix<PolyZ>::identity(static_cast<int>(fock_dim(n, k)));
		return op;
	}

	int target() const { return source + degree; }

	bool is_zero() const { return mat.is_zero(); }

	friend GradedOperator operator+(const GradedOperator &a, const GradedOperator &b)
	{
		a.check_same_block(b);
		GradedOperator r = a;
		r.mat += b.mat;
		return r;
	}
	friend GradedOperator operator-(const GradedOperator &a, const GradedOperator &b)
	{
		a.check_same_block(b);
		GradedOperator r = a;
		r.mat -= b.mat;
		return r;
	}
	/// Composition a∘b: b acts first.
	friend GradedOperator operator*(const GradedOperator &a, const GradedOperator &b)
	{
		if (a.sites != b.sites || a.source != b.target())
			throw std::invalid_argument("graded operator composition mismatch");
		GradedOperator r(a.sites, b.source, a.degree + b.degree);
		r.mat = a.mat * b.mat;
		return r;
	}
	friend GradedOperator operator*(const PolyZ &s, const GradedOperator &a)
	{
		GradedOperator r = a;
		r.mat = s * r.mat;
		return r;
	}
	friend GradedOperator operator*(const RatFuncQ &s, const GradedOperator &a)
	{
		return PolyZ(s) * a;
	}
	friend GradedOperator operator-(const GradedOperator &a)
	{
		GradedOperator r = a;
		r.mat = -r.mat;
		return r;
	}

	friend bool operator==(const GradedOperator &a, const GradedOperator &b)
	{
		return a.sites == b.sites && a.source == b.source && a.degree == b.degree &&
		       a.mat == b.mat;
	}

	void check_same_block(const GradedOperator &o) const
	{
		if (sites != o.sites || source != o.source || degree != o.degree)
			throw std::invalid_argument("graded operator block mismatch");
	}
};

inline GradedOperator zero_like(const GradedOperator &a)
{
	return GradedOperator(a.sites, a.source, a.degree);
}
inline GradedOperator one_like(const GradedOperator &a)
{
	if (a.degree != 0)
		throw std::invalid_argument("identity of a degree-shifting operator");
	return GradedOperator::identity(a.sites, a.source);
}
inline bool is_zero(const GradedOperator &a) { return a.is_zero(); }
inline GradedOperator mul_q_power(const GradedOperator &a, int e)
{
	GradedOperator r = a;
	r.mat = mul_q_power(r.mat, e);
	return r;
}

/// Matrix of a sum of equal-degree words on the k-particle sector.
inline GradedOperator matrix_of(const std::vector<OperatorWord> &words, int n, int k)
{
	if (words.empty())
		throw std::invalid_argument("matrix_of: empty word list");
	int d = words.front().degree();
	for (const auto &w : words)
		if (w.degree() != d)
			throw std::invalid_argument("matrix_of: mixed word degrees");
	if (k < 0 || k + d < 0)
		return GradedOperator(n, k, d); // zero map through an empty sector
	GradedOperator op(n, k, d);
	std::vector<Partition> src = fock_basis(n, k);
	std::vector<Partition> dst = fock_basis(n, k + d);
	for (int col = 0; col < static_cast<int>(src.size()); ++col) {
		FockVector acc;
		for (const auto &w : words)
			acc = acc + apply_word(n, w, FockVector::basis_vector(src[col]));
		for (const auto &[p, c] : acc.coeffs())
			op.mat(fock_index(dst, p), col) += c;
	}
	return op;
}

inline GradedOperator generator_block(int n, int k, const Generator &g)
{
	return matrix_of({OperatorWord({{g, 1}})}, n, k);
}

} // namespace qbf
