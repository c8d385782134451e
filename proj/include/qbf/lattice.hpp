#pragma once

#include "qbf/fock.hpp"
#include "qbf/report.hpp"
#include "qbf/series.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace qbf {

/// Entries of the 2x2 monodromy matrix L_n(u)...L_1(u) with
/// L_j = [[1, u beta*_j], [beta_j, u]], expanded in powers of u. A and D
/// preserve the particle number, B creates one particle, C annihilates one.
struct Monodromy {
	int sites = 1;
	int source = 0;
	std::vector<GradedOperator> A, B, C, D; // u-ascending

	/// T(u) = A(u) + z D(u), coefficient of u^r.
	GradedOperator transfer_coeff(int r) const
	{
		GradedOperator t(sites, source, 0);
		if (r >= 0 && r < static_cast<int>(A.size()))
			t = t + A[r];
		if (r >= 0 && r < static_cast<int>(D.size()))
			t = t + z_power(1) * D[r];
		return t;
	}
};

namespace detail_lattice {

using UPolyOp = std::vector<GradedOperator>; // u-ascending operator coefficients

inline UPolyOp upoly_add(const UPolyOp &a, const UPolyOp &b)
{
	UPolyOp r = a;
	if (b.size() > r.size())
		r.resize(b.size(), GradedOperator(b.front().sites, b.front().source,
		                                  b.front().degree));
	for (size_t i = 0; i < b.size(); ++i)
		r[i] = r[i] + b[i];
	return r;
}

} // namespace detail_lattice

/// Exact expansion of the product L_n(u)...L_1(u) on the k-particle sector.
inline Monodromy build_monodromy(int n, int k)
{
	using detail_lattice::UPolyOp;
	using detail_lattice::upoly_add;

	auto zero_op = [&](int source, int degree) { return GradedOperator(n, source, degree); };

	// entries of the running product, all viewed from source sector k
	UPolyOp A{GradedOperator::identity(n, k)};
	UPolyOp B{zero_op(k, 1), generator_block(n, k, Generator::create(1))};
	UPolyOp C{generator_block(n, k, Generator::annihilate(1))};
	UPolyOp D{zero_op(k, 0), GradedOperator::identity(n, k)};

	for (int j = 2; j <= n; ++j) {
		// left-multiply by L_j: rows of L_j hit the columns (A C | B D)
		auto create_row = [&](const UPolyOp &low) {
			// u beta*_j applied after `low` (low has degree d: acts into k+d)
			UPolyOp r{zero_op(k, low.front().degree + 1)};
			GradedOperator up = generator_block(n, k + low.front().degree,
			                                    Generator::create(j));
			for (const GradedOperator &op : low)
				r.push_back(up * op);
			return r;
		};
		auto annihilate_row = [&](const UPolyOp &top) {
			UPolyOp r;
			GradedOperator down = generator_block(n, k + top.front().degree,
			                                      Generator::annihilate(j));
			for (const GradedOperator &op : top)
				r.push_back(down * op);
			return r;
		};
		auto shift_u = [&](const UPolyOp &x) {
			UPolyOp r{zero_op(k, x.front().degree)};
			for (const GradedOperator &op : x)
				r.push_back(op);
			return r;
		};

		UPolyOp A2 = upoly_add(A, create_row(C));
		UPolyOp B2 = upoly_add(B, create_row(D));
		UPolyOp C2 = upoly_add(annihilate_row(A), shift_u(C));
		UPolyOp D2 = upoly_add(annihilate_row(B), shift_u(D));
		A = std::move(A2);
		B = std::move(B2);
		C = std::move(C2);
		D = std::move(D2);
	}

	Monodromy m;
	m.sites = n;
	m.source = k;
	m.A = std::move(A);
	m.B = std::move(B);
	m.C = std::move(C);
	m.D = std::move(D);
	return m;
}

enum class TrMethod { Trace, Commutator };

namespace detail_lattice {

// hopping words a_i = beta_i beta*_{i+1} (i < n), a_n = z beta_n beta*_1
inline GradedOperator hopping_block(int n, int k, int i)
{
	OperatorWord w({{Generator::annihilate(i), 1}, {Generator::create(i + 1), 1}},
	               i == n ? z_power(1) : PolyZ(RatFuncQ(1)));
	return matrix_of({w}, n, k);
}

// [X, Y]_{q^2} = XY - q^2 YX
inline GradedOperator q2_commutator(const GradedOperator &x, const GradedOperator &y)
{
	return x * y - RatFuncQ::q_pow(2) * (y * x);
}

/// Canonical word for an r-subset of Z_n: starting just below the smallest
/// missing site, read the subset downwards cyclically. This is the
/// enumeration convention under which the nested q^2-commutators reproduce
/// the trace route; fixed empirically and pinned by the oracle-equivalence
/// tests.
inline std::vector<int> canonical_word(const std::vector<int> &subset, int n)
{
	std::vector<bool> in(n + 1, false);
	for (int s : subset)
		in[s] = true;
	int gap = 0;
	for (int g = 1; g <= n; ++g)
		if (!in[g]) {
			gap = g;
			break;
		}
	std::vector<int> word;
	for (int step = 1; step <= n; ++step) {
		int site = cyclic_site(gap - step, n);
		if (in[site])
			word.push_back(site);
	}
	return word;
}

} // namespace detail_lattice

/// Quantum integral of motion T_r by either route. The monodromy trace is
/// the authoritative definition; the nested-commutator form covers
/// 1 <= r <= n-1 with T_0 = 1 and T_n = z set directly.
inline GradedOperator build_Tr(int n, int k, int r, TrMethod method)
{
	if (r < 0 || r > n)
		throw std::invalid_argument("build_Tr: r out of range 0..n");
	if (method == TrMethod::Trace)
		return build_monodromy(n, k).transfer_coeff(r);

	if (r == 0)
		return GradedOperator::identity(n, k);
	if (r == n)
		return z_power(1) * GradedOperator::identity(n, k);

	using detail_lattice::canonical_word;
	using detail_lattice::hopping_block;
	using detail_lattice::q2_commutator;

	GradedOperator total(n, k, 0);
	std::vector<int> subset;
	auto rec = [&](auto &&self, int next) -> void {
		if (static_cast<int>(subset.size()) == r) {
			std::vector<int> word = canonical_word(subset, n);
			GradedOperator acc = hopping_block(n, k, word.back());
			for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
				acc = q2_commutator(hopping_block(n, k, word[i]), acc);
			total = total + acc;
			return;
		}
		for (int s = next; s <= n; ++s) {
			subset.push_back(s);
			self(self, s + 1);
			subset.pop_back();
		}
	};
	rec(rec, 1);

	// divide by (1-q^2)^{r-1}
	RatFuncQ scale = RatFuncQ(1) / RatFuncQ((PolyQ(1) - q_power(2)).pow(r - 1));
	return scale * total;
}

enum class QrMethod { Composition, Transfer };
enum class WeightModel { T, Qplus, Qminus };

/// Boltzmann weight of one vertex, labels as in the figure captions:
/// a = exponent of beta*_j (carries the power of u), c = exponent of
/// beta_j, b/d = site occupation in/out. Zero unless a+b = c+d and the
/// model's support condition holds.
struct VertexWeight {
	int u_power = 0;
	PolyQ coeff; // zero when the configuration is forbidden
};

inline VertexWeight boltzmann_weight(WeightModel model, int a, int b, int c, int d)
{
	VertexWeight w;
	w.u_power = a;
	if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d)
		return w;
	switch (model) {
	case WeightModel::T:
		// horizontal edges 0/1: weights 1, 1, u(1-q^{2m+2}), u
		if (a > 1 || c > 1)
			return w;
		if (a == 1 && d == b + 1)
			w.coeff = PolyQ(1) - q_power(2 * b + 2);
		else
			w.coeff = PolyQ(1);
		return w;
	case WeightModel::Qplus:
		// <c,d|L^+(u)|a,b> = (-u)^a [d a]_{q^2}, support b >= c
		if (b < c)
			return w;
		w.coeff = (a % 2 == 0 ? BigRat(1) : BigRat(-1)) * gaussian_binomial(d, a);
		return w;
	case WeightModel::Qminus:
		// <c,d|L^-(u)|a,b> = u^a q^{a(a+1)} [a+b b]_{q^2}, support a+b >= c
		w.coeff = q_power(a * (a + 1)) * gaussian_binomial(a + b, b);
		return w;
	}
	return w;
}

/// Q_r^{+-} on the k-particle sector, by operator words summed over
/// compositions (the Lemma's explicit expansion) or as the row-to-row
/// transfer matrix of the corresponding vertex model. Both routes produce
/// identical matrices; the tests enforce it.
inline GradedOperator build_Qr(int flavor, int n, int k, int r, QrMethod method)
{
	if (flavor != +1 && flavor != -1)
		throw std::invalid_argument("build_Qr: flavor must be +1 or -1");
	if (r < 0)
		throw std::invalid_argument("build_Qr: negative order");

	if (method == QrMethod::Composition) {
		GradedOperator total(n, k, 0);
		for (const Composition &alpha : compositions(r, n)) {
			const std::vector<int> &a = alpha.entries;
			std::vector<std::pair<Generator, int>> f;
			if (flavor > 0) {
				// beta*_1^{a_n} (beta_1 beta*_2)^{a_1} ... beta_n^{a_n}
				if (a[n - 1] > 0)
					f.push_back({Generator::create(1), a[n - 1]});
				for (int i = 1; i <= n - 1; ++i)
					if (a[i - 1] > 0) {
						f.push_back({Generator::annihilate(i), a[i - 1]});
						f.push_back({Generator::create(i + 1), a[i - 1]});
					}
				if (a[n - 1] > 0)
					f.push_back({Generator::annihilate(n), a[n - 1]});
			} else {
				// beta_n^{a_n} (beta_{n-1} beta*_n)^{a_{n-1}} ... beta*_1^{a_n}
				if (a[n - 1] > 0)
					f.push_back({Generator::annihilate(n), a[n - 1]});
				for (int i = n - 1; i >= 1; --i)
					if (a[i - 1] > 0) {
						f.push_back({Generator::annihilate(i), a[i - 1]});
						f.push_back({Generator::create(i + 1), a[i - 1]});
					}
				if (a[n - 1] > 0)
					f.push_back({Generator::create(1), a[n - 1]});
			}
			RatFuncQ scale(1);
			for (int i = 0; i < n; ++i)
				scale /= RatFuncQ(pochhammer_q2(a[i]));
			if (flavor > 0 && r % 2 == 1)
				scale = -scale;
			if (flavor < 0)
				for (int i = 0; i < n; ++i)
					scale *= RatFuncQ::q_pow(a[i] * (a[i] + 1));
			total = total + matrix_of({OperatorWord(std::move(f),
			                                        scale * z_power(a[n - 1]))},
			                          n, k);
		}
		return total;
	}

	// Transfer route: sum over closed auxiliary chains e_0..e_n (e_n = e_0)
	// with vertex j carrying a_j = e_{j-1}, c_j = e_j; total u-power
	// sum_j a_j = r, seam weight z^{e_0}.
	WeightModel model = flavor > 0 ? WeightModel::Qplus : WeightModel::Qminus;
	std::vector<Partition> basis = fock_basis(n, k);
	GradedOperator total(n, k, 0);
	for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
		std::vector<int> occ_in(n), occ_out(n);
		for (int j = 1; j <= n; ++j)
			occ_in[j - 1] = basis[col].multiplicity(j);
		for (int row = 0; row < static_cast<int>(basis.size()); ++row) {
			for (int j = 1; j <= n; ++j)
				occ_out[j - 1] = basis[row].multiplicity(j);
			PolyZ entry;
			for (const Composition &chain : compositions(r, n)) {
				const std::vector<int> &e = chain.entries; // e_0..e_{n-1}
				PolyQ w(1);
				for (int j = 1; j <= n && !w.is_zero(); ++j) {
					VertexWeight vw = boltzmann_weight(
					    model, e[j - 1], occ_in[j - 1], e[j % n], occ_out[j - 1]);
					w *= vw.coeff;
				}
				if (!w.is_zero())
					entry += RatFuncQ(w) * z_power(e[0]);
			}
			total.mat(row, col) = entry;
		}
	}
	return total;
}

} // namespace qbf
