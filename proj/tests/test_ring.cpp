#include "qbf/matrix.hpp"
#include "qbf/partition.hpp"
#include "qbf/ratfunc.hpp"
#include "qbf/series.hpp"
#include "qbf/sparse_poly.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qbf;
using testutil::random_multipoly;
using testutil::random_polyz;
using testutil::random_ratfunc;

TEST(Rational, CanonicalForm)
{
	BigRat r = ratio(4, -6);
	EXPECT_EQ(r.get_num(), -2);
	EXPECT_EQ(r.get_den(), 3);
	EXPECT_EQ(parse_rat("-2/3"), r);
	EXPECT_THROW(ratio(1, 0), std::domain_error);
	EXPECT_THROW(rat_div(BigRat(1), BigRat(0)), std::domain_error);
}

TEST(RatFunc, ArithExamples)
{
	// (1-q^4)/(1-q^2) * 1 = 1+q^2
	RatFuncQ a(PolyQ(1) - q_power(4), PolyQ(1) - q_power(2));
	EXPECT_EQ(a * RatFuncQ(1), RatFuncQ(PolyQ(1) + q_power(2)));

	// x / x = 1 for x = 3q^2 + 1
	RatFuncQ x(PolyQ(1) + BigRat(3) * q_power(2));
	EXPECT_EQ(x / x, RatFuncQ(1));

	// (q^2)_2 / ((q^2)_1 (q^2)_1) = 1+q^2, expanded through the polynomial route
	RatFuncQ b(pochhammer_q2(2), pochhammer_q2(1) * pochhammer_q2(1));
	EXPECT_EQ(b, RatFuncQ(PolyQ(1) + q_power(2)));

	EXPECT_THROW(x / RatFuncQ(0), std::domain_error);
}

TEST(RatFunc, CanonicalDenominatorMonic)
{
	// 2q+2 over 4q^2-4 reduces to 1/(2q-2) with monic denominator
	RatFuncQ f(PolyQ({BigRat(2), BigRat(2)}), PolyQ({BigRat(-4), BigRat(0), BigRat(4)}));
	EXPECT_TRUE(f.den().leading() == 1);
	EXPECT_EQ(f * RatFuncQ(PolyQ({BigRat(-1), BigRat(1)})), RatFuncQ(BigRat(1, 2)));
}

TEST(RatFunc, RingAxiomsRandomized)
{
	std::mt19937 rng(7);
	for (int i = 0; i < 60; ++i) {
		RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a + RatFuncQ(0), a);
		EXPECT_EQ(a * RatFuncQ(1), a);
		EXPECT_EQ(a - b, a + (RatFuncQ(0) - b));
		// canonical-form uniqueness: a-b == 0 iff identical representation
		EXPECT_EQ(a - b == RatFuncQ(0), a == b);
	}
}

TEST(PolyZ, RingAxiomsRandomized)
{
	std::mt19937 rng(11);
	for (int i = 0; i < 40; ++i) {
		PolyZ a = random_polyz(rng), b = random_polyz(rng), c = random_polyz(rng);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
	}
}

TEST(Series, GeometricInverse)
{
	// invert(1 - v) to order 3 -> 1 + v + v^2 + v^3
	VSeries<RatFuncQ> s(std::vector<RatFuncQ>{RatFuncQ(1), RatFuncQ(-1), RatFuncQ(0),
	                                          RatFuncQ(0)});
	VSeries<RatFuncQ> inv = s.invert();
	for (int r = 0; r <= 3; ++r)
		EXPECT_EQ(inv[r], RatFuncQ(1));
}

TEST(Series, InverseIsTwoSidedUpToOrder)
{
	std::mt19937 rng(3);
	for (int trial = 0; trial < 25; ++trial) {
		std::vector<RatFuncQ> c{RatFuncQ(1 + (trial % 3))};
		for (int r = 1; r <= 5; ++r)
			c.push_back(random_ratfunc(rng));
		VSeries<RatFuncQ> s(c);
		VSeries<RatFuncQ> inv = s.invert();
		VSeries<RatFuncQ> one = VSeries<RatFuncQ>::constant(RatFuncQ(1), 5);
		EXPECT_EQ(s * inv, one);
		EXPECT_EQ(inv * s, one);
	}
}

TEST(Series, ProductAgainstBruteForceConvolution)
{
	// (1+v) * invert(1+v) to order 5 -> 1, and the product matches a direct
	// convolution computed here by hand
	std::vector<RatFuncQ> c{RatFuncQ(1), RatFuncQ(1)};
	for (int r = 2; r <= 5; ++r)
		c.push_back(RatFuncQ(0));
	VSeries<RatFuncQ> s(c);
	VSeries<RatFuncQ> inv = s.invert();
	std::vector<RatFuncQ> conv(6, RatFuncQ(0));
	for (int a = 0; a <= 5; ++a)
		for (int b = 0; a + b <= 5; ++b)
			conv[a + b] += s[a] * inv[b];
	EXPECT_EQ(conv[0], RatFuncQ(1));
	for (int r = 1; r <= 5; ++r)
		EXPECT_EQ(conv[r], RatFuncQ(0));
	EXPECT_EQ(s * inv, VSeries<RatFuncQ>::constant(RatFuncQ(1), 5));
}

TEST(Series, ShiftQ)
{
	std::mt19937 rng(5);
	std::vector<RatFuncQ> c;
	for (int r = 0; r <= 4; ++r)
		c.push_back(random_ratfunc(rng));
	VSeries<RatFuncQ> s(c);
	VSeries<RatFuncQ> up = s.shift_q(1);
	for (int r = 0; r <= 4; ++r)
		EXPECT_EQ(up[r], c[r] * RatFuncQ::q_pow(2 * r));
	EXPECT_EQ(up.shift_q(-1), s);
}

TEST(Determinant, Examples)
{
	Matrix<RatFuncQ> one(1, 1);
	one(0, 0) = RatFuncQ(PolyQ({BigRat(1), BigRat(2)}));
	EXPECT_EQ(one.determinant(), one(0, 0));

	EXPECT_EQ(Matrix<RatFuncQ>::identity(3).determinant(), RatFuncQ(1));
}

TEST(Determinant, JacobiTrudiInTwoVariables)
{
	// det [[e1, e2], [1, e1]] = e1^2 - e2 = h2, checked by expanding both
	// sides in two variables
	using P = SparsePoly<BigRat>;
	P x = P::variable(2, 0), y = P::variable(2, 1);
	P e1 = x + y, e2 = x * y;
	P h2 = x * x + x * y + y * y;
	Matrix<P> m(2, 2, P::zero(2));
	m(0, 0) = e1;
	m(0, 1) = e2;
	m(1, 0) = P::constant(2, BigRat(1));
	m(1, 1) = e1;
	EXPECT_EQ(m.determinant() + e2, e1 * e1);
	EXPECT_EQ(m.determinant(), h2);
}

TEST(Determinant, MatchesCofactorOnRandom4x4)
{
	std::mt19937 rng(17);
	for (int trial = 0; trial < 10; ++trial) {
		Matrix<RatFuncQ> m(4, 4);
		for (int i = 0; i < 4; ++i)
			for (int j = 0; j < 4; ++j)
				m(i, j) = RatFuncQ(testutil::random_rat(rng));
		// independent cofactor expansion along the first row
		auto minor = [&](int col) {
			Matrix<RatFuncQ> s(3, 3);
			for (int i = 1; i < 4; ++i)
				for (int j = 0, t = 0; j < 4; ++j) {
					if (j == col)
						continue;
					s(i - 1, t++) = m(i, j);
				}
			return s;
		};
		RatFuncQ expect(0);
		for (int j = 0; j < 4; ++j) {
			RatFuncQ term = m(0, j) * minor(j).determinant();
			expect = (j % 2 == 0) ? expect + term : expect - term;
		}
		EXPECT_EQ(m.determinant(), expect);
	}
}

TEST(MultiPoly, Examples)
{
	int n = 2; // psi_1, psi_2, psi*_1, psi*_2
	auto psi = [&](int j) { return MultiPoly::variable(2 * n, j - 1); };
	auto psis = [&](int j) { return MultiPoly::variable(2 * n, n + j - 1); };

	// d/dpsi_1 (psi_1^2 psi*_2) = 2 psi_1 psi*_2
	MultiPoly f = psi(1) * psi(1) * psis(2);
	EXPECT_EQ(f.partial_derivative(0), BigRat(2) * (psi(1) * psis(2)));

	// (psi_1+psi_2)(psi_1-psi_2) = psi_1^2 - psi_2^2
	EXPECT_EQ((psi(1) + psi(2)) * (psi(1) - psi(2)), psi(1) * psi(1) - psi(2) * psi(2));

	EXPECT_THROW(f.partial_derivative(99), std::invalid_argument);

	// Poisson bracket of the coordinate functions from the defining structure
	auto bracket = [&](const MultiPoly &a, const MultiPoly &b) {
		MultiPoly acc = MultiPoly::zero(2 * n);
		for (int j = 1; j <= n; ++j) {
			MultiPoly weight = one_like(acc) - psis(j) * psi(j);
			acc += (a.partial_derivative(j - 1) * b.partial_derivative(n + j - 1) -
			        a.partial_derivative(n + j - 1) * b.partial_derivative(j - 1)) *
			       weight;
		}
		return acc;
	};
	EXPECT_EQ(bracket(psi(1), psis(1)), one_like(psi(1)) - psis(1) * psi(1));
	EXPECT_TRUE(bracket(psi(1), psi(2)).is_zero());
}

TEST(MultiPoly, RingAxiomsRandomized)
{
	std::mt19937 rng(23);
	for (int i = 0; i < 40; ++i) {
		MultiPoly a = random_multipoly(rng, 4), b = random_multipoly(rng, 4),
		          c = random_multipoly(rng, 4);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a - a, MultiPoly::zero(4));
	}
}
