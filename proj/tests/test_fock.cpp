#include "qbf/fock.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qbf;
using testoracle::apply_generator_xi;
using testoracle::xi_image;

namespace {

const RatFuncQ kOne(1);
const RatFuncQ kQ2 = RatFuncQ::q_pow(2);

OperatorWord word(std::vector<std::pair<Generator, int>> f, PolyZ s = PolyZ(RatFuncQ(1)))
{
	return OperatorWord(std::move(f), std::move(s));
}

} // namespace

TEST(ApplyGenerator, PaperExamples)
{
	int n = 3;
	FockVector mu = FockVector::basis_vector(Partition({2, 2, 1}));

	// beta*_1 |(2,2,1)> = (1-q^2) |(3,2,1)>  (m_1 = 0)
	FockVector created = apply_generator(n, Generator::create(1), mu);
	EXPECT_EQ(created.coeff(Partition({3, 2, 1})), PolyZ(kOne - kQ2));
	EXPECT_EQ(created.coeffs().size(), 1u);

	// beta_2 |(2,2,1)> = |(1,1,1)>: the height-2 column goes away, leaving
	// the single height-3 column (cross-checked by the xi-monomial oracle)
	FockVector ann = apply_generator(n, Generator::annihilate(2), mu);
	EXPECT_EQ(ann.coeff(Partition({1, 1, 1})), PolyZ(kOne));
	EXPECT_EQ(ann.coeffs().size(), 1u);

	// q^{N_3} |(2,2,1)> = q |(2,2,1)>
	FockVector diag = apply_generator(n, Generator::q_num(3), mu);
	EXPECT_EQ(diag.coeff(Partition({2, 2, 1})), PolyZ(RatFuncQ::q_pow(1)));

	// annihilating an empty site gives the zero vector
	EXPECT_TRUE(apply_generator(n, Generator::annihilate(1), mu).is_zero());
}

TEST(ApplyGenerator, MatchesDifferenceOperatorOracle)
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 0; k <= 2; ++k)
			for (const Partition &p : fock_basis(n, k))
				for (int j = 1; j <= n; ++j)
					for (Generator g : {Generator::annihilate(j), Generator::create(j),
					                    Generator::q_num(j), Generator::q_num_inv(j),
					                    Generator::number(j)}) {
						FockVector v = FockVector::basis_vector(p);
						EXPECT_EQ(xi_image(n, apply_generator(n, g, v)),
						          apply_generator_xi(n, g, xi_image(n, v)))
						    << "n=" << n << " " << p.to_string();
					}
}

TEST(ApplyWord, Examples)
{
	int n = 2;
	// beta_1 beta*_2 on |(1)>: beta*_2 first, then beta_1 -> (1-q^2)|(1,1)>
	FockVector v = apply_word(
	    n, word({{Generator::annihilate(1), 1}, {Generator::create(2), 1}}),
	    FockVector::basis_vector(Partition({1})));
	EXPECT_EQ(v.coeff(Partition({1, 1})), PolyZ(kOne - kQ2));
	EXPECT_EQ(v.coeffs().size(), 1u);

	// empty word is the identity
	FockVector x = FockVector::basis_vector(Partition({2, 1}));
	EXPECT_EQ(apply_word(3, word({}), x), x);

	// beta*_1 beta_1 |lambda> = (1 - q^{2 m_1(lambda)}) |lambda>
	for (const Partition &p : fock_basis(3, 2)) {
		FockVector w = apply_word(
		    3, word({{Generator::create(1), 1}, {Generator::annihilate(1), 1}}),
		    FockVector::basis_vector(p));
		RatFuncQ expect = kOne - RatFuncQ::q_pow(2 * p.multiplicity(1));
		EXPECT_EQ(w.coeff(p), PolyZ(expect));
	}
}

TEST(MatrixOf, Examples)
{
	// T_1 words at n=2, k=1: beta_1 beta*_2 + z beta_2 beta*_1
	std::vector<OperatorWord> t1{
	    word({{Generator::annihilate(1), 1}, {Generator::create(2), 1}}),
	    word({{Generator::annihilate(2), 1}, {Generator::create(1), 1}}, z_power(1))};
	GradedOperator op = matrix_of(t1, 2, 1);
	ASSERT_EQ(op.mat.rows(), 2);
	ASSERT_EQ(op.mat.cols(), 2);
	// basis ((1),(1,1))
	EXPECT_EQ(op.mat(0, 0), PolyZ());
	EXPECT_EQ(op.mat(1, 0), PolyZ(kOne - kQ2));
	EXPECT_EQ(op.mat(0, 1), z_power(1) * PolyZ(kOne - kQ2));
	EXPECT_EQ(op.mat(1, 1), PolyZ());
	// at z = 1 this is [[0, 1-q^2], [1-q^2, 0]]
	EXPECT_EQ(op.mat(0, 1).evaluate(kOne), kOne - kQ2);

	EXPECT_EQ(matrix_of({word({})}, 3, 2), GradedOperator::identity(3, 2));

	GradedOperator c = matrix_of({word({{Generator::create(1), 1}})}, 3, 0);
	ASSERT_EQ(c.mat.rows(), 3);
	ASSERT_EQ(c.mat.cols(), 1);
	EXPECT_EQ(c.mat(fock_index(fock_basis(3, 1), Partition({1})), 0), PolyZ(kOne - kQ2));

	EXPECT_THROW(matrix_of({word({{Generator::create(1), 1}}),
	                        word({{Generator::annihilate(1), 1}})},
	                       2, 1),
	             std::invalid_argument);
}

TEST(MatrixOf, Linearity)
{
	std::vector<OperatorWord> w1{word({{Generator::annihilate(1), 1}, {Generator::create(2), 1}})};
	std::vector<OperatorWord> w2{word({{Generator::annihilate(2), 1}, {Generator::create(3), 1}})};
	std::vector<OperatorWord> both = w1;
	both.push_back(w2[0]);
	EXPECT_EQ(matrix_of(both, 3, 2), matrix_of(w1, 3, 2) + matrix_of(w2, 3, 2));
}

TEST(Pairing, Examples)
{
	FockVector v = apply_generator(1, Generator::create(1), FockVector::basis_vector(Partition()));
	EXPECT_EQ(pairing(Partition({1}), v), PolyZ(kOne - kQ2));
	EXPECT_EQ(pairing(Partition({2}), FockVector::basis_vector(Partition({2}))), PolyZ(kOne));
	EXPECT_EQ(bra_form(Partition({1}), Partition({1})), kOne - kQ2);
	EXPECT_EQ(bra_form(Partition({1}), Partition({1, 1})), RatFuncQ(0));
	// b_{(2,2,1)} = (q^2)_1 (q^2)_1
	EXPECT_EQ(bra_form(Partition({2, 2, 1}), Partition({2, 2, 1})),
	          RatFuncQ(pochhammer_q2(1) * pochhammer_q2(1)));
}

// Defining relations of the q-boson algebra as exact matrix identities on
// every particle sector in desk range.
TEST(Relations, DefiningRelationsOnAllBlocks)
{
	for (int n = 2; n <= 4; ++n)
		for (int k = 0; k <= 3; ++k)
			for (int i = 1; i <= n; ++i)
				for (int j = 1; j <= n; ++j) {
					auto bi = Generator::annihilate(i), bj = Generator::annihilate(j);
					auto ci = Generator::create(i), cj = Generator::create(j);
					auto qi = Generator::q_num(i);

					// beta_i beta*_j - beta*_j beta_i = delta_ij (1-q^2) q^{2N_i}
					GradedOperator lhs =
					    matrix_of({word({{bi, 1}, {cj, 1}}),
					               word({{cj, 1}, {bi, 1}}, PolyZ(RatFuncQ(-1)))},
					              n, k);
					GradedOperator rhs(n, k, 0);
					if (i == j)
						rhs = matrix_of({word({{qi, 2}}, PolyZ(kOne - kQ2))}, n, k);
					EXPECT_EQ(lhs, rhs) << "n=" << n << " k=" << k;

					// q^{N_i} beta_j = q^{-delta_ij} beta_j q^{N_i}
					GradedOperator a = matrix_of({word({{qi, 1}, {bj, 1}})}, n, k);
					GradedOperator b = matrix_of(
					    {word({{bj, 1}, {qi, 1}},
					          PolyZ(RatFuncQ::q_pow(i == j ? -1 : 0)))},
					    n, k);
					EXPECT_EQ(a, b);

					// q^{N_i} beta*_j = q^{+delta_ij} beta*_j q^{N_i}
					GradedOperator a2 = matrix_of({word({{qi, 1}, {cj, 1}})}, n, k);
					GradedOperator b2 = matrix_of(
					    {word({{cj, 1}, {qi, 1}},
					          PolyZ(RatFuncQ::q_pow(i == j ? 1 : 0)))},
					    n, k);
					EXPECT_EQ(a2, b2);
				}

	// beta_i beta*_i - q^2 beta*_i beta_i = 1-q^2 and beta*_i beta_i = 1-q^{2N_i}
	for (int n = 2; n <= 4; ++n)
		for (int k = 0; k <= 3; ++k)
			for (int i = 1; i <= n; ++i) {
				auto b = Generator::annihilate(i), c = Generator::create(i);
				GradedOperator lhs = matrix_of(
				    {word({{b, 1}, {c, 1}}), word({{c, 1}, {b, 1}}, PolyZ(RatFuncQ(0) - kQ2))},
				    n, k);
				GradedOperator rhs = (PolyZ(kOne - kQ2)) * GradedOperator::identity(n, k);
				EXPECT_EQ(lhs, rhs);

				GradedOperator num = matrix_of(
				    {word({}), word({{Generator::q_num(i), 2}}, PolyZ(RatFuncQ(-1)))}, n, k);
				EXPECT_EQ(matrix_of({word({{c, 1}, {b, 1}})}, n, k), num);
			}
}

TEST(Relations, NumberOperatorRelations)
{
	for (int n = 2; n <= 3; ++n)
		for (int k = 0; k <= 3; ++k)
			for (int i = 1; i <= n; ++i)
				for (int j = 1; j <= n; ++j) {
					auto Ni = Generator::number(i);
					auto qj = Generator::q_num(j);
					EXPECT_EQ(matrix_of({word({{Ni, 1}, {qj, 1}})}, n, k),
					          matrix_of({word({{qj, 1}, {Ni, 1}})}, n, k));

					// beta_i (N_j - delta_ij) = N_j beta_i
					auto bi = Generator::annihilate(i);
					GradedOperator lhs = matrix_of(
					    {word({{bi, 1}, {Generator::number(j), 1}}),
					     word({{bi, 1}}, PolyZ(RatFuncQ(i == j ? -1 : 0)))},
					    n, k);
					GradedOperator rhs = matrix_of({word({{Generator::number(j), 1}, {bi, 1}})}, n, k);
					EXPECT_EQ(lhs, rhs);

					// beta*_i (N_j + delta_ij) = N_j beta*_i
					auto ci = Generator::create(i);
					GradedOperator lhs2 = matrix_of(
					    {word({{ci, 1}, {Generator::number(j), 1}}),
					     word({{ci, 1}}, PolyZ(RatFuncQ(i == j ? 1 : 0)))},
					    n, k);
					GradedOperator rhs2 = matrix_of({word({{Generator::number(j), 1}, {ci, 1}})}, n, k);
					EXPECT_EQ(lhs2, rhs2);
				}
}

TEST(Relations, TotalNumberScalarOnBlock)
{
	// q^{2N} acts as q^{2k}
	for (int n = 2; n <= 4; ++n)
		for (int k = 0; k <= 3; ++k) {
			std::vector<std::pair<Generator, int>> all;
			for (int j = 1; j <= n; ++j)
				all.push_back({Generator::q_num(j), 2});
			EXPECT_EQ(matrix_of({word(std::move(all))}, n, k),
			          RatFuncQ::q_pow(2 * k) * GradedOperator::identity(n, k));
		}
}

TEST(GradedOperatorAlgebra, ShapeChecks)
{
	GradedOperator up = generator_block(2, 1, Generator::create(1));
	GradedOperator down = generator_block(2, 2, Generator::annihilate(1));
	EXPECT_EQ((down * up).degree, 0);
	EXPECT_EQ((down * up).source, 1);
	EXPECT_THROW(up * up, std::invalid_argument);
	EXPECT_THROW(up + down, std::invalid_argument);
}

TEST(CyclicSites, WrapBothWays)
{
	EXPECT_EQ(cyclic_site(0, 3), 3);
	EXPECT_EQ(cyclic_site(4, 3), 1);
	EXPECT_EQ(cyclic_site(-1, 3), 2);
	EXPECT_EQ(cyclic_site(3, 3), 3);
	// site n+1 == site 1 in the action
	FockVector v = FockVector::basis_vector(Partition({1}));
	EXPECT_EQ(apply_generator(2, Generator::annihilate(3), v),
	          apply_generator(2, Generator::annihilate(1), v));
}
