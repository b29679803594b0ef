#include "charlier/diffeq.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace charlier {
namespace {

using testing::q;

class DiffeqTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { table_ = new CoeffTable(CoeffTable::build(12)); }
  static void TearDownTestSuite() {
    delete table_;
    table_ = nullptr;
  }
  static const CoeffTable& table() { return *table_; }

 private:
  static inline CoeffTable* table_ = nullptr;
};

Poly expected_a2() { return -(kA * kX * kX) * q(1, 2) + (kA * kA * q(1, 2) + kA * q(3, 2) + Poly(1)) * kX; }

TEST(ApplyOperator, Examples) {
  const Poly p = kX * kX * kA - kN;
  EXPECT_EQ(apply_operator(DiffOperator().add(Poly(1), 0, 0), p), p);
  EXPECT_EQ(apply_operator(DiffOperator().add(kX, 1, 1), kX * kX), kX * q(2));
  EXPECT_TRUE(apply_operator(classical_operator(3), charlier(3)).is_zero());
  for (long n = 0; n <= 10; ++n) EXPECT_TRUE(apply_operator(classical_operator(n), charlier(n)).is_zero());
  // Terms beyond the degree are dropped without changing the result.
  EXPECT_EQ(apply_operator(DiffOperator().add(kA, 5).add(Poly(1), 0), kX), kX);
}

TEST(ApplyOperator, TermsMerge) {
  DiffOperator op;
  op.add(kX, 2).add(kA, 2).add(-kX, 2);
  ASSERT_EQ(op.terms().size(), 1u);
  EXPECT_EQ(op.terms()[0].coeff, kA);
  op.add(-kA, 2);
  EXPECT_TRUE(op.terms().empty());
}

TEST(Coefficients, A0) {
  EXPECT_TRUE(coeff_A0(0).is_zero());
  EXPECT_EQ(coeff_A0(1), Poly(1));
  EXPECT_EQ(coeff_A0(2), Poly(2) + kA);
  EXPECT_EQ(coeff_A0(3), kA * kA * q(1, 2) + kA * q(2) + Poly(3));
}

TEST(Coefficients, SmallIndices) {
  EXPECT_EQ(coeff_A(1), -kX);
  EXPECT_EQ(coeff_A(2), expected_a2());
  // Frozen from the sympy oracle.
  const Poly a3 = -pow(kA, 4) * kX * q(1, 12) + pow(kA, 3) * kX * kX * q(1, 6) - pow(kA, 3) * kX * q(1, 3) -
                  kA * kA * pow(kX, 3) * q(1, 12) + kA * kA * kX * kX * q(1, 4) - kA * kA * kX * q(2, 3) +
                  kA * pow(kX, 3) * q(1, 6) - kA * kX * q(7, 6) - kX;
  EXPECT_EQ(coeff_A(3), a3);
  EXPECT_THROW(coeff_A(0), std::invalid_argument);
}

TEST_F(DiffeqTest, CoefficientsVanishAtZero) {
  for (std::size_t i = 1; i <= 12; ++i) EXPECT_TRUE(substitute(table().ai(i), VarId::X, q(0)).is_zero()) << i;
}

TEST_F(DiffeqTest, Forms) {
  for (long n : {0, 1, 2, 9, 10}) {
    EXPECT_TRUE(verify_form0(table(), n)) << n;
    EXPECT_TRUE(verify_form1(table(), n)) << n;
    EXPECT_TRUE(verify_form2(table(), n)) << n;
  }
}

TEST_F(DiffeqTest, FormOneByHand) {
  // A_0 C_1 + A_1 Delta C_1 = (x - a) - x = -a = C_1(0) C_0(x - 2).
  EXPECT_EQ(table().a0(1) * charlier(1) + table().ai(1) * delta(charlier(1)), -kA);
}

TEST_F(DiffeqTest, DifferenceEquation) {
  for (long n : {0, 1, 2, 5, 12}) EXPECT_TRUE(apply_difference_equation(table(), n).is_zero()) << n;
}

TEST_F(DiffeqTest, DifferenceEquationByHandAtOne) {
  // N [A_0 y + A_1 Delta y] + x Delta nabla y + (a - x) Delta y + y with y = (1+N)(x-a) + aN.
  const Poly y = (Poly(1) + kN) * (kX - kA) + kA * kN;
  const Poly lhs = kN * (y - kX * delta(y)) + (kA - kX) * delta(y) + y;
  EXPECT_TRUE(lhs.is_zero());
}

TEST_F(DiffeqTest, NStratification) {
  for (long n = 0; n <= 8; ++n) {
    const Poly e = difference_equation_expanded(table(), n);
    EXPECT_EQ(e, apply_difference_equation(table(), n));
    EXPECT_LE(degree_in(e, VarId::Nmass), 2);
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_TRUE(coeff_of(e, VarId::Nmass, k).is_zero());
  }
}

TEST_F(DiffeqTest, TableTooSmall) {
  const CoeffTable small = CoeffTable::build(2);
  EXPECT_THROW(apply_difference_equation(small, 3), std::out_of_range);
  EXPECT_THROW(small.entry(0), std::out_of_range);
}

TEST(Identities, ReductionLemma) {
  // n = 1: a + (1 - a - x)(x - 1 - a) + x(x - 2 - a) = -1.
  EXPECT_EQ(kA * charlier(1) + (Poly(1) - kA - kX) * (kX - Poly(1) - kA) + kX * (kX - Poly(2) - kA), Poly(-1));
  for (long n : {1, 2, 8}) EXPECT_TRUE(verify_reduction_lemma(n)) << n;
}

TEST(Identities, ExpansionIdentity) {
  EXPECT_TRUE(verify_expansion_identity(Poly(1)));
  EXPECT_TRUE(verify_expansion_identity(kX * kX));
  EXPECT_TRUE(verify_expansion_identity(charlier(5)));
  EXPECT_TRUE(verify_expansion_identity(kX * kX * kA * kN - kX * q(3, 4)));
}

TEST(Identities, ClassicalInfiniteOrder) {
  for (long n : {0, 1, 11}) EXPECT_TRUE(verify_classical_infinite_order(n)) << n;
}

TEST_F(DiffeqTest, CombinedEquation) {
  for (long n : {0, 1, 10}) EXPECT_TRUE(verify_combined_equation(table(), n)) << n;
}

TEST_F(DiffeqTest, LeadingXCoefficient) {
  EXPECT_EQ(leading_x_coeff(table(), 1), Poly(-1));
  EXPECT_EQ(leading_x_coeff(table(), 2), -kA * q(1, 2));
  EXPECT_EQ(leading_x_coeff(table(), 3), kA * q(1, 6) - kA * kA * q(1, 12));
  EXPECT_EQ(leading_x_coeff(table(), 4), -pow(kA, 3) * q(1, 144) + kA * kA * q(1, 24) - kA * q(1, 24));
  EXPECT_EQ(leading_x_closed_forms(1).size(), 2u);
  EXPECT_EQ(leading_x_closed_forms(2).size(), 4u);
  for (std::size_t i = 1; i <= 12; ++i) {
    EXPECT_TRUE(residual_leading_x(table(), i).empty()) << i;
    EXPECT_FALSE(leading_x_coeff(table(), i).is_zero());
  }
}

TEST_F(DiffeqTest, DegreeClaims) {
  EXPECT_EQ(coeff_of(table().ai(2), VarId::A, 2), kX * q(1, 2));
  for (std::size_t i = 1; i <= 12; ++i) {
    const DegreeReport r = degree_claims(table(), i);
    EXPECT_TRUE(r.all()) << i;
    EXPECT_EQ(table().entry(i).deg_a, static_cast<long>(2 * i - 2));
    EXPECT_EQ(table().entry(i).deg_x, static_cast<long>(i));
  }
}

TEST_F(DiffeqTest, DegreeClaimsDetectBadCoefficient) {
  const CoeffTable bad = table().with_override(3, table().ai(3) + pow(kA, 7) * kX);
  EXPECT_FALSE(verify_degree_claims(bad, 3));
  EXPECT_TRUE(verify_degree_claims(bad, 2));
}

TEST(MixedLeading, Examples) {
  EXPECT_TRUE(verify_mixed_leading(3, 3, 5));
  EXPECT_EQ(nabla(charlier(2)), kX - Poly(1) - kA);
  EXPECT_TRUE(verify_mixed_leading(1, 0, 2));
  EXPECT_TRUE(verify_mixed_leading(4, 2, 7));
  EXPECT_THROW(residual_mixed_leading(3, 4, 5), std::invalid_argument);
  // The full polynomials differ, only the leading parts agree.
  EXPECT_NE(nabla(charlier(4)), delta(charlier(4)));
}

TEST_F(DiffeqTest, ForwardSubstitutionReproducesCoefficients) {
  const auto [a0, ai] = solve_coefficients_forward(10);
  ASSERT_EQ(a0.size(), 11u);
  ASSERT_EQ(ai.size(), 10u);
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(a0[static_cast<std::size_t>(n)], coeff_A0(n)) << n;
  for (std::size_t i = 1; i <= 10; ++i) EXPECT_EQ(ai[i - 1], table().ai(i)) << i;
}

TEST(Resultant, KnownValues) {
  EXPECT_EQ(resultant({q(-1), q(1)}, {q(-2), q(1)}), q(-1));
  EXPECT_EQ(resultant({q(-1), q(1)}, {q(-1), q(0), q(1)}), q(0));
  EXPECT_EQ(resultant({q(-1, 2)}, {q(1, 6), q(-1, 12)}), q(-1, 2));
  EXPECT_EQ(univariate_coefficients(kA * kA - Poly(3), VarId::A), (std::vector<Rational>{q(-3), q(0), q(1)}));
  EXPECT_THROW(univariate_coefficients(kA * kX, VarId::A), std::invalid_argument);
  EXPECT_EQ(strip_power(pow(kA, 3) - kA * kA, VarId::A), kA - Poly(1));
}

TEST_F(DiffeqTest, ConsecutiveLeadingCoefficientsShareNoPositiveRoot) {
  for (std::size_t i = 1; i < 12; ++i) EXPECT_NE(leading_pair_resultant(table(), i), 0) << i;
}

TEST_F(DiffeqTest, MutatedCoefficientBreaksEquation) {
  const CoeffTable bad = table().with_override(1, kX);
  EXPECT_TRUE(apply_difference_equation(bad, 0).is_zero());
  EXPECT_EQ(apply_difference_equation(bad, 1), kN * kX * q(2) + kN * kN * kX * q(2));
  EXPECT_FALSE(verify_form1(bad, 1));
}

}  // namespace
}  // namespace charlier
