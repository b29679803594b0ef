#include "charlier/charlier.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace charlier {
namespace {

using testing::q;

TEST(Charlier, SmallDegrees) {
  EXPECT_EQ(charlier(0), Poly(1));
  EXPECT_EQ(charlier(1), kX - kA);
  EXPECT_EQ(charlier(2), kX * kX * q(1, 2) - kX * q(1, 2) - kA * kX + kA * kA * q(1, 2));
  // Frozen from the sympy oracle in tests/oracle.
  EXPECT_EQ(charlier(3), -pow(kA, 3) * q(1, 6) + kA * kA * kX * q(1, 2) - kA * kX * kX * q(1, 2) +
                             kA * kX * q(1, 2) + pow(kX, 3) * q(1, 6) - kX * kX * q(1, 2) + kX * q(1, 3));
  EXPECT_TRUE(charlier(-1).is_zero());
  EXPECT_THROW(charlier(-2), std::invalid_argument);
}

TEST(Charlier, DegreeAndLeadingCoefficient) {
  for (long n = 0; n <= 12; ++n) {
    const Poly c = charlier(n);
    EXPECT_EQ(degree_in(c, VarId::X), n);
    EXPECT_EQ(degree_in(c, VarId::A), n);
    EXPECT_EQ(coeff_of(c, VarId::X, static_cast<std::size_t>(n)), Poly(Rational(1 / factorial(n))));
  }
}

TEST(Charlier, ClosedFormValues) {
  EXPECT_EQ(charlier_value_zero(2), kA * kA * q(1, 2));
  EXPECT_EQ(charlier_value_minus_one(2), Poly(1) + kA + kA * kA * q(1, 2));
  EXPECT_EQ(charlier_value_minus_one(0), Poly(1));
  for (long n = 0; n <= 12; ++n) {
    EXPECT_EQ(charlier_at(n, q(0)), charlier_value_zero(n)) << n;
    EXPECT_EQ(charlier_at(n, q(-1)), charlier_value_minus_one(n)) << n;
    EXPECT_TRUE(residual_special_values(n).is_zero());
  }
}

TEST(Laguerre, Examples) {
  const Poly alpha = kN;  // any symbol other than t serves as alpha
  EXPECT_EQ(laguerre(0, alpha, VarId::A), Poly(1));
  EXPECT_EQ(laguerre(1, alpha, VarId::A), alpha + Poly(1) - kA);
  EXPECT_EQ(laguerre(0, Poly(-1), VarId::A), Poly(1));
  // L_2^{(0)}(t) = 1 - 2t + t^2/2.
  EXPECT_EQ(laguerre(2, Poly(0), VarId::A), Poly(1) - kA * q(2) + kA * kA * q(1, 2));
  EXPECT_THROW(laguerre(2, kA, VarId::A), std::invalid_argument);
}

TEST(Identities, LaguerreRelation) {
  for (long n : {0, 1, 6, 12}) EXPECT_TRUE(verify_laguerre_relation(n)) << n;
}

TEST(Identities, Lowering) {
  for (long n : {0, 2, 10}) EXPECT_TRUE(verify_lowering(n)) << n;
  for (long n = 0; n <= 12; ++n) EXPECT_TRUE(residual_nabla_lowering(n).is_zero()) << n;
}

TEST(Identities, SecondOrder) {
  for (long n : {0, 1, 12}) EXPECT_TRUE(verify_second_order(n)) << n;
}

TEST(Identities, ShiftIdentity) {
  EXPECT_TRUE(verify_shift_identity(3, q(-1)));
  EXPECT_TRUE(verify_shift_identity(3, q(3)));
  EXPECT_TRUE(verify_shift_identity(4, q(1, 2)));
  // Wrong p on the right-hand side must be detected.
  Poly rhs;
  for (long k = 0; k <= 3; ++k) rhs += charlier(3 - k) * binomial(q(2), k);
  EXPECT_NE(charlier_shifted(3, q(1)), rhs);
}

TEST(Identities, Convolution) {
  EXPECT_TRUE(verify_convolution(5, 5));
  EXPECT_TRUE(verify_convolution(1, 0));
  EXPECT_TRUE(verify_convolution(8, 3));
  EXPECT_EQ(charlier(1) + charlier_reflected(1), Poly());
  EXPECT_THROW(residual_convolution(2, 3), std::invalid_argument);
}

TEST(Identities, InverseMatrix) {
  for (long n : {1, 3, 6}) EXPECT_TRUE(verify_inverse_matrix(n)) << n;
  EXPECT_THROW(residual_inverse_matrix(0), std::invalid_argument);
}

TEST(Identities, ValueDifference) {
  for (long n : {1, 2, 9}) EXPECT_TRUE(verify_value_difference(n)) << n;
  EXPECT_EQ(charlier_at(1, q(-1)), -Poly(1) - kA);
}

TEST(Moments, StirlingValues) {
  EXPECT_EQ(moment(0), Poly(1));
  EXPECT_EQ(moment(2), kA + kA * kA);
  EXPECT_EQ(moment(3), kA + kA * kA * q(3) + pow(kA, 3));
  const MomentTable t(10);
  for (std::size_t k = 1; k <= 10; ++k) {
    EXPECT_EQ(degree_in(t[k], VarId::A), static_cast<long>(k));
    for (const auto& [m, c] : t[k].terms()) {
      EXPECT_TRUE(is_integer(c));
      EXPECT_GT(c, 0);
    }
  }
}

// Truncated Poisson sum at a = 1 over 60 terms: e^{-1} sum_{x<60} x^k / x!.
long double numeric_moment_at_one(unsigned k) {
  long double sum = 0.0L, term_fact = 1.0L;
  for (unsigned x = 0; x < 60; ++x) {
    if (x > 0) term_fact /= static_cast<long double>(x);
    sum += std::pow(static_cast<long double>(x), static_cast<long double>(k)) * term_fact;
  }
  return sum * std::exp(-1.0L);
}

TEST(Moments, NumericAndBellOracles) {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (unsigned k = 0; k <= 10; ++k) {
    const Rational exact = evaluate(moment(k), q(0), q(1), q(0));
    EXPECT_EQ(exact, q(bell[k]));
    EXPECT_EQ(bell_number(k), bell[k]);
    EXPECT_NEAR(static_cast<double>(numeric_moment_at_one(k) - static_cast<long double>(exact.get_d())), 0.0, 1e-12)
        << k;
  }
}

TEST(InnerProductClassical, Examples) {
  EXPECT_EQ(inner_product_classical(charlier(1), charlier(1)), kA);
  EXPECT_TRUE(inner_product_classical(charlier(0), charlier(3)).is_zero());
  EXPECT_EQ(inner_product_classical(Poly(1), charlier_shifted(4, q(-1))), Poly(1));
  EXPECT_EQ(inner_product_classical(Poly(1), charlier_shifted(3, q(-1))), Poly(-1));
}

TEST(InnerProductClassical, Orthogonality) {
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= 8; ++n) EXPECT_TRUE(residual_orthogonality_classical(m, n).is_zero()) << m << "," << n;
}

TEST(InnerProductClassical, Bilinear) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    const Poly p = testing::random_poly(rng), r = testing::random_poly(rng), s = testing::random_poly(rng);
    EXPECT_EQ(inner_product_classical(p, r + s), inner_product_classical(p, r) + inner_product_classical(p, s));
    EXPECT_EQ(inner_product_classical(p, r), inner_product_classical(r, p));
  }
}

}  // namespace
}  // namespace charlier
