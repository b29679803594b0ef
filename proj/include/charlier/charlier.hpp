#pragma once

/**
 * @file charlier.hpp
 * @brief Classical Charlier polynomials C_n^{(a)}(x), the Laguerre connection,
 * the Poisson moment functional, and exact checks of the classical identities.
 *
 * Normalization: C_n(x) = sum_k binom(x, k) (-a)^(n-k) / (n-k)!, so the
 * leading coefficient in x is 1/n! and Delta C_n = C_{n-1}. C_{-1} is the zero
 * polynomial.
 *
 * Every `residual_*` function returns a polynomial that is zero exactly when
 * the corresponding identity holds; `verify_*` tests that.
 */

#include "charlier/poly.hpp"

#include <stdexcept>
#include <vector>

namespace charlier {

/// x(x-1)...(x-k+1)/k!
inline Poly binomial_x(long k) {
  Poly out(1);
  for (long j = 0; j < k; ++j) out = out * (kX - Poly(Rational(j)));
  return out * Rational(1 / factorial(k));
}

inline Poly charlier(long n) {
  if (n < -1) throw std::invalid_argument("charlier: index must be >= -1");
  Poly out;
  for (long k = 0; k <= n; ++k)
    out += binomial_x(k) * pow(-kA, static_cast<std::size_t>(n - k)) * Rational(1 / factorial(n - k));
  return out;
}

/// C_n evaluated at x + shift.
inline Poly charlier_shifted(long n, const Rational& shift) { return shift_x(charlier(n), shift); }

/// C_n(value) as a polynomial in a, by substitution.
inline Poly charlier_at(long n, const Rational& value) { return substitute(charlier(n), VarId::X, value); }

/// C_n^{(-a)}(-x): both a and x sign-flipped.
inline Poly charlier_reflected(long n) {
  return negate_var(negate_var(charlier(n), VarId::A), VarId::X);
}

/// (-a)^n / n!, from the closed form.
inline Poly charlier_value_zero(long n) {
  if (n < 0) throw std::invalid_argument("charlier_value_zero: n must be >= 0");
  return pow(-kA, static_cast<std::size_t>(n)) * Rational(1 / factorial(n));
}

/// (-1)^n e_n(a) with e_n(a) = sum_{k<=n} a^k/k!, from the closed form.
inline Poly charlier_value_minus_one(long n) {
  if (n < 0) throw std::invalid_argument("charlier_value_minus_one: n must be >= 0");
  Poly e;
  for (long k = 0; k <= n; ++k) e += pow(kA, static_cast<std::size_t>(k)) * Rational(1 / factorial(k));
  return e * sign_power(n);
}

/// L_n^{(alpha)}(t) = (1/n!) sum_k (-n)_k (alpha+k+1)_{n-k} t^k / k!.
inline Poly laguerre(long n, const Poly& alpha, VarId t) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (degree_in(alpha, t) > 0) throw std::invalid_argument("laguerre: alpha must not depend on t");
  Poly out;
  for (long k = 0; k <= n; ++k) {
    Poly rising_alpha(1);
    for (long j = 0; j < n - k; ++j) rising_alpha = rising_alpha * (alpha + Poly(Rational(k + 1 + j)));
    const Rational scalar = rising(Rational(-n), k) / factorial(k);
    out += rising_alpha * Poly::var(t, static_cast<std::size_t>(k)) * scalar;
  }
  return out * Rational(1 / factorial(n));
}

// ---------------------------------------------------------------------------
// Moment functional of the normalized Poisson weight e^{-a} a^x / x!.

/// Stirling numbers of the second kind S(k, j), 0 <= j <= k <= max_k.
inline std::vector<std::vector<Integer>> stirling2_table(std::size_t max_k) {
  std::vector<std::vector<Integer>> s(max_k + 1, std::vector<Integer>(max_k + 1, 0));
  s[0][0] = 1;
  for (std::size_t k = 1; k <= max_k; ++k)
    for (std::size_t j = 1; j <= k; ++j) s[k][j] = Integer(j) * s[k - 1][j] + s[k - 1][j - 1];
  return s;
}

class MomentTable {
 public:
  explicit MomentTable(std::size_t max_k) {
    const auto s = stirling2_table(max_k);
    entries_.reserve(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) {
      Poly m;
      for (std::size_t j = 0; j <= k; ++j) m.add_term(Monomial(0, j, 0), Rational(s[k][j]));
      entries_.push_back(std::move(m));
    }
  }

  std::size_t max_k() const { return entries_.size() - 1; }
  const Poly& operator[](std::size_t k) const { return entries_.at(k); }

 private:
  std::vector<Poly> entries_;
};

inline Poly moment(std::size_t k) { return MomentTable(k)[k]; }

/// Bell numbers from the Bell triangle; independent of the Stirling table.
inline Integer bell_number(std::size_t k) {
  std::vector<Integer> row{1};
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// sum_x w(x) p(x) q(x): expand in x and send x^k to the k-th moment.
inline Poly inner_product_classical(const Poly& p, const Poly& q) {
  const Poly pq = p * q;
  if (pq.is_zero()) return pq;
  const MomentTable moments(static_cast<std::size_t>(degree_in(pq, VarId::X)));
  Poly out;
  for (const auto& [m, c] : pq.terms()) {
    Monomial rest = m;
    rest[VarId::X] = 0;
    out += Poly::monomial(c, rest) * moments[m[VarId::X]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities.

inline Poly residual_laguerre_relation(long n) {
  return charlier(n) - laguerre(n, kX - Poly(Rational(n)), VarId::A);
}
inline bool verify_laguerre_relation(long n) { return residual_laguerre_relation(n).is_zero(); }

inline Poly residual_lowering(long n) { return delta(charlier(n)) - charlier(n - 1); }
inline bool verify_lowering(long n) { return residual_lowering(n).is_zero(); }

/// nabla C_n(x) - C_{n-1}(x-1).
inline Poly residual_nabla_lowering(long n) {
  return nabla(charlier(n)) - charlier_shifted(n - 1, Rational(-1));
}

/// a y(x+1) + (n-a-x) y(x) + x y(x-1) with y = C_n.
inline Poly residual_second_order(long n) {
  const Poly y = charlier(n);
  return kA * shift_x(y, Rational(1)) + (Poly(Rational(n)) - kA - kX) * y + kX * shift_x(y, Rational(-1));
}
inline bool verify_second_order(long n) { return residual_second_order(n).is_zero(); }

/// C_n(x+p) - sum_k binom(p, k) C_{n-k}(x).
inline Poly residual_shift_identity(long n, const Rational& p) {
  Poly rhs;
  for (long k = 0; k <= n; ++k) rhs += charlier(n - k) * binomial(p, k);
  return charlier_shifted(n, p) - rhs;
}
inline bool verify_shift_identity(long n, const Rational& p) { return residual_shift_identity(n, p).is_zero(); }

/// sum_{k=j}^{i} C_{i-k}(x) C_{k-j}^{(-a)}(-x) - delta_ij.
inline Poly residual_convolution(long i, long j) {
  if (j < 0 || j > i) throw std::invalid_argument("convolution: need 0 <= j <= i");
  Poly sum;
  for (long k = j; k <= i; ++k) sum += charlier(i - k) * charlier_reflected(k - j);
  return i == j ? sum - Poly(1) : sum;
}
inline bool verify_convolution(long i, long j) { return residual_convolution(i, j).is_zero(); }

/// Entries of T*U - I for the unitriangular T = (C_{i-j}(x)), U = (C_{i-j}^{(-a)}(-x)).
inline std::vector<Poly> residual_inverse_matrix(long n) {
  if (n < 1) throw std::invalid_argument("inverse matrix: n must be >= 1");
  std::vector<Poly> t, u;
  for (long d = 0; d < n; ++d) {
    t.push_back(charlier(d));
    u.push_back(charlier_reflected(d));
  }
  std::vector<Poly> out;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Poly entry;
      for (long k = j; k <= i; ++k) entry += t[i - k] * u[k - j];
      if (i == j) entry -= Poly(1);
      if (!entry.is_zero()) out.push_back(std::move(entry));
    }
  return out;
}
inline bool verify_inverse_matrix(long n) { return residual_inverse_matrix(n).empty(); }

/// C_n(0) - C_n(-1) - C_{n-1}(-1), all by substitution.
inline Poly residual_value_difference(long n) {
  if (n < 1) throw std::invalid_argument("value difference: n must be >= 1");
  return charlier_at(n, Rational(0)) - charlier_at(n, Rational(-1)) - charlier_at(n - 1, Rational(-1));
}
inline bool verify_value_difference(long n) { return residual_value_difference(n).is_zero(); }

/// Substituted values at 0 and -1 against the closed forms; zero on success.
inline Poly residual_special_values(long n) {
  return (charlier_at(n, Rational(0)) - charlier_value_zero(n)) +
         kX * (charlier_at(n, Rational(-1)) - charlier_value_minus_one(n));
}

/// <C_m, C_n> - (a^n/n!) delta_mn.
inline Poly residual_orthogonality_classical(long m, long n) {
  Poly ip = inner_product_classical(charlier(m), charlier(n));
  if (m == n) ip -= pow(kA, static_cast<std::size_t>(n)) * Rational(1 / factorial(n));
  return ip;
}

}  // namespace charlier
