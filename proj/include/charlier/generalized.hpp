#pragma once

/**
 * @file generalized.hpp
 * @brief Charlier polynomials orthogonal for the Poisson weight plus a point
 * mass N at x = 0:
 *
 *   <f, g> = sum_x e^{-a} a^x / x! f(x) g(x) + N f(0) g(0).
 *
 * C_n^{a,N}(x) = A_n C_n(x) + B_n C_n(x-1) with
 * A_n = 1 + N (-1)^n C_n(-1) and B_n = -N (-1)^n C_n(0).
 */

#include "charlier/charlier.hpp"

#include <array>
#include <stdexcept>

namespace charlier {

struct GenCharlier {
  long n = 0;
  Poly poly;
};

inline Poly gen_coeff_A(long n) { return Poly(1) + kN * charlier_at(n, Rational(-1)) * sign_power(n); }
inline Poly gen_coeff_B(long n) { return -(kN * charlier_at(n, Rational(0)) * sign_power(n)); }

inline GenCharlier gen_charlier(long n) {
  if (n < 0) throw std::invalid_argument("gen_charlier: n must be >= 0");
  return {n, gen_coeff_A(n) * charlier(n) + gen_coeff_B(n) * charlier_shifted(n, Rational(-1))};
}

/// [1 + N(-1)^{n-1} C_{n-1}(-1)] C_n(x) + N(-1)^n C_n(0) Delta C_n(x-1).
inline Poly gen_charlier_alternative(long n) {
  const Poly head = Poly(1) + kN * charlier_at(n - 1, Rational(-1)) * sign_power(n - 1);
  const Poly tail = kN * charlier_at(n, Rational(0)) * sign_power(n) * shift_x(delta(charlier(n)), Rational(-1));
  return head * charlier(n) + tail;
}

inline Poly residual_alternative_form(long n) { return gen_charlier_alternative(n) - gen_charlier(n).poly; }
inline bool verify_alternative_form(long n) { return residual_alternative_form(n).is_zero(); }

inline Poly inner_product_general(const Poly& p, const Poly& q) {
  return inner_product_classical(p, q) +
         kN * substitute(p, VarId::X, Rational(0)) * substitute(q, VarId::X, Rational(0));
}

inline Poly residual_orthogonality(long m, long n) {
  if (m < 0 || m >= n) throw std::invalid_argument("orthogonality: need 0 <= m < n");
  return inner_product_general(gen_charlier(m).poly, gen_charlier(n).poly);
}
inline bool verify_orthogonality(long m, long n) { return residual_orthogonality(m, n).is_zero(); }

/// Residuals of the construction: the vanishing of <x^{j+1}, C_n^{a,N}> for
/// j <= n-2, the classical sum sum_x w(x) C_n(x-1) = (-1)^n, and the linear
/// relation N A_n C_n(0) + [(-1)^n + N C_n(-1)] B_n = 0 (n >= 1).
/// Each residual is zero on success; n = 0 yields none.
inline std::vector<Poly> residual_construction_steps(long n) {
  if (n < 0) throw std::invalid_argument("construction steps: n must be >= 0");
  std::vector<Poly> out;
  const Poly gen = gen_charlier(n).poly;
  for (long j = 0; j + 2 <= n; ++j)
    out.push_back(inner_product_general(kX * pow(kX, static_cast<std::size_t>(j)), gen));
  if (n >= 1) {
    out.push_back(inner_product_classical(Poly(1), charlier_shifted(n, Rational(-1))) - Poly(sign_power(n)));
    out.push_back(kN * gen_coeff_A(n) * charlier_at(n, Rational(0)) +
                  (Poly(sign_power(n)) + kN * charlier_at(n, Rational(-1))) * gen_coeff_B(n));
  }
  std::erase_if(out, [](const Poly& p) { return p.is_zero(); });
  return out;
}
inline bool verify_construction_steps(long n) { return residual_construction_steps(n).empty(); }

inline Poly norm_general(long n) {
  const Poly g = gen_charlier(n).poly;
  return inner_product_general(g, g);
}

}  // namespace charlier
