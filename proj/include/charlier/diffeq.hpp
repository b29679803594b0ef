#pragma once

/**
 * @file diffeq.hpp
 * @brief The infinite-order difference equation satisfied by the generalized
 * Charlier polynomials,
 *
 *   N sum_{i>=0} A_i(x) Delta^i y + x Delta nabla y + (a - x) Delta y + n y = 0,
 *
 * its coefficients A_0(n, a) and A_i(a, x), and exact checks of the
 * intermediate identities and structural properties of those coefficients.
 *
 * Operator series are only ever applied to polynomials. Delta lowers the
 * x-degree by exactly one, so a sum over Delta^i applied to a polynomial of
 * x-degree d is exact once truncated at i = d.
 */

#include "charlier/charlier.hpp"
#include "charlier/generalized.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charlier {

// ---------------------------------------------------------------------------
// Operators.

struct DiffTerm {
  Poly coeff;
  std::size_t delta_order = 0;
  std::size_t nabla_order = 0;
};

/// Finite combination of coeff * Delta^k nabla^m, one term per order pair.
class DiffOperator {
 public:
  DiffOperator() = default;

  DiffOperator& add(const Poly& coeff, std::size_t delta_order, std::size_t nabla_order = 0) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->delta_order == delta_order && it->nabla_order == nabla_order) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
        return *this;
      }
    }
    if (!coeff.is_zero()) terms_.push_back({coeff, delta_order, nabla_order});
    return *this;
  }

  const std::vector<DiffTerm>& terms() const { return terms_; }

 private:
  std::vector<DiffTerm> terms_;
};

/// Terms whose total order exceeds deg_x(y) annihilate y and are skipped.
inline Poly apply_operator(const DiffOperator& op, const Poly& y) {
  const long deg = degree_in(y, VarId::X);
  Poly out;
  for (const auto& t : op.terms()) {
    if (static_cast<long>(t.delta_order + t.nabla_order) > deg) continue;
    out += t.coeff * delta_pow(nabla_pow(y, t.nabla_order), t.delta_order);
  }
  return out;
}

/// x Delta nabla + (a - x) Delta + n.
inline DiffOperator classical_operator(long n) {
  DiffOperator op;
  op.add(kX, 1, 1).add(kA - kX, 1).add(Poly(Rational(n)), 0);
  return op;
}

// ---------------------------------------------------------------------------
// Coefficients.

/// A_0(n, a) = (-1)^{n-1} C_{n-1}(-2); zero for n = 0.
inline Poly coeff_A0(long n) {
  if (n < 0) throw std::invalid_argument("coeff_A0: n must be >= 0");
  return charlier_at(n - 1, Rational(-2)) * sign_power(n - 1);
}

/// A_i(a, x) = sum_{k=1}^{i} (-1)^k C_{i-k}^{(-a)}(-x+1)
///             [C_k(-1) C_k(x-2) - C_k(-2) C_k(x-1)].
inline Poly coeff_A(long i) {
  if (i < 1) throw std::invalid_argument("coeff_A: i must be >= 1");
  Poly out;
  for (long k = 1; k <= i; ++k) {
    // C^{(-a)}(-(x-1)) is the reflected polynomial evaluated at x-1.
    const Poly reflected = shift_x(charlier_reflected(i - k), Rational(-1));
    const Poly ck = charlier(k);
    const Poly bracket = charlier_at(k, Rational(-1)) * shift_x(ck, Rational(-2)) -
                         charlier_at(k, Rational(-2)) * shift_x(ck, Rational(-1));
    out += reflected * bracket * sign_power(k);
  }
  return out;
}

/// A_0, A_1, ... computed once up to a bound; immutable afterwards.
class CoeffTable {
 public:
  struct Entry {
    Poly poly;
    long deg_x = -1;
    long deg_a = -1;
    Poly lead_x;  // coefficient of x^i
    Poly lead_a;  // coefficient of a^{deg_a}
  };

  static CoeffTable build(std::size_t i_max) {
    CoeffTable t;
    for (std::size_t n = 0; n <= i_max; ++n) t.a0_.push_back(coeff_A0(static_cast<long>(n)));
    for (std::size_t i = 1; i <= i_max; ++i) t.ai_.push_back(make_entry(i, coeff_A(static_cast<long>(i))));
    return t;
  }

  /// Copy with A_i replaced; used to exercise failure reporting.
  CoeffTable with_override(std::size_t i, Poly replacement) const {
    CoeffTable t = *this;
    t.ai_.at(i - 1) = make_entry(i, std::move(replacement));
    return t;
  }

  std::size_t i_max() const { return ai_.size(); }
  const Poly& a0(long n) const { return a0_.at(static_cast<std::size_t>(n)); }
  const Poly& ai(std::size_t i) const { return entry(i).poly; }
  const Entry& entry(std::size_t i) const {
    if (i < 1 || i > ai_.size()) throw std::out_of_range("CoeffTable: index outside the built range");
    return ai_[i - 1];
  }

 private:
  static Entry make_entry(std::size_t i, Poly p) {
    Entry e;
    e.deg_x = degree_in(p, VarId::X);
    e.deg_a = degree_in(p, VarId::A);
    e.lead_x = coeff_of(p, VarId::X, i);
    e.lead_a = e.deg_a < 0 ? Poly() : coeff_of(p, VarId::A, static_cast<std::size_t>(e.deg_a));
    e.poly = std::move(p);
    return e;
  }

  std::vector<Poly> a0_;
  std::vector<Entry> ai_;
};

namespace detail {

inline void require_range(const CoeffTable& table, long n) {
  if (n < 0) throw std::invalid_argument("degree index must be >= 0");
  if (static_cast<std::size_t>(n) > table.i_max())
    throw std::out_of_range("coefficient table too small for requested degree");
}

/// sum_{i=0}^{deg y} A_i Delta^i y, with A_0 = A_0(n).
inline Poly coefficient_series(const CoeffTable& table, long n, const Poly& y) {
  Poly sum = table.a0(n) * y;
  Poly d = y;
  const long deg = degree_in(y, VarId::X);
  for (long i = 1; i <= deg; ++i) {
    d = delta(d);
    sum += table.ai(static_cast<std::size_t>(i)) * d;
  }
  return sum;
}

/// x sum_{i=1}^{deg y} (-1)^i Delta^i y.
inline Poly alternating_series(const Poly& y) {
  Poly sum;
  Poly d = y;
  const long deg = degree_in(y, VarId::X);
  for (long i = 1; i <= deg; ++i) {
    d = delta(d);
    sum += d * sign_power(i);
  }
  return kX * sum;
}

inline Poly form1_rhs(long n) {
  return charlier_at(n, Rational(0)) * charlier_shifted(n - 1, Rational(-2)) * sign_power(n - 1);
}

inline Poly form2_rhs(long n) {
  return charlier_at(n, Rational(-1)) * charlier_shifted(n - 1, Rational(-2)) * sign_power(n - 1);
}

/// Exact quotient of p by a single monomial term; throws if not divisible.
inline Poly divide_by_term(const Poly& p, const Poly& divisor) {
  if (divisor.size() != 1) throw std::invalid_argument("divide_by_term: divisor must be a single term");
  const auto& [dm, dc] = *divisor.terms().begin();
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial q;
    for (VarId v : kAllVars) {
      if (m[v] < dm[v]) throw std::domain_error("divide_by_term: not divisible");
      q[v] = m[v] - dm[v];
    }
    out.add_term(q, Rational(c / dc));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The equation and its intermediate identities.

inline DiffOperator difference_operator(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  DiffOperator op = classical_operator(n);
  op.add(kN * table.a0(n), 0);
  for (long i = 1; i <= n; ++i) op.add(kN * table.ai(static_cast<std::size_t>(i)), static_cast<std::size_t>(i));
  return op;
}

/// Left-hand side of the equation applied to C_n^{a,N}; zero when it holds.
inline Poly apply_difference_equation(const CoeffTable& table, long n) {
  return apply_operator(difference_operator(table, n), gen_charlier(n).poly);
}

/// The left-hand side before simplification, written as a polynomial in N:
///   N [1 + N(-1)^n C_n(-1)] S(x) - N^2 (-1)^n C_n(0) S(x-1)
///   - N (-1)^n C_n(0) [a C_n(x) + (n-a-x) C_n(x-1) + x C_n(x-2)]
/// with S(t) = sum A_i Delta^i C_n(t).
inline Poly difference_equation_expanded(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  const Poly cn = charlier(n);
  const Poly cn1 = shift_x(cn, Rational(-1));
  const Poly at0 = charlier_at(n, Rational(0));
  const Poly atm1 = charlier_at(n, Rational(-1));
  const Rational sgn = sign_power(n);
  const Poly s0 = detail::coefficient_series(table, n, cn);
  const Poly s1 = detail::coefficient_series(table, n, cn1);
  const Poly shifted_classical =
      kA * cn + (Poly(Rational(n)) - kA - kX) * cn1 + kX * shift_x(cn, Rational(-2));
  return kN * (Poly(1) + kN * atm1 * sgn) * s0 - kN * kN * at0 * s1 * sgn - kN * at0 * shifted_classical * sgn;
}

inline Poly residual_form1(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  return detail::coefficient_series(table, n, charlier(n)) - detail::form1_rhs(n);
}
inline Poly residual_form2(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  return detail::coefficient_series(table, n, charlier_shifted(n, Rational(-1))) - detail::form2_rhs(n);
}
inline Poly residual_form0(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  return charlier_at(n, Rational(-1)) * detail::coefficient_series(table, n, charlier(n)) -
         charlier_at(n, Rational(0)) * detail::coefficient_series(table, n, charlier_shifted(n, Rational(-1)));
}
inline bool verify_form0(const CoeffTable& t, long n) { return residual_form0(t, n).is_zero(); }
inline bool verify_form1(const CoeffTable& t, long n) { return residual_form1(t, n).is_zero(); }
inline bool verify_form2(const CoeffTable& t, long n) { return residual_form2(t, n).is_zero(); }

/// a C_n(x) + (n-a-x) C_n(x-1) + x C_n(x-2) + C_{n-1}(x-2).
inline Poly residual_reduction_lemma(long n) {
  if (n < 1) throw std::invalid_argument("reduction lemma: n must be >= 1");
  const Poly cn = charlier(n);
  return kA * cn + (Poly(Rational(n)) - kA - kX) * shift_x(cn, Rational(-1)) + kX * shift_x(cn, Rational(-2)) +
         charlier_shifted(n - 1, Rational(-2));
}
inline bool verify_reduction_lemma(long n) { return residual_reduction_lemma(n).is_zero(); }

/// y(x-1) - sum_{i=0}^{deg y} (-1)^i Delta^i y(x).
inline Poly residual_expansion_identity(const Poly& y) {
  Poly sum = y;
  Poly d = y;
  const long deg = degree_in(y, VarId::X);
  for (long i = 1; i <= deg; ++i) {
    d = delta(d);
    sum += d * sign_power(i);
  }
  return shift_x(y, Rational(-1)) - sum;
}
inline bool verify_expansion_identity(const Poly& y) { return residual_expansion_identity(y).is_zero(); }

/// x sum (-1)^i Delta^i y + a Delta y + n y with y = C_n.
inline Poly residual_classical_infinite_order(long n) {
  const Poly y = charlier(n);
  return detail::alternating_series(y) + kA * delta(y) + y * Rational(n);
}
inline bool verify_classical_infinite_order(long n) { return residual_classical_infinite_order(n).is_zero(); }

/// N sum A_i Delta^i y + x sum (-1)^i Delta^i y + a Delta y + n y with y = C_n^{a,N}.
inline Poly residual_combined_equation(const CoeffTable& table, long n) {
  detail::require_range(table, n);
  const Poly y = gen_charlier(n).poly;
  return kN * detail::coefficient_series(table, n, y) + detail::alternating_series(y) + kA * delta(y) +
         y * Rational(n);
}
inline bool verify_combined_equation(const CoeffTable& t, long n) { return residual_combined_equation(t, n).is_zero(); }

// ---------------------------------------------------------------------------
// Structure of the coefficients.

/// h_i, the coefficient of x^i in A_i.
inline Poly leading_x_coeff(const CoeffTable& table, std::size_t i) { return table.entry(i).lead_x; }

/// The closed forms of h_i: via C_{i-1}(i-2), via L_{i-1}^{(-1)}(a), and for
/// i >= 2 via -(a/(i-1)) C_{i-2}(i-1) and -(a/(i-1)) L_{i-2}^{(1)}(a).
inline std::vector<Poly> leading_x_closed_forms(long i) {
  if (i < 1) throw std::invalid_argument("leading_x_closed_forms: i must be >= 1");
  const Rational scale = sign_power(i) / factorial(i);
  std::vector<Poly> forms{charlier_at(i - 1, Rational(i - 2)) * scale,
                          laguerre(i - 1, Poly(-1), VarId::A) * scale};
  if (i >= 2) {
    const Poly factor = kA * Rational(Rational(-1) / Rational(i - 1)) * scale;
    forms.push_back(factor * charlier_at(i - 2, Rational(i - 1)));
    forms.push_back(factor * laguerre(i - 2, Poly(1), VarId::A));
  }
  return forms;
}

/// Differences h_i - form for every closed form, plus a flag for h_i = 0.
inline std::vector<Poly> residual_leading_x(const CoeffTable& table, std::size_t i) {
  const Poly h = leading_x_coeff(table, i);
  std::vector<Poly> out;
  for (const Poly& f : leading_x_closed_forms(static_cast<long>(i)))
    if (Poly r = h - f; !r.is_zero()) out.push_back(std::move(r));
  return out;
}

struct DegreeReport {
  bool deg_a_ok = false;        // deg_a A_i = 2i - 2
  bool lead_a_ok = false;       // a^{2i-2} coefficient = (-1)^i x / (i! (i-1)!)
  bool deg_x_ok = false;        // deg_x A_i <= i
  bool escalation_ok = true;    // deg_x A_i < i implies deg_x A_{i+1} = i + 1
  bool vanishes_at_zero = false;
  Poly lead_a_residual;

  bool all() const { return deg_a_ok && lead_a_ok && deg_x_ok && escalation_ok && vanishes_at_zero; }
};

/// Escalation is checked only when A_{i+1} is in the table.
inline DegreeReport degree_claims(const CoeffTable& table, std::size_t i) {
  const auto& e = table.entry(i);
  const long il = static_cast<long>(i);
  DegreeReport r;
  r.deg_a_ok = e.deg_a == 2 * il - 2;
  r.lead_a_residual = coeff_of(e.poly, VarId::A, static_cast<std::size_t>(2 * il - 2)) -
                      kX * Rational(sign_power(il) / (factorial(il) * factorial(il - 1)));
  r.lead_a_ok = r.lead_a_residual.is_zero();
  r.deg_x_ok = e.deg_x <= il;
  if (e.deg_x < il && i + 1 <= table.i_max()) r.escalation_ok = table.entry(i + 1).deg_x == il + 1;
  r.vanishes_at_zero = substitute(e.poly, VarId::X, Rational(0)).is_zero();
  return r;
}
inline bool verify_degree_claims(const CoeffTable& table, std::size_t i) { return degree_claims(table, i).all(); }

/// Compares the x^{n-i} coefficients of Delta^k nabla^{i-k} C_n and Delta^i C_n.
inline Poly residual_mixed_leading(long i, long k, long n) {
  if (k < 0 || k > i || i > n) throw std::invalid_argument("mixed leading: need 0 <= k <= i <= n");
  const Poly cn = charlier(n);
  const auto power = static_cast<std::size_t>(n - i);
  const Poly mixed = delta_pow(nabla_pow(cn, static_cast<std::size_t>(i - k)), static_cast<std::size_t>(k));
  const Poly pure = delta_pow(cn, static_cast<std::size_t>(i));
  return coeff_of(mixed, VarId::X, power) - coeff_of(pure, VarId::X, power);
}
inline bool verify_mixed_leading(long i, long k, long n) { return residual_mixed_leading(i, k, n).is_zero(); }

/// Re-derives the coefficients from the (x-1)-shifted identity alone:
/// A_0(n) from its value at x = 0, then A_1, A_2, ... by forward
/// substitution through the unitriangular system
///   sum_{i=1}^{n} A_i C_{n-i}(x-1) = (-1)^{n-1} C_n(-1) C_{n-1}(x-2) - A_0(n) C_n(x-1).
/// Returns {A_0(0..i_max), A_1..A_{i_max}}.
inline std::pair<std::vector<Poly>, std::vector<Poly>> solve_coefficients_forward(std::size_t i_max) {
  std::vector<Poly> a0;
  std::vector<Poly> ai;
  for (std::size_t n = 0; n <= i_max; ++n) {
    const long nl = static_cast<long>(n);
    // At x = 0 every A_i (i >= 1) vanishes, leaving A_0 C_n(0) = rhs(0).
    a0.push_back(detail::divide_by_term(substitute(detail::form1_rhs(nl), VarId::X, Rational(0)),
                                        charlier_at(nl, Rational(0))));
    if (n == 0) continue;
    Poly rhs = detail::form2_rhs(nl) - a0.back() * charlier_shifted(nl, Rational(-1));
    for (std::size_t i = 1; i < n; ++i) rhs -= ai[i - 1] * charlier_shifted(nl - static_cast<long>(i), Rational(-1));
    ai.push_back(std::move(rhs));  // diagonal entry C_0(x-1) = 1
  }
  return {std::move(a0), std::move(ai)};
}

// ---------------------------------------------------------------------------
// Univariate helpers for the common-root check on consecutive h_i.

/// Coefficients in ascending powers of v; requires p to depend on v only.
inline std::vector<Rational> univariate_coefficients(const Poly& p, VarId v) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(degree_in(p, v), 0)) + 1, Rational(0));
  for (const auto& [m, coef] : p.terms()) {
    for (VarId w : kAllVars)
      if (w != v && m[w] != 0) throw std::invalid_argument("univariate_coefficients: polynomial is multivariate");
    c[m[v]] = coef;
  }
  return c;
}

/// Resultant of two univariate polynomials (ascending coefficients) as the
/// determinant of their Sylvester matrix.
inline Rational resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = p[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = q[n - j];

  Rational det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && s[pivot][col] == 0) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      const Rational f = s[r][col] / s[col][col];
      for (std::size_t j = col; j < size; ++j) s[r][j] -= f * s[col][j];
    }
  }
  return det;
}

/// Removes the largest power of v dividing p.
inline Poly strip_power(const Poly& p, VarId v) {
  if (p.is_zero()) return p;
  std::size_t low = SIZE_MAX;
  for (const auto& [m, c] : p.terms()) low = std::min(low, m[v]);
  Monomial d;
  d[v] = low;
  return detail::divide_by_term(p, Poly::monomial(Rational(1), d));
}

/// Resultant in a of h_i and h_{i+1} after removing their common root a = 0,
/// which lies outside a > 0. Nonzero means no shared positive root.
inline Rational leading_pair_resultant(const CoeffTable& table, std::size_t i) {
  const Poly h = strip_power(leading_x_coeff(table, i), VarId::A);
  const Poly g = strip_power(leading_x_coeff(table, i + 1), VarId::A);
  return resultant(univariate_coefficients(h, VarId::A), univariate_coefficients(g, VarId::A));
}

}  // namespace charlier
