#pragma once

/**
 * @file poly.hpp
 * @brief Sparse polynomials over Q in the three fixed indeterminates x, a, N,
 * together with the shift and difference calculus in x.
 *
 * Terms are kept in a map ordered graded-lexicographically (descending), with
 * the variable order x > a > N. Zero coefficients are never stored, so two
 * polynomials are equal exactly when their term maps are equal.
 */

#include "charlier/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace charlier {

enum class VarId : std::size_t { X = 0, A = 1, Nmass = 2 };

inline constexpr std::array<VarId, 3> kAllVars = {VarId::X, VarId::A, VarId::Nmass};

struct Monomial {
  std::array<std::size_t, 3> exp{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(std::size_t ex, std::size_t ea, std::size_t en) : exp{ex, ea, en} {}

  constexpr std::size_t operator[](VarId v) const { return exp[static_cast<std::size_t>(v)]; }
  constexpr std::size_t& operator[](VarId v) { return exp[static_cast<std::size_t>(v)]; }

  constexpr std::size_t total() const { return exp[0] + exp[1] + exp[2]; }
  constexpr bool is_one() const { return total() == 0; }

  // Graded first, then lexicographic with x most significant.
  constexpr std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = total() <=> o.total(); c != 0) return c;
    return exp <=> o.exp;
  }
  constexpr bool operator==(const Monomial&) const = default;

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    return {l.exp[0] + r.exp[0], l.exp[1] + r.exp[1], l.exp[2] + r.exp[2]};
  }
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Poly() = default;
  Poly(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT: implicit by design of ring literals
  Poly(long c) : Poly(Rational(c)) {}                    // NOLINT
  Poly(int c) : Poly(Rational(c)) {}                     // NOLINT

  static Poly var(VarId v, std::size_t e = 1) {
    Monomial m;
    m[v] = e;
    return monomial(Rational(1), m);
  }
  static Poly monomial(const Rational& c, const Monomial& m) {
    Poly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator-(Poly p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
  friend Poly operator*(const Poly& l, const Poly& r) {
    Poly out;
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, Rational(cl * cr));
    return out;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

inline const Poly kX = Poly::var(VarId::X);
inline const Poly kA = Poly::var(VarId::A);
inline const Poly kN = Poly::var(VarId::Nmass);

inline Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

inline Poly pow(const Poly& p, std::size_t e) {
  Poly r(1);
  for (std::size_t i = 0; i < e; ++i) r = r * p;
  return r;
}

/// Largest exponent of v, or -1 for the zero polynomial.
inline long degree_in(const Poly& p, VarId v) {
  if (p.is_zero()) return -1;
  std::size_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
  return static_cast<long>(d);
}

/// Coefficient of v^k, as a polynomial in the remaining variables.
inline Poly coeff_of(const Poly& p, VarId v, std::size_t k) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != k) continue;
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

inline Poly substitute(const Poly& p, VarId v, const Rational& r) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(rest, Rational(c * pow(r, m[v])));
  }
  return out;
}

/// Replaces v by -v.
inline Poly negate_var(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, m[v] % 2 == 0 ? c : Rational(-c));
  return out;
}

/// Replaces x by x + shift, expanding binomially.
inline Poly shift_x(const Poly& p, const Rational& shift) {
  if (shift == 0) return p;
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    const std::size_t e = m[VarId::X];
    Rational binom(1);
    Rational shift_pow = pow(shift, e);
    // x^e -> sum_j binom(e, j) shift^(e-j) x^j, walking j upward.
    Rational inv_shift = 1 / shift;
    for (std::size_t j = 0; j <= e; ++j) {
      Monomial t = m;
      t[VarId::X] = j;
      out.add_term(t, Rational(c * binom * shift_pow));
      binom = binom * Rational(static_cast<long>(e - j)) / Rational(static_cast<long>(j + 1));
      shift_pow *= inv_shift;
    }
  }
  return out;
}

/// Forward difference f(x+1) - f(x).
inline Poly delta(const Poly& p) { return shift_x(p, Rational(1)) - p; }

/// Backward difference f(x) - f(x-1).
inline Poly nabla(const Poly& p) { return p - shift_x(p, Rational(-1)); }

inline Poly delta_pow(Poly p, std::size_t k) {
  for (std::size_t i = 0; i < k && !p.is_zero(); ++i) p = delta(p);
  return p;
}

inline Poly nabla_pow(Poly p, std::size_t k) {
  for (std::size_t i = 0; i < k && !p.is_zero(); ++i) p = nabla(p);
  return p;
}

/// Evaluates at a point; all three variables are fixed.
inline Rational evaluate(const Poly& p, const Rational& x, const Rational& a, const Rational& n) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms())
    sum += c * pow(x, m[VarId::X]) * pow(a, m[VarId::A]) * pow(n, m[VarId::Nmass]);
  return sum;
}

namespace detail {

// Factors print in ASCII order of their names: N, a, x.
inline constexpr std::array<std::pair<VarId, const char*>, 3> kPrintOrder = {
    {{VarId::Nmass, "N"}, {VarId::A, "a"}, {VarId::X, "x"}}};

template <typename FactorFn, typename CoeffFn>
std::string render(const Poly& p, const char* mul, FactorFn factor, CoeffFn coeff) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> parts;
    if (m.is_one() || mag != 1) parts.push_back(coeff(mag));
    for (const auto& [v, name] : kPrintOrder)
      if (m[v] > 0) parts.push_back(factor(name, m[v]));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? mul : "") << parts[i];
  }
  return os.str();
}

}  // namespace detail

/// Canonical text, e.g. "-1/2*a*x^2 + 1/2*a^2*x + 3/2*a*x + x".
inline std::string to_string(const Poly& p) {
  return detail::render(
      p, "*",
      [](const char* name, std::size_t e) {
        return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
      },
      [](const Rational& r) { return r.get_str(); });
}

inline std::string to_latex(const Poly& p) {
  return detail::render(
      p, " ",
      [](const char* name, std::size_t e) {
        return e == 1 ? std::string(name) : std::string(name) + "^{" + std::to_string(e) + "}";
      },
      [](const Rational& r) {
        if (is_integer(r)) return r.get_num().get_str();
        return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
      });
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace charlier
