#pragma once

/**
 * @file suite.hpp
 * @brief Batch verification: enumerates every identity over index ranges,
 * runs the cases (in parallel), and collects a deterministic report.
 */

#include "charlier/charlier.hpp"
#include "charlier/diffeq.hpp"
#include "charlier/generalized.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace charlier {

inline constexpr const char* kToolName = "charlier";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Suite { Classical, Generalized, Diffeq, All };

inline std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "classical") return Suite::Classical;
  if (name == "generalized") return Suite::Generalized;
  if (name == "diffeq") return Suite::Diffeq;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Classical: return "classical";
    case Suite::Generalized: return "generalized";
    case Suite::Diffeq: return "diffeq";
    case Suite::All: return "all";
  }
  return "all";
}

struct SuiteSpec {
  Suite suite = Suite::All;
  long n_max = 12;
  long i_max = 12;
};

/// Outcome of one check. `residual` carries the nonzero polynomial(s) when an
/// identity fails.
struct CheckResult {
  bool passed = false;
  std::string residual;
  std::string detail;

  static CheckResult from_residual(const Poly& r) {
    if (r.is_zero()) return {true, {}, {}};
    return {false, to_string(r), {}};
  }
  static CheckResult from_residuals(const std::vector<Poly>& rs) {
    CheckResult out{true, {}, {}};
    for (const Poly& r : rs) {
      if (r.is_zero()) continue;
      out.passed = false;
      out.residual += (out.residual.empty() ? "" : "; ") + to_string(r);
    }
    return out;
  }
  static CheckResult from_condition(bool ok, std::string detail) {
    return {ok, {}, ok ? std::string{} : std::move(detail)};
  }
};

struct CaseRecord {
  std::string tag;
  std::vector<Rational> indices;
  bool passed = false;
  double elapsed_ms = 0.0;
  std::string residual;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  long n_max = 0;
  long i_max = 0;
  std::vector<CaseRecord> cases;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.passed; }));
  }
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
};

/// 0 when every case passed, 1 otherwise.
inline int exit_code(const VerificationReport& r) { return r.all_passed() ? 0 : 1; }

namespace detail {

struct PendingCase {
  std::string tag;
  std::vector<Rational> indices;
  std::function<CheckResult()> run;
};

inline std::vector<Rational> idx(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline void add_classical_cases(std::vector<PendingCase>& out, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    out.push_back({"def", idx({n}), [n] {
                     const Poly c = charlier(n);
                     return CheckResult::from_condition(
                         degree_in(c, VarId::X) == n && coeff_of(c, VarId::X, static_cast<std::size_t>(n)) ==
                                                            Poly(Rational(1 / factorial(n))),
                         "degree or leading coefficient mismatch");
                   }});
    out.push_back({"values", idx({n}), [n] { return CheckResult::from_residual(residual_special_values(n)); }});
    out.push_back({"lag", idx({n}), [n] { return CheckResult::from_residual(residual_laguerre_relation(n)); }});
    out.push_back({"diff", idx({n}), [n] { return CheckResult::from_residual(residual_lowering(n)); }});
    out.push_back({"nabla", idx({n}), [n] { return CheckResult::from_residual(residual_nabla_lowering(n)); }});
    out.push_back({"dv", idx({n}), [n] { return CheckResult::from_residual(residual_second_order(n)); }});
    for (const Rational& p : {Rational(-1), Rational(n), Rational(1, 2)}) {
      std::vector<Rational> key{Rational(n), p};
      out.push_back({"shift", key, [n, p] { return CheckResult::from_residual(residual_shift_identity(n, p)); }});
    }
    if (n >= 1) {
      out.push_back(
          {"value_diff", idx({n}), [n] { return CheckResult::from_residual(residual_value_difference(n)); }});
      out.push_back(
          {"inverse_T", idx({n}), [n] { return CheckResult::from_residuals(residual_inverse_matrix(n)); }});
    }
    for (long j = 0; j <= n; ++j)
      out.push_back({"cru", idx({n, j}), [n, j] { return CheckResult::from_residual(residual_convolution(n, j)); }});
    for (long m = 0; m <= n_max; ++m)
      out.push_back({"orth_classical", idx({m, n}),
                     [m, n] { return CheckResult::from_residual(residual_orthogonality_classical(m, n)); }});
    out.push_back({"moment", idx({n}), [n] {
                     const auto k = static_cast<std::size_t>(n);
                     const Poly m = moment(k);
                     bool ok = degree_in(m, VarId::A) == n;
                     for (const auto& [mono, c] : m.terms()) ok = ok && is_integer(c) && c > 0;
                     const Rational at_one = evaluate(m, Rational(0), Rational(1), Rational(0));
                     ok = ok && at_one == Rational(bell_number(k));
                     return CheckResult::from_condition(ok, "moment " + to_string(m) + " fails degree, sign or Bell check");
                   }});
  }
}

inline void add_generalized_cases(std::vector<PendingCase>& out, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    out.push_back({"Def", idx({n}), [n] {
                     const Poly g = gen_charlier(n).poly;
                     CheckResult r = CheckResult::from_residual(substitute(g, VarId::Nmass, Rational(0)) - charlier(n));
                     if (r.passed && (degree_in(g, VarId::X) != n || degree_in(g, VarId::Nmass) > 1))
                       r = CheckResult::from_condition(false, "degree in x or N out of range");
                     return r;
                   }});
    out.push_back({"alt_form", idx({n}), [n] { return CheckResult::from_residual(residual_alternative_form(n)); }});
    out.push_back(
        {"construction", idx({n}), [n] { return CheckResult::from_residuals(residual_construction_steps(n)); }});
    out.push_back({"norm", idx({n}), [n] {
                     const Poly norm = norm_general(n);
                     const Poly slice = substitute(norm, VarId::Nmass, Rational(0));
                     CheckResult r = CheckResult::from_residual(
                         slice - pow(kA, static_cast<std::size_t>(n)) * Rational(1 / factorial(n)));
                     if (!r.passed) return r;
                     for (const Rational& a : {Rational(1, 3), Rational(1), Rational(5, 2), Rational(7)})
                       for (const Rational& mass : {Rational(0), Rational(1, 2), Rational(3)})
                         if (evaluate(norm, Rational(0), a, mass) <= 0)
                           return CheckResult::from_condition(false, "norm not positive at a=" + to_string(a) +
                                                                         ", N=" + to_string(mass));
                     return r;
                   }});
    for (long m = 0; m < n; ++m)
      out.push_back({"ip", idx({m, n}), [m, n] { return CheckResult::from_residual(residual_orthogonality(m, n)); }});
  }
}

inline void add_diffeq_cases(std::vector<PendingCase>& out, const CoeffTable& table, long n_max, long i_max) {
  const CoeffTable* t = &table;
  for (long n = 0; n <= n_max; ++n) {
    out.push_back({"DV", idx({n}), [t, n] { return CheckResult::from_residual(apply_difference_equation(*t, n)); }});
    out.push_back({"DV_N", idx({n}), [t, n] {
                     const Poly expanded = difference_equation_expanded(*t, n);
                     std::vector<Poly> rs{expanded - apply_difference_equation(*t, n)};
                     for (std::size_t k = 0; k <= 2; ++k) rs.push_back(coeff_of(expanded, VarId::Nmass, k));
                     return CheckResult::from_residuals(rs);
                   }});
    out.push_back({"form0", idx({n}), [t, n] { return CheckResult::from_residual(residual_form0(*t, n)); }});
    out.push_back({"form1", idx({n}), [t, n] { return CheckResult::from_residual(residual_form1(*t, n)); }});
    out.push_back({"form2", idx({n}), [t, n] { return CheckResult::from_residual(residual_form2(*t, n)); }});
    out.push_back({"classical_inf", idx({n}),
                   [n] { return CheckResult::from_residual(residual_classical_infinite_order(n)); }});
    out.push_back(
        {"combined", idx({n}), [t, n] { return CheckResult::from_residual(residual_combined_equation(*t, n)); }});
    out.push_back(
        {"expansion", idx({n}), [n] { return CheckResult::from_residual(residual_expansion_identity(charlier(n))); }});
    if (n >= 1)
      out.push_back({"reduction", idx({n}), [n] { return CheckResult::from_residual(residual_reduction_lemma(n)); }});
    for (long i = 0; i <= std::min(n, i_max); ++i)
      for (long k = 0; k <= i; ++k)
        out.push_back({"mixed", idx({i, k, n}),
                       [i, k, n] { return CheckResult::from_residual(residual_mixed_leading(i, k, n)); }});
  }

  // Forward substitution is shared by the "unique" and "A0" cases.
  const long solve_max = std::max(n_max, i_max);
  auto solved = std::make_shared<std::pair<std::vector<Poly>, std::vector<Poly>>>(
      solve_coefficients_forward(static_cast<std::size_t>(solve_max)));
  for (long n = 0; n <= n_max; ++n)
    out.push_back({"A0", idx({n}), [t, n, solved] {
                     return CheckResult::from_residual(t->a0(n) - solved->first[static_cast<std::size_t>(n)]);
                   }});

  for (long i = 1; i <= i_max; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    out.push_back({"unique", idx({i}), [t, iu, solved] {
                     return CheckResult::from_residual(t->ai(iu) - solved->second[iu - 1]);
                   }});
    out.push_back({"Ai_structure", idx({i}), [t, iu] {
                     const DegreeReport r = degree_claims(*t, iu);
                     if (r.all()) return CheckResult{true, {}, {}};
                     CheckResult c{false, {}, "A_i structure:"};
                     if (!r.vanishes_at_zero) c.detail += " nonzero at x=0;";
                     if (!r.deg_x_ok) c.detail += " deg_x > i;";
                     if (!r.deg_a_ok) c.detail += " deg_a != 2i-2;";
                     if (!r.lead_a_ok) {
                       c.detail += " leading a-coefficient mismatch;";
                       c.residual = to_string(r.lead_a_residual);
                     }
                     if (!r.escalation_ok) c.detail += " degree escalation violated;";
                     return c;
                   }});
    out.push_back({"h", idx({i}), [t, iu] {
                     if (leading_x_coeff(*t, iu).is_zero()) return CheckResult::from_condition(false, "h_i is zero");
                     return CheckResult::from_residuals(residual_leading_x(*t, iu));
                   }});
    if (i < i_max)
      out.push_back({"h_coprime", idx({i, i + 1}), [t, iu] {
                       return CheckResult::from_condition(leading_pair_resultant(*t, iu) != 0,
                                                          "h_i and h_{i+1} share a nonzero root");
                     }});
  }
}

inline bool case_less(const CaseRecord& l, const CaseRecord& r) {
  if (l.tag != r.tag) return l.tag < r.tag;
  return std::lexicographical_compare(l.indices.begin(), l.indices.end(), r.indices.begin(), r.indices.end());
}

}  // namespace detail

struct RunOptions {
  /// Applied to the freshly built coefficient table before any case runs.
  std::function<CoeffTable(CoeffTable)> table_hook;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
};

inline VerificationReport run_verification(const SuiteSpec& spec, const RunOptions& options = {}) {
  if (spec.n_max < 0 || spec.i_max < 1) throw std::invalid_argument("need n_max >= 0 and i_max >= 1");

  const bool classical = spec.suite == Suite::Classical || spec.suite == Suite::All;
  const bool generalized = spec.suite == Suite::Generalized || spec.suite == Suite::All;
  const bool diffeq = spec.suite == Suite::Diffeq || spec.suite == Suite::All;

  std::optional<CoeffTable> table;
  if (diffeq) {
    table = CoeffTable::build(static_cast<std::size_t>(std::max(spec.n_max, spec.i_max)));
    if (options.table_hook) table = options.table_hook(std::move(*table));
  }

  std::vector<detail::PendingCase> pending;
  if (classical) detail::add_classical_cases(pending, spec.n_max);
  if (generalized) detail::add_generalized_cases(pending, spec.n_max);
  if (diffeq) detail::add_diffeq_cases(pending, *table, spec.n_max, spec.i_max);

  VerificationReport report{suite_name(spec.suite), spec.n_max, spec.i_max, {}};
  report.cases.resize(pending.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < pending.size(); k = next++) {
      auto& rec = report.cases[k];
      rec.tag = pending[k].tag;
      rec.indices = pending[k].indices;
      const auto start = std::chrono::steady_clock::now();
      try {
        CheckResult r = pending[k].run();
        rec.passed = r.passed;
        rec.residual = std::move(r.residual);
        rec.detail = std::move(r.detail);
      } catch (const std::exception& e) {
        rec.passed = false;
        rec.detail = std::string("exception: ") + e.what();
      }
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned n_threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  pool.clear();

  std::sort(report.cases.begin(), report.cases.end(), detail::case_less);
  return report;
}

inline nlohmann::ordered_json index_to_json(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_si();
  return r.get_str();
}

/// Report as JSON. With `include_timing` false the output is byte-stable.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timing = true) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["i_max"] = r.i_max;
  j["summary"] = {{"total", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json row;
    row["tag"] = c.tag;
    auto& ix = row["indices"] = nlohmann::ordered_json::array();
    for (const auto& v : c.indices) ix.push_back(index_to_json(v));
    row["status"] = c.passed ? "pass" : "fail";
    if (include_timing) row["elapsed_ms"] = c.elapsed_ms;
    if (!c.residual.empty()) row["residual"] = c.residual;
    if (!c.detail.empty()) row["detail"] = c.detail;
    cases.push_back(std::move(row));
  }
  return j;
}

}  // namespace charlier
