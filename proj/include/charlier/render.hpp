#pragma once

// Tabular renderings of the difference-equation coefficients and the moment
// table for the command-line front end.

#include "charlier/charlier.hpp"
#include "charlier/diffeq.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace charlier {

enum class TableFormat { Json, Csv, Latex };

inline std::optional<TableFormat> parse_format(const std::string& name) {
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  if (name == "latex") return TableFormat::Latex;
  return std::nullopt;
}

/// A_0(n, a) for 0 <= n <= max_i and A_i(a, x) for 1 <= i <= max_i.
inline std::string render_coeffs(const CoeffTable& table, TableFormat format) {
  const std::size_t max_i = table.i_max();
  std::ostringstream os;
  switch (format) {
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      auto& a0 = j["a0"] = nlohmann::ordered_json::array();
      for (std::size_t n = 0; n <= max_i; ++n)
        a0.push_back({{"n", n}, {"poly", to_string(table.a0(static_cast<long>(n)))}});
      auto& ai = j["ai"] = nlohmann::ordered_json::array();
      for (std::size_t i = 1; i <= max_i; ++i) {
        const auto& e = table.entry(i);
        ai.push_back({{"i", i}, {"poly", to_string(e.poly)}, {"deg_x", e.deg_x}, {"deg_a", e.deg_a}});
      }
      os << j.dump(2) << '\n';
      break;
    }
    case TableFormat::Csv: {
      os << "kind,index,poly,deg_x,deg_a\n";
      for (std::size_t n = 0; n <= max_i; ++n) {
        const Poly& p = table.a0(static_cast<long>(n));
        os << "a0," << n << ',' << to_string(p) << ',' << degree_in(p, VarId::X) << ',' << degree_in(p, VarId::A)
           << '\n';
      }
      for (std::size_t i = 1; i <= max_i; ++i) {
        const auto& e = table.entry(i);
        os << "ai," << i << ',' << to_string(e.poly) << ',' << e.deg_x << ',' << e.deg_a << '\n';
      }
      break;
    }
    case TableFormat::Latex: {
      os << "\\begin{align*}\n";
      for (std::size_t n = 0; n <= max_i; ++n)
        os << "  A_{0}(" << n << ", a) &= " << to_latex(table.a0(static_cast<long>(n))) << " \\\\\n";
      for (std::size_t i = 1; i <= max_i; ++i)
        os << "  A_{" << i << "}(a, x) &= " << to_latex(table.ai(i)) << (i == max_i ? "\n" : " \\\\\n");
      os << "\\end{align*}\n";
      break;
    }
  }
  return os.str();
}

inline std::string render_moments(std::size_t max_k) {
  const MomentTable moments(max_k);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k <= max_k; ++k) rows.push_back({{"k", k}, {"poly", to_string(moments[k])}});
  return rows.dump(2) + "\n";
}

}  // namespace charlier
