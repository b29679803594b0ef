// Command-line front end: coefficient tables, polynomial listings, moment
// tables, and batch verification reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "charlier/charlier.hpp"
#include "charlier/diffeq.hpp"
#include "charlier/generalized.hpp"
#include "charlier/render.hpp"
#include "charlier/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of classical and point-mass Charlier polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(charlier::kToolVersion));

  std::string out_path;

  long coeff_i_max = 12;
  std::string format = "json";
  auto* coeffs = app.add_subcommand("coeffs", "Coefficients A_0(n,a) and A_i(a,x) of the difference equation");
  coeffs->add_option("--i-max", coeff_i_max, "Largest coefficient index")->check(CLI::PositiveNumber);
  coeffs->add_option("--format", format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  coeffs->add_option("--out", out_path, "Write to file instead of standard output");

  std::string family;
  long degree = 0;
  auto* poly = app.add_subcommand("poly", "Print a classical or generalized Charlier polynomial");
  poly->add_option("family", family, "charlier or generalized")
      ->required()
      ->check(CLI::IsMember({"charlier", "generalized"}));
  poly->add_option("n", degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--out", out_path, "Write to file instead of standard output");

  std::string suite = "all";
  long n_max = 12;
  long i_max = 12;
  unsigned threads = 0;
  bool mutate_a1 = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  verify->add_option("--suite", suite, "classical, generalized, diffeq or all")
      ->check(CLI::IsMember({"classical", "generalized", "diffeq", "all"}));
  verify->add_option("--n-max", n_max, "Largest polynomial degree checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--i-max", i_max, "Largest coefficient index checked")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  verify->add_option("--out", out_path, "Write to file instead of standard output");
  // Test fixture: replaces A_1 = -x by +x so the report must show failures.
  verify->add_flag("--fixture-mutate-a1", mutate_a1)->group("");

  long max_k = 12;
  auto* moments = app.add_subcommand("moments", "Moments of the Poisson weight as polynomials in a");
  moments->add_option("--max-k", max_k, "Largest moment order")->check(CLI::NonNegativeNumber);
  moments->add_option("--out", out_path, "Write to file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*coeffs) {
    const auto table = charlier::CoeffTable::build(static_cast<std::size_t>(coeff_i_max));
    return emit(charlier::render_coeffs(table, *charlier::parse_format(format)), out_path);
  }
  if (*poly) {
    const charlier::Poly p =
        family == "charlier" ? charlier::charlier(degree) : charlier::gen_charlier(degree).poly;
    return emit(charlier::to_string(p) + "\n", out_path);
  }
  if (*moments) return emit(charlier::render_moments(static_cast<std::size_t>(max_k)), out_path);

  charlier::SuiteSpec spec{*charlier::parse_suite(suite), n_max, i_max};
  charlier::RunOptions options;
  options.threads = threads;
  if (mutate_a1)
    options.table_hook = [](charlier::CoeffTable t) { return t.with_override(1, charlier::kX); };
  const auto report = charlier::run_verification(spec, options);
  if (const int rc = emit(charlier::report_to_json(report).dump(2) + "\n", out_path); rc != kExitOk) return rc;
  return charlier::exit_code(report) == 0 ? kExitOk : kExitFailure;
}
