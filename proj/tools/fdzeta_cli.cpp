// Command-line front end: single evaluations, eta-grid tables against the
// quadrature reference, and reproduction of the embedded comparison table.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 reproduction
// mismatch.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdzeta/fdzeta.hpp"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;
constexpr int exit_mismatch = 3;

std::vector<double> parse_eta_list(const std::string& text) {
  std::vector<double> etas;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed eta list entry '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size())
      throw std::invalid_argument("malformed eta list entry '" + token + "'");
    etas.push_back(value);
  }
  if (etas.empty()) throw std::invalid_argument("eta list is empty");
  return etas;
}

void print_warning(bool quiet) {
  if (!quiet)
    std::cerr << "warning: eta > 5 is outside the validated range of the model; "
                 "expect degraded accuracy\n";
}

int run_eval(int k, double eta, const std::string& method, int digits,
             double rel_tol, bool quiet) {
  fdzeta::QuadratureConfig config;
  config.rel_tol = rel_tol;
  fdzeta::EvaluationResult result;
  if (method == "closed")
    result = fdzeta::fd_closed_form(fdzeta::Order(k), eta);
  else if (method == "quadrature")
    result = fdzeta::fd_quadrature(fdzeta::Order(k), eta, config);
  else
    result = fdzeta::fd_series_nondegenerate(fdzeta::Order(k), eta);
  std::cout << fdzeta::format_value(result.value, digits) << "\n";
  if (result.validity_warning) print_warning(quiet);
  return 0;
}

int run_table(int k, const std::string& etas_text, const std::string& format,
              const std::string& out_path, double rel_tol, bool quiet) {
  const std::vector<double> etas = parse_eta_list(etas_text);
  fdzeta::QuadratureConfig config;
  config.rel_tol = rel_tol;
  const auto rows = fdzeta::build_table(fdzeta::Order(k), etas, config);
  const std::string rendered =
      format == "json" ? fdzeta::to_json(rows) : fdzeta::to_csv(rows);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return exit_usage;
    }
    out << rendered;
  }
  for (const auto& row : rows)
    if (row.warning) {
      print_warning(quiet);
      break;
    }
  return 0;
}

int run_reproduce() {
  const auto results = fdzeta::reproduce_table1();
  bool all_pass = true;
  std::printf("%8s  %14s  %14s  %14s  %14s  %s\n", "eta", "closed_form",
              "reference", "err_pct", "expected_err", "status");
  for (const auto& r : results) {
    std::printf("%8g  %14.8g  %14.8g  %14.8g  %14.8g  %s\n", r.row.eta,
                r.row.approx, r.row.reference, r.row.error_pct,
                r.expected_error_pct, r.pass ? "PASS" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  std::printf("%s\n", all_pass ? "all rows PASS" : "some rows FAIL");
  return all_pass ? 0 : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermi-Dirac integrals F_{k/2}(eta) via zeta-function closed forms"};
  app.require_subcommand(1);

  int k = 1;
  double eta = 0.0;
  std::string method = "closed";
  std::string etas_text;
  std::string format = "csv";
  std::string out_path;
  int digits = 6;
  double rel_tol = 1e-12;
  bool quiet = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate F_{k/2}(eta) once");
  eval->add_option("--k", k, "half-integer index numerator")
      ->required()
      ->check(CLI::Range(1, fdzeta::max_order));
  eval->add_option("--eta", eta, "degeneracy parameter")->required();
  eval->add_option("--method", method, "closed | quadrature | series")
      ->check(CLI::IsMember({"closed", "quadrature", "series"}));
  eval->add_option("--digits", digits, "significant digits to print")
      ->check(CLI::Range(1, 17));
  eval->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  eval->add_flag("--quiet", quiet, "suppress validity warnings");

  CLI::App* table = app.add_subcommand("table", "closed form vs quadrature over an eta grid");
  table->add_option("--k", k, "half-integer index numerator")
      ->required()
      ->check(CLI::Range(1, fdzeta::max_order));
  table->add_option("--etas", etas_text, "comma-separated eta values")->required();
  table->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "write the table to a file instead of stdout");
  table->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  table->add_flag("--quiet", quiet, "suppress validity warnings");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce-table1", "check the closed form against the embedded reference table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (eval->parsed()) return run_eval(k, eta, method, digits, rel_tol, quiet);
    if (table->parsed()) return run_table(k, etas_text, format, out_path, rel_tol, quiet);
    if (reproduce->parsed()) return run_reproduce();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical;
  }
  return exit_usage;
}
