#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdzeta/fd_core.hpp"
#include "fdzeta/oracle.hpp"

namespace fdzeta {

/// One row of a comparison against tabulated reference values.
struct ComparisonRow {
  double eta;
  double approx;     // closed-form value
  double reference;  // tabulated value
  double error_pct;  // 100 |approx - reference| / reference
};

/// Embedded k = 1 reference data: F_{1/2} values tabulated in Clayton
/// (after McDougall & Stoner 1938), plus six-significant-digit golden values
/// for the closed form and its error column, frozen from this implementation.
struct ReferenceRow {
  double eta;
  double reference;
  double expected_value;      // golden closed-form value, 6 significant digits
  double expected_error_pct;  // golden error column, 6 significant digits
};

inline const std::array<ReferenceRow, 12>& reference_table() {
  static const std::array<ReferenceRow, 12> table = {{
      {-4.0, 0.0161277, 0.0161393, 0.0715548},
      {-3.0, 0.0433664, 0.0434453, 0.181969},
      {-2.0, 0.114588, 0.11506, 0.411671},
      {-1.0, 0.290501, 0.292405, 0.655385},
      {0.0, 0.678094, 0.678094, 6.95512e-11},
      {0.1, 0.733403, 0.732034, 0.18664},
      {0.5, 0.990209, 0.977945, 1.23858},
      {1.0, 1.39638, 1.35129, 3.22903},
      {2.0, 2.50246, 2.30003, 8.08906},
      {3.0, 3.97699, 3.58315, 9.90297},
      {4.0, 5.77073, 5.5495, 3.83358},
      {5.0, 7.83798, 8.99919, 14.8152},
  }};
  return table;
}

/// Reproduction tolerances, fixed once: values must match the golden column
/// to 0.1% and the recomputed error column to 0.05 percentage points. The
/// eta = 0 golden error is an artifact of the source table's own six-digit
/// precision, so that row is instead judged against the exact degenerate
/// value, which the closed form must hit to 1e-9 %.
inline constexpr double table1_value_rtol = 1e-3;
inline constexpr double table1_error_pct_tol = 0.05;
inline constexpr double table1_eta0_error_pct_max = 1e-9;

struct Table1RowResult {
  ComparisonRow row;
  double expected_value;
  double expected_error_pct;
  bool pass;
};

inline std::vector<Table1RowResult> reproduce_table1() {
  std::vector<Table1RowResult> results;
  results.reserve(reference_table().size());
  for (const ReferenceRow& ref : reference_table()) {
    const double approx = fd_closed_form(Order(1), ref.eta).value;
    const double err_pct = 100.0 * std::abs(approx - ref.reference) / ref.reference;
    bool pass = std::abs(approx - ref.expected_value) <= table1_value_rtol * ref.expected_value;
    if (ref.eta == 0.0) {
      const double exact = eta_zero_exact(Order(1));
      pass = pass && 100.0 * std::abs(approx - exact) / exact <= table1_eta0_error_pct_max;
    } else {
      pass = pass && std::abs(err_pct - ref.expected_error_pct) <= table1_error_pct_tol;
    }
    results.push_back({{ref.eta, approx, ref.reference, err_pct},
                       ref.expected_value,
                       ref.expected_error_pct,
                       pass});
  }
  return results;
}

/// One row of an eta-grid table: closed form against the quadrature reference.
struct TableRow {
  double eta;
  double closed_form;
  double oracle;
  double err_pct;  // 100 |closed - oracle| / |oracle|
  bool warning;
};

inline std::vector<TableRow> build_table(Order k, std::span<const double> etas,
                                         const QuadratureConfig& config = {}) {
  std::vector<TableRow> rows;
  rows.reserve(etas.size());
  for (const double eta : etas) {
    const EvaluationResult closed = fd_closed_form(k, eta);
    const EvaluationResult reference = fd_quadrature(k, eta, config);
    const double err_pct =
        100.0 * std::abs(closed.value - reference.value) / std::abs(reference.value);
    rows.push_back({eta, closed.value, reference.value, err_pct, closed.validity_warning});
  }
  return rows;
}

namespace detail {

/// Shortest-width emission that still round-trips a double exactly.
inline std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// CSV with a fixed header, 17-significant-digit fields, '.' decimal marks
/// and LF line endings; parsing the fields back recovers the doubles exactly.
inline std::string to_csv(const std::vector<TableRow>& rows) {
  std::string out = "eta,closed_form,oracle,err_pct,warning\n";
  for (const TableRow& r : rows) {
    out += detail::full_precision(r.eta);
    out += ',';
    out += detail::full_precision(r.closed_form);
    out += ',';
    out += detail::full_precision(r.oracle);
    out += ',';
    out += detail::full_precision(r.err_pct);
    out += ',';
    out += r.warning ? "true" : "false";
    out += '\n';
  }
  return out;
}

/// JSON array of row objects carrying the same field names as the CSV.
inline std::string to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : rows) {
    arr.push_back({{"eta", r.eta},
                   {"closed_form", r.closed_form},
                   {"oracle", r.oracle},
                   {"err_pct", r.err_pct},
                   {"warning", r.warning}});
  }
  return arr.dump(2) + "\n";
}

/// Scalar rendering for CLI output: the requested number of significant
/// digits, scientific below 1e-4.
inline std::string format_value(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

}  // namespace fdzeta
