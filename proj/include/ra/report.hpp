#pragma once

#include "ra/oracle.hpp"

#include <complex>
#include <string>
#include <vector>

namespace ra {

// One row of the verification report. `computed` and `expected` are exact
// values rendered as strings; the oracle columns hold the independent
// quadrature value and the numeric evaluation of the expected value.
struct ReportEntry {
  std::string setting;  // dim4, dim6, interior-4, interior-6, closed-4, ...
  int l = 0;
  std::string item;     // case name, "total", identity or checkpoint id
  std::string computed;
  std::string expected;
  bool exact_match = false;
  bool has_oracle = false;
  std::complex<double> oracle_engine{};    // independent quadrature
  std::complex<double> oracle_expected{};  // numeric value of `expected`
  std::string note;
};

// When `cfg` is null the oracle columns are skipped.
std::vector<ReportEntry> verify_boundary(Setting st, const ReferenceTables& exp,
                                         const OracleConfig* cfg);
std::vector<ReportEntry> verify_interior(Setting st, const ReferenceTables& exp,
                                         const OracleConfig* cfg);
std::vector<ReportEntry> closed_report(Setting st, const ReferenceTables& exp);
std::vector<ReportEntry> identity_report();
std::vector<ReportEntry> checkpoint_report(const OracleConfig* cfg);
std::vector<ReportEntry> full_report(const ReferenceTables& exp,
                                     const OracleConfig* cfg);

std::string report_to_text(const std::vector<ReportEntry>& entries);
std::string report_to_json(const std::vector<ReportEntry>& entries);
std::string report_to_latex(const std::vector<ReportEntry>& entries);

// 0: all rows match; 1: some rows differ but the quadrature sides with the
// engine everywhere; 3: the quadrature contradicts the engine (internal
// inconsistency).
int report_exit_code(const std::vector<ReportEntry>& entries, double tol);

}  // namespace ra
