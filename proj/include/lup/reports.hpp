// Reference tables. Each suite recomputes its cells by simulation and
// marks every cell that is checked against a reference value.

#ifndef LUP_REPORTS_HPP
#define LUP_REPORTS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lup {

struct ReportTable {
  std::string suite;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Per row: true/false when checked, nullopt for informational rows.
  std::vector<std::optional<bool>> checks;

  void add(std::vector<std::string> row, std::optional<bool> check);
  bool ok() const;

  std::string to_csv() const;
  std::string to_json_lines() const;
  std::string to_pretty() const;
};

struct ReportOptions {
  double gamma = 1.01;      // advice-bound
  std::size_t k_alpha = 1000;  // ratio-partial
  std::size_t l = 40;       // ratio-full, mtf2-2.5
  std::size_t s = 6;        // ratio-full
  std::size_t m = 4;        // ratio-full, mtf2-2.5
};

const std::vector<std::string>& report_suites();

// Throws lup::Error for unknown suites.
ReportTable run_report(const std::string& suite, const ReportOptions& options);

}  // namespace lup

#endif  // LUP_REPORTS_HPP
