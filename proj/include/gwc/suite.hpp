#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gwc/cgl.hpp"
#include "gwc/commutator.hpp"
#include "gwc/report.hpp"

namespace gwc {

/// Bad configuration or out-of-range parameter; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header row, data rows and the version footer.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma-separated text ending in "# gw-commute <version> <hash>".
  std::string render(std::string_view config_hash) const;
};

CsvTable identity_table(const std::vector<IdentityReport>& reports);
CsvTable estimate_table(const std::vector<EstimateReport>& reports);

/// Rows (n, m, r, theta, A, A_tilde); throws ConfigError for |theta| >= pi/2.
CsvTable constants_table(const std::vector<std::size_t>& dims, const std::vector<int>& orders,
                         const std::vector<Exponent>& rs, const std::vector<double>& thetas);

/// Rows (beta, omega_re, omega_im, r, closed_form, quadrature, rel_diff).
CsvTable kernel_norm_table(const MultiIndex& beta, Complex omega, const std::vector<Exponent>& rs);

CsvTable decay_table(const DecayProbe& probe);
CsvTable weighted_table(const WeightedProbe& probe);

/// Gnuplot script plotting PREFIX_decay.csv and PREFIX_weighted.csv.
std::string gnuplot_script(const std::string& prefix, int m);

/// "RE,IM" or "RE".
Complex parse_complex(std::string_view text);
/// "N,L".
Grid parse_grid(std::string_view text, std::size_t dim);
/// Splits on any of `separators`, trimming whitespace and dropping empty pieces.
std::vector<std::string> split_list(std::string_view text, std::string_view separators = ",");

struct SuiteResult {
  int exit_code = 0;  // 0 all pass, 1 a report failed, 2 configuration error
  std::vector<std::filesystem::path> artifacts;
  std::vector<std::string> messages;
};

/// Runs the harnesses named in [suite] harnesses of an INI config. Artifacts go to
/// `out_dir`, or to [suite] output (relative to the config file) when `out_dir` is empty.
SuiteResult run_suite(const std::filesystem::path& config, const std::filesystem::path& out_dir = {});
SuiteResult run_suite_text(const std::string& text, const std::filesystem::path& out_dir);

}  // namespace gwc
