#pragma once

#include <string>
#include <vector>

namespace tstar::verify {

struct VerifyConfig {
  int digits = 50;           // working precision for exact-engine reals
  int series_digits = 30;    // working precision for infinite-series checks
  long closed_terms = 4000;  // shell truncation for closed infinite forms
  long oracle_terms = 200000;
  double grid_tolerance = 1e-3;  // deep-grid tolerance (non-extended)
  bool extended = false;         // unlock the deep oracle grids
  bool parallel = true;
};

struct CheckRecord {
  std::string id;
  std::string formula;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  std::string abs_error;
  std::string bound;
  bool pass = true;
  std::string engine;
  long terms = 0;
  int precision = 0;
};

/// Effective oracle/tolerance settings once `extended` is applied.
VerifyConfig effective(VerifyConfig cfg);

std::vector<std::string> suite_names();

std::vector<CheckRecord> suite_finite_exact(const VerifyConfig& cfg);
std::vector<CheckRecord> suite_lemmas(const VerifyConfig& cfg);
std::vector<CheckRecord> suite_recurrence(const VerifyConfig& cfg);
std::vector<CheckRecord> suite_series_vs_closed(const VerifyConfig& cfg);
std::vector<CheckRecord> suite_thm4(const VerifyConfig& cfg);
std::vector<CheckRecord> suite_bounds(const VerifyConfig& cfg);

// component grids, exposed so the acceptance runner can time and report
// them one criterion at a time
std::vector<CheckRecord> records_coefficient_grid(const VerifyConfig& cfg);
std::vector<CheckRecord> records_window_poly(const VerifyConfig& cfg);
std::vector<CheckRecord> records_gn_agreement(const VerifyConfig& cfg);
std::vector<CheckRecord> records_infinite_consistency(const VerifyConfig& cfg);
std::vector<CheckRecord> records_classical_rows(const VerifyConfig& cfg);
std::vector<CheckRecord> records_two_block(const VerifyConfig& cfg);
std::vector<CheckRecord> records_deep_grid(const VerifyConfig& cfg);

/// suite in {finite-exact, lemmas, recurrence, series-vs-closed, thm4,
/// bounds, all}; records come back in a deterministic order.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg);

bool all_pass(const std::vector<CheckRecord>& records);

std::string to_json(const std::vector<CheckRecord>& records);
std::string to_csv(const std::vector<CheckRecord>& records);
std::string to_text(const std::vector<CheckRecord>& records);

}  // namespace tstar::verify
