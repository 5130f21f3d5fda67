#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tstar/big_real.hpp"
#include "tstar/index.hpp"
#include "tstar/truncated_value.hpp"

namespace tstar::evals {

struct EvalConfig {
  int digits = 30;
  long terms = 1000000;        // truncation for the alternating building blocks
  long oracle_cap = 16000000;  // ceiling for direct-star oracle depth
};

struct EvaluationReport {
  std::string formula_id;
  std::vector<long> inputs;
  std::vector<TruncatedValue> closed;  // one or two displayed lines
  TruncatedValue oracle;
  BigReal abs_disagreement;
  double tolerance = 0;
  bool pass = false;
  long oracle_terms = 0;
};

/// Enumerates the compositions of m into r positive parts in lexicographic
/// order; checks the C(m-1, r-1) count.
void for_each_compositions(long m, long r, const std::function<void(const std::vector<long>&)>& fn);

/// Closed-form right-hand sides of the one-, two- and three-block star
/// evaluations, with per-run memoization of the alternating sums they share.
class Evaluator {
 public:
  explicit Evaluator(EvalConfig cfg) : cfg_(cfg) {}

  const EvalConfig& config() const { return cfg_; }

  /// Memoized alternating nested sum at the configured truncation.
  TruncatedValue t_alt(std::vector<int> entries, std::vector<int> signs);

  /// Direct star oracle with depth chosen from the tolerance (capped).
  TruncatedValue star_oracle(const Index& idx, double tolerance);

  /// t*({2}^a): the alternating-sum line and the Euler-number line.
  std::pair<TruncatedValue, TruncatedValue> thm41(long a);

  /// t*({2}^a, 3, {2}^b): the alternating-sum line and the zeta-weighted line.
  std::pair<TruncatedValue, TruncatedValue> thm42(long a, long b);

  /// The zeta-weighted form with t*({2}^m) factors from the Euler line.
  TruncatedValue liwang42(long a, long b);

  /// t*({2}^a, 1, {2}^b), a >= 1: alternating-sum line and zeta/log2 line.
  std::pair<TruncatedValue, TruncatedValue> thm44(long a, long b);

  /// t*({2}^a, c+3, {2}^b), c >= 1: composition-weighted alternating sums.
  TruncatedValue thm45(long a, long b, long c);

  /// t*({2}^a, 3, {2}^b, 1, {2}^c) and t*({2}^a, 3, {2}^b, 3, {2}^c).
  std::pair<TruncatedValue, TruncatedValue> thm46(long a, long b, long c);

  /// t*({2}^a, 1, {2}^b, 3, {2}^c) and t*({2}^a, 1, {2}^b, 1, {2}^c), a >= 1.
  std::pair<TruncatedValue, TruncatedValue> thm47(long a, long b, long c);

  /// t*(2, {1}^d, 2).
  TruncatedValue thm48(long d);

  /// t*(({2}^a,3,{2}^a,1)^{d-1}, {2}^a, 3, {2}^a), d >= 1.
  TruncatedValue thm49(long d, long a);

  /// Flattened star index a formula evaluates.
  static Index target_index(const std::string& formula_id, const std::vector<long>& params);

  /// Known ids: thm41, thm42, liwang42, thm44, thm45, thm46a, thm46b,
  /// thm47a, thm47b, thm48, thm49.
  EvaluationReport cross_check(const std::string& formula_id, const std::vector<long>& params,
                               double tolerance);

 private:
  EvalConfig cfg_;
  std::mutex memo_mutex_;
  std::map<std::string, TruncatedValue> memo_;
};

}  // namespace tstar::evals
