#pragma once

#include <utility>
#include <vector>

#include "tstar/big_real.hpp"
#include "tstar/index.hpp"
#include "tstar/truncated_value.hpp"

namespace tstar::series {

/// Alternating nested sum over K >= k_1 > ... > k_r >= 1 of
/// prod sigma_i^{k_i} (2k_i-1)^{-s_i}. Admissible unless (s_1, sigma_1) =
/// (1, +1). Rigorous integral tail bound for a plain outer entry (s_1 >= 2),
/// paired-term bound for an alternating outer entry when the final shells
/// are verified monotone; heuristic otherwise.
TruncatedValue nested_t_sum(const SignedIndex& s, long K, int digits);

/// Star sum over K >= k_1 >= ... >= k_r >= 1 (all signs +1) with the
/// rigorous outer integral tail bound. Requires s_1 > 1 or an empty index.
TruncatedValue t_star_direct(const Index& s, long K, int digits);

/// Star value of a block form through the shell expansion of the
/// coefficient closed form, (2/pi) sum of per-k_0 shells. The indicator is
/// the |last shell| + max of the final five |shells| decay heuristic.
TruncatedValue t_star_closed_blocks(const BlockForm& b, long K, int digits);

/// Generating function of star values via the closed shell expansion.
/// Requires c_1 >= 3 when d >= 1 and |z_j| < 1.
TruncatedValue g_eval_closed(const std::vector<int>& c, const std::vector<BigReal>& z, long K,
                             int digits);

/// Generating function as a truncated coefficient series: star values of
/// the block indices (direct sums, per-coefficient adaptive truncation)
/// times the monomials, with a combined indicator (geometric in a_max,
/// series tail in K).
TruncatedValue g_eval_series(const std::vector<int>& c, const std::vector<BigReal>& z, long a_max,
                             long K, int digits);

/// Restricted generating function (a_u >= 1) through the explicit
/// z_u^2/(2k_u-1)^2 weighted shell expansion. Requires c_1 >= 3 when u >= 1.
TruncatedValue restricted_g_eval(const std::vector<int>& c, const std::vector<BigReal>& z, int u,
                                 long K, int digits);

/// lhs = upper bound of |prod_{k>n} (1 - z^2/(2k-1)^2)^{-1} - 1| evaluated
/// to convergence (remaining factors folded in rigorously), rhs = 1/(4n-3).
std::pair<BigReal, BigReal> product_tail_check(long n, const BigReal& z);

/// The double-factorial chain around pi/2:
/// (2n)!!/(2n+1)!! < [(2n-1)!!/(2n)!!] pi/2 < (2n-2)!!/(2n-1)!!.
struct WallisChain {
  Rat lower;
  BigReal middle;
  Rat upper;
};
WallisChain wallis_bounds(long n);

/// Per-shell values of the generating-function expansion next to the
/// log-power/k^2 reference envelope calibrated through the first shell.
/// Diagnostic only.
struct ProbeRow {
  long k0;
  BigReal value;
  BigReal envelope;
};
std::vector<ProbeRow> gtilde_growth_probe(const std::vector<int>& c, const std::vector<BigReal>& z,
                                          long k0_max, int digits);

/// Rigorous bound on sum_{k>K} (2k-1)^{-s} (1 + ln(2k+1))^p, s >= 2.
BigReal log_poly_tail_bound(long s, int p, long K, mpfr_prec_t bits);

/// Rigorous bound on sum_{k>=1} (2k-1)^{-s} (1 + ln(2k+1))^p, s >= 2.
BigReal log_poly_series_bound(long s, int p, mpfr_prec_t bits);

/// Bound |inner suffix sum at outer value m| <= scale * (1 + ln(2m+1))^{log_power},
/// composed over the suffix entries[from..].
struct InnerBound {
  BigReal scale;
  int log_power;
};
InnerBound inner_suffix_bound(const std::vector<int>& entries, std::size_t from, mpfr_prec_t bits);

/// Smallest K (doubling steps, capped) whose rigorous outer tail bound for
/// the given star index falls below target; used to pick oracle depths.
long suggest_terms(const Index& s, const BigReal& target, long cap, int digits);

}  // namespace tstar::series
