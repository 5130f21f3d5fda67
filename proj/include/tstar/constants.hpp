#pragma once

#include <vector>

#include "tstar/rational.hpp"
#include "tstar/truncated_value.hpp"

namespace tstar {

/// C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
Int binomial(long n, long k);

/// n!! with (-1)!! = 0!! = 1. Throws std::domain_error for n < -1.
Int double_factorial(long n);

Int factorial(long n);

/// Euler numbers of even index E_0, E_2, ..., E_{n_max} from the secant
/// recurrence sum_k C(2n,2k) E_{2k} = 0. n_max must be even.
std::vector<Int> euler_numbers(long n_max);

/// Bernoulli numbers B_0..B_{m_max} (B_1 = -1/2).
std::vector<Rat> bernoulli_numbers(long m_max);

/// zeta(2m) / pi^{2m} as an exact rational, m >= 1.
Rat zeta_even_rational(long m);

BigReal pi_const(int digits);
BigReal log2_const(int digits);

/// zeta(s) by direct summation with the integral tail bound
/// sum_{k>K} k^{-s} < K^{1-s}/(s-1). K is chosen from the digit target and
/// capped; the indicator reports the tail actually achieved.
TruncatedValue zeta_sum(long s, int digits, long max_terms = 0);

/// zeta(s), s >= 2. Even s goes through the exact pi-power closed form
/// (rounding-level indicator); odd s through zeta_sum.
TruncatedValue zeta_int(long s, int digits);

/// The exact factor 1 - 2^{1-s}.
Rat zeta_bar_factor(long s);

/// Alternating zeta, (1 - 2^{1-s}) * zeta(s).
TruncatedValue zeta_bar_int(long s, int digits);

/// beta(2a+1) via the Euler-number closed form
/// (-1)^a pi^{2a+1} E_{2a} / (4^{a+1} (2a)!), exact up to rounding of pi.
BigReal beta_odd(long a, int digits);

}  // namespace tstar
