#pragma once

#include <utility>
#include <vector>

#include "tstar/index.hpp"
#include "tstar/rational.hpp"

namespace tstar::finite {

/// V^#_{k,m}({1}^ones). ones <= 0 means the empty index and selects the
/// closed branch (2 (2k-1)/(2m-1))^{triangle(k,m)}; k = 0 is allowed there
/// and contributes the factor 2k-1 = -1. ones >= 1 requires k >= m >= 1.
Rat v_sharp(long k, long m, long ones);

/// t*_n(s): nested star sum over n >= k_1 >= ... >= k_r >= 1 with odd
/// denominators 2k_i - 1. Single-sweep accumulator evaluation, O(n * r).
Rat t_harmonic_star(long n, const Index& s);

/// Same value by direct enumeration of all chains (reference path, small n).
Rat t_harmonic_star_ref(long n, const Index& s);

/// Window-restricted star sum over n >= k_1 >= ... >= k_r >= m.
Rat t_window_star(long n, long m, const Index& s);

/// Closed evaluation of the generating function of the harmonic star sums
/// with blocks of twos, at exact rational z (entering only as z^2):
/// the binomial/V^# chain expansion with prefactor n C(2n,n) / 2^{4n-2}.
Rat gn_closed_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z);

/// Same value by direct nested loops over the chain (reference path).
Rat gn_closed_eval_ref(long n, const std::vector<int>& c, const std::vector<Rat>& z);

/// Truncated generating series: sum over all 0 <= a_j <= a_max of
/// t*_n({2}^{a_0}, c_1, ..., {2}^{a_d}) prod z_j^{2 a_j}, exactly.
Rat gn_series_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max);

/// Same by summing coefficients one tuple at a time (reference path).
Rat gn_series_eval_ref(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max);

/// Rigorous bound on gn_closed_eval - gn_series_eval(a_max) for z_j >= 0:
/// every block tail is geometric and each coefficient is bounded by the
/// closed value times the limiting run of twos.
Rat gn_series_certificate(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max);

/// Coefficient closed form: t*_n of the flattened block form via the chain
/// expansion with exponents 2 a_i - delta_i + 3.
Rat gn_coefficient_closed(long n, const BlockForm& b);

/// Restricted generating function (a_u >= 1), difference of two closed
/// evaluations.
Rat gn_restricted_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z, int u);

/// The same restricted sum through the explicit z_u^2/(2k_u-1)^2 weighted
/// chain; must agree exactly with gn_restricted_eval.
Rat gn_restricted_weighted(long n, const std::vector<int>& c, const std::vector<Rat>& z, int u);

/// (lhs, rhs) of sum_{k=l+1}^{n} (2k-1) C(2n-1,n-k) = (n-l) C(2n-1,n-l).
std::pair<Rat, Rat> identity_weighted_binomial(long n, long l);

/// (lhs, rhs) of sum_{k=l+1}^{n} (-1)^k C(2n-1,n-k)
///            = (-1)^{l+1} (n-l)/(2n-1) C(2n-1,n-l).
std::pair<Rat, Rat> identity_alternating_binomial(long n, long l);

/// (lhs, rhs) of sum_{k=l}^{n} ((-1)^k/(2k-1)) C(2n-1,n-k) V^#_{k,l}({1}^c)
///            = (-1)^l/(2n-1)^{c+1} C(2n-1,n-l).
std::pair<Rat, Rat> identity_vsharp_binomial(long n, long l, long c);

}  // namespace tstar::finite
