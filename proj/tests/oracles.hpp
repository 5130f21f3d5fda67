#pragma once

// Independent reference computations used only by the tests. These stay
// deliberately separate from the library code paths they check.

#include <tstar/big_real.hpp>
#include <tstar/rational.hpp>

namespace oracles {

// Machin's arctangent combination: pi = 16 atan(1/5) - 4 atan(1/239),
// each arctangent summed as an alternating Taylor series with the
// first-omitted-term bound pushed below the digit target.
inline tstar::BigReal pi_machin(int digits) {
  using tstar::BigReal;
  const mpfr_prec_t bits = tstar::prec_bits(digits + 5);
  auto atan_inv = [&](unsigned long q) {
    BigReal sum = BigReal::from_int(0, bits);
    BigReal term(bits), den(bits);
    BigReal x = BigReal::from_int(1, bits) / BigReal::from_int(static_cast<long>(q), bits);
    BigReal xsq = x * x;
    BigReal power = x;
    BigReal cut(bits);
    mpfr_set_ui(cut.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(cut.raw(), cut.raw(), -(digits + 4), MPFR_RNDN);
    for (unsigned long k = 0;; ++k) {
      den = BigReal::from_int(static_cast<long>(2 * k + 1), bits);
      term = power / den;
      if (k % 2 == 0)
        sum += term;
      else
        sum -= term;
      power *= xsq;
      if (term < cut) break;
    }
    return sum;
  };
  return BigReal::from_int(16, bits) * atan_inv(5) - BigReal::from_int(4, bits) * atan_inv(239);
}

// beta(s) = sum_{j>=0} (-1)^j / (2j+1)^s by plain alternating summation;
// the true value differs from the return by at most 1/(2*terms+1)^s.
inline tstar::BigReal beta_direct(long s, long terms, int digits) {
  using tstar::BigReal;
  const mpfr_prec_t bits = tstar::prec_bits(digits);
  BigReal sum = BigReal::from_int(0, bits);
  BigReal term(bits);
  tstar::Int dp;
  for (long j = 0; j < terms; ++j) {
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(2 * j + 1),
                  static_cast<unsigned long>(s));
    mpfr_set_ui(term.raw(), 1, MPFR_RNDN);
    mpfr_div_z(term.raw(), term.raw(), dp.get_mpz_t(), MPFR_RNDN);
    if (j % 2 == 0)
      mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    else
      mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }
  return sum;
}

// zeta(s) partial sum plus nothing: caller must account for the
// K^{1-s}/(s-1) tail separately.
inline tstar::BigReal zeta_partial(long s, long terms, int digits) {
  using tstar::BigReal;
  const mpfr_prec_t bits = tstar::prec_bits(digits);
  BigReal sum = BigReal::from_int(0, bits);
  BigReal term(bits);
  tstar::Int dp;
  for (long k = 1; k <= terms; ++k) {
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(s));
    mpfr_set_ui(term.raw(), 1, MPFR_RNDN);
    mpfr_div_z(term.raw(), term.raw(), dp.get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }
  return sum;
}

inline double to_d(const tstar::BigReal& x) { return x.to_double(); }

inline tstar::BigReal from_parts(long num, long den, int digits) {
  tstar::Rat q(num, den);
  q.canonicalize();
  return tstar::BigReal::from(q, tstar::prec_bits(digits));
}

}  // namespace oracles
