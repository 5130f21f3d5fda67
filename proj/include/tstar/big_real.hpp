#pragma once

#include <mpfr.h>

#include <string>

#include "tstar/rational.hpp"

namespace tstar {

/// Working precision in bits for a decimal-digit target, with 10 guard digits.
mpfr_prec_t prec_bits(int digits);

/// Arbitrary-precision real with an explicit, propagated precision.
/// Binary operations produce results at the larger operand precision;
/// rounding is always to nearest. There is no implicit double conversion.
class BigReal {
 public:
  BigReal();
  explicit BigReal(mpfr_prec_t bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from(const Rat& q, mpfr_prec_t bits);
  static BigReal from_int(long v, mpfr_prec_t bits);
  static BigReal from_str(const std::string& text, mpfr_prec_t bits);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Deterministic decimal rendering with the given significant digit count,
  /// normalized scientific form "[-]d.dddde[+-]xx".
  std::string str(int digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal pow_ui(const BigReal& x, unsigned long e);
BigReal ln(const BigReal& x);
BigReal sqrt(const BigReal& x);

}  // namespace tstar
