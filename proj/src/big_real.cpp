#include "tstar/big_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tstar {

mpfr_prec_t prec_bits(int digits) {
  if (digits < 1) throw std::domain_error("prec_bits: digits must be positive");
  // 10 guard digits, log2(10) rounded up.
  return static_cast<mpfr_prec_t>(std::ceil((digits + 10) * 3.3219280948873626)) + 4;
}

BigReal::BigReal() { mpfr_init2(v_, 64); }

BigReal::BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from(const Rat& q, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::from_int(long v, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_str(const std::string& text, mpfr_prec_t bits) {
  BigReal r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal::from_str: malformed number '" + text + "'");
  return r;
}

std::string BigReal::str(int digits) const {
  if (digits < 2) digits = 2;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mpfr exponent counts digits before the decimal point of 0.mant * 10^e.
  long ex = static_cast<long>(e) - 1;
  std::string out = sign + mant.substr(0, 1) + "." + mant.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03ld", ex);
  return out + buf;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow_ui(const BigReal& x, unsigned long e) {
  BigReal r(x.precision());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigReal ln(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace tstar
