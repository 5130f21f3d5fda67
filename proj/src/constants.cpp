#include "tstar/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace tstar {

Int binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::domain_error("double_factorial: n must be >= -1");
  if (n <= 0) return Int(1);
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<Int> euler_numbers(long n_max) {
  if (n_max < 0 || n_max % 2 != 0) throw std::domain_error("euler_numbers: n_max must be even and nonnegative");
  std::vector<Int> e;
  e.reserve(static_cast<std::size_t>(n_max / 2 + 1));
  e.emplace_back(1);
  for (long n = 1; 2 * n <= n_max; ++n) {
    Int acc(0);
    for (long k = 0; k < n; ++k) acc += binomial(2 * n, 2 * k) * e[static_cast<std::size_t>(k)];
    e.push_back(-acc);
  }
  return e;
}

std::vector<Rat> bernoulli_numbers(long m_max) {
  if (m_max < 0) throw std::domain_error("bernoulli_numbers: m_max must be nonnegative");
  std::vector<Rat> b;
  b.reserve(static_cast<std::size_t>(m_max + 1));
  b.emplace_back(1);
  for (long m = 1; m <= m_max; ++m) {
    Rat acc(0);
    for (long j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rat(binomial(m + 1, m)));
  }
  return b;
}

Rat zeta_even_rational(long m) {
  if (m < 1) throw std::domain_error("zeta_even_rational: m must be >= 1");
  Rat b = bernoulli_numbers(2 * m).back();
  Rat r = rat_pow(Rat(2), 2 * m) * b / (Rat(2) * Rat(factorial(2 * m)));
  if (m % 2 == 0) r = -r;
  return r;
}

BigReal pi_const(int digits) {
  if (digits < 10) throw std::domain_error("pi_const: precision must be >= 10 digits");
  BigReal r(prec_bits(digits));
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal log2_const(int digits) {
  BigReal r(prec_bits(digits));
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

namespace {

constexpr long kZetaTermsCap = 4000000;

long zeta_terms_for(long s, int digits, long max_terms) {
  long cap = max_terms > 0 ? max_terms : kZetaTermsCap;
  // smallest K with K^{1-s}/(s-1) <= 10^{-digits}
  double lk = (digits * std::log(10.0) - std::log(static_cast<double>(s - 1))) / static_cast<double>(s - 1);
  if (lk > std::log(static_cast<double>(cap))) return cap;
  long k = static_cast<long>(std::ceil(std::exp(lk))) + 1;
  return std::max<long>(64, std::min(k, cap));
}

std::mutex g_zeta_mutex;
std::map<std::pair<long, int>, TruncatedValue> g_zeta_cache;

}  // namespace

TruncatedValue zeta_sum(long s, int digits, long max_terms) {
  if (s < 2) throw std::domain_error("zeta_sum: s must be >= 2");
  const mpfr_prec_t bits = prec_bits(digits);
  const long terms = zeta_terms_for(s, digits, max_terms);
  BigReal sum(bits), term(bits);
  mpfr_set_ui(sum.raw(), 0, MPFR_RNDN);
  Int kp;
  for (long k = 1; k <= terms; ++k) {
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(s));
    mpfr_set_ui(term.raw(), 1, MPFR_RNDN);
    mpfr_div_z(term.raw(), term.raw(), kp.get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }
  // integral comparison: sum_{k>K} k^{-s} < K^{1-s}/(s-1)
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(terms), static_cast<unsigned long>(s - 1));
  Rat tail(1, den * Int(s - 1));
  return {sum, BigReal::from(tail, bits), terms, BoundKind::rigorous};
}

TruncatedValue zeta_int(long s, int digits) {
  if (s < 2) throw std::domain_error("zeta_int: s must be >= 2");
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = g_zeta_cache.find({s, digits});
    if (it != g_zeta_cache.end()) return it->second;
  }
  TruncatedValue result = [&] {
    if (s % 2 == 0) {
      const mpfr_prec_t bits = prec_bits(digits);
      BigReal v = pow_ui(pi_const(digits), static_cast<unsigned long>(s)) *
                  BigReal::from(zeta_even_rational(s / 2), bits);
      // closed form: only rounding error remains
      BigReal err(bits);
      mpfr_set_ui_2exp(err.raw(), 1, -(bits - 8), MPFR_RNDN);
      mpfr_mul(err.raw(), err.raw(), v.raw(), MPFR_RNDN);
      mpfr_abs(err.raw(), err.raw(), MPFR_RNDN);
      return TruncatedValue{v, err, 0, BoundKind::rigorous};
    }
    return zeta_sum(s, digits, 0);
  }();
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  g_zeta_cache.insert({{s, digits}, result});
  return result;
}

Rat zeta_bar_factor(long s) {
  if (s < 2) throw std::domain_error("zeta_bar_factor: s must be >= 2");
  Int p = rat_pow(Rat(2), s - 1).get_num();
  return Rat(p - 1, p);
}

TruncatedValue zeta_bar_int(long s, int digits) {
  TruncatedValue z = zeta_int(s, digits);
  BigReal f = BigReal::from(zeta_bar_factor(s), prec_bits(digits));
  return {z.estimate * f, z.error_indicator * f, z.terms_used, z.bound_kind};
}

BigReal beta_odd(long a, int digits) {
  if (a < 0) throw std::domain_error("beta_odd: a must be nonnegative");
  const mpfr_prec_t bits = prec_bits(digits);
  Int e = euler_numbers(2 * a).back();
  Rat coeff = Rat(e) / (rat_pow(Rat(4), a + 1) * Rat(factorial(2 * a)));
  if (a % 2 != 0) coeff = -coeff;
  return pow_ui(pi_const(digits), static_cast<unsigned long>(2 * a + 1)) * BigReal::from(coeff, bits);
}

}  // namespace tstar
