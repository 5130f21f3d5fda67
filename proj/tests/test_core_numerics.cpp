#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tstar/constants.hpp>

#include "oracles.hpp"

using namespace tstar;

TEST_CASE("binomial basics and out-of-range zeros") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial satisfies the Pascal recursion") {
  for (long n = 1; n <= 25; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("double factorial values and conventions") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  for (long n = 2; n <= 30; ++n) CHECK(double_factorial(n) == Int(n) * double_factorial(n - 2));
}

TEST_CASE("even-index Euler numbers from the secant recurrence") {
  CHECK(euler_numbers(0) == std::vector<Int>{Int(1)});
  CHECK(euler_numbers(4) == std::vector<Int>{Int(1), Int(-1), Int(5)});
  CHECK(euler_numbers(6) == std::vector<Int>{Int(1), Int(-1), Int(5), Int(-61)});
  CHECK_THROWS_AS(euler_numbers(3), std::domain_error);

  // recomputed independently here
  std::vector<Int> expect{Int(1)};
  for (long n = 1; n <= 12; ++n) {
    Int acc(0);
    for (long k = 0; k < n; ++k) acc += binomial(2 * n, 2 * k) * expect[static_cast<std::size_t>(k)];
    expect.push_back(-acc);
  }
  CHECK(euler_numbers(24) == expect);

  std::vector<Int> e = euler_numbers(24);
  for (long n = 1; 2 * n <= 24; ++n) {
    Int acc(0);
    for (long k = 0; k <= n; ++k) acc += binomial(2 * n, 2 * k) * e[static_cast<std::size_t>(k)];
    CHECK(acc == 0);
  }
}

TEST_CASE("Bernoulli numbers and even zeta rationals") {
  std::vector<Rat> b = bernoulli_numbers(12);
  CHECK(b[1] == Rat(-1, 2));
  CHECK(b[2] == Rat(1, 6));
  CHECK(b[4] == Rat(-1, 30));
  CHECK(b[3] == 0);
  CHECK(b[12] == Rat(-691, 2730));
  CHECK(zeta_even_rational(1) == Rat(1, 6));
  CHECK(zeta_even_rational(2) == Rat(1, 90));
  CHECK(zeta_even_rational(3) == Rat(1, 945));
}

TEST_CASE("pi against an independent arctangent route") {
  for (int digits : {15, 30, 50}) {
    BigReal p = pi_const(digits);
    BigReal m = oracles::pi_machin(digits);
    BigReal tol(p.precision());
    mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw(), tol.raw(), -(digits - 1), MPFR_RNDN);
    CHECK(abs(p - m) < tol);
  }
  CHECK_THROWS_AS(pi_const(5), std::domain_error);
}

TEST_CASE("pi precision monotonicity") {
  for (int digits : {12, 20, 34, 50}) {
    BigReal hi = pi_const(digits);
    BigReal lo = pi_const(digits - 2);
    BigReal tol(hi.precision());
    mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw(), tol.raw(), -(digits - 2), MPFR_RNDN);
    CHECK(abs(hi - lo) < tol);
  }
}

TEST_CASE("zeta at small arguments") {
  BigReal pi = pi_const(30);
  TruncatedValue z2 = zeta_int(2, 12);
  CHECK(z2.bound_kind == BoundKind::rigorous);
  BigReal ref2 = pi * pi / BigReal::from_int(6, pi.precision());
  CHECK(abs(z2.estimate - ref2) <= z2.error_indicator);

  TruncatedValue z3 = zeta_int(3, 12);
  BigReal lit = BigReal::from_str("1.2020569032", prec_bits(12));
  CHECK(oracles::to_d(abs(z3.estimate - lit)) < 1e-9);
  // independent partial sum with the same integral tail logic
  BigReal part = oracles::zeta_partial(3, 200000, 20);
  CHECK(oracles::to_d(abs(z3.estimate - part)) < 1.0 / (200000.0 * 200000.0 / 2.0) + 1e-12);

  TruncatedValue z4 = zeta_int(4, 12);
  BigReal ref4 = pow_ui(pi, 4) / BigReal::from_int(90, pi.precision());
  CHECK(abs(z4.estimate - ref4) <= z4.error_indicator);

  CHECK_THROWS_AS(zeta_int(1, 12), std::domain_error);
}

TEST_CASE("direct zeta summation agrees with the even closed forms") {
  for (long m = 1; m <= 5; ++m) {
    TruncatedValue direct = zeta_sum(2 * m, 13);
    TruncatedValue closed = zeta_int(2 * m, 13);
    CHECK(abs(direct.estimate - closed.estimate) <= direct.error_indicator + closed.error_indicator);
  }
}

TEST_CASE("rigorous zeta refinement stays within the indicator") {
  TruncatedValue coarse = zeta_sum(3, 12, 50000);
  TruncatedValue fine = zeta_sum(3, 12, 200000);
  CHECK(coarse.bound_kind == BoundKind::rigorous);
  CHECK(abs(fine.estimate - coarse.estimate) <= coarse.error_indicator);
}

TEST_CASE("alternating zeta factor and values") {
  CHECK(zeta_bar_factor(2) == Rat(1, 2));
  CHECK(zeta_bar_factor(3) == Rat(3, 4));
  BigReal pi = pi_const(30);
  TruncatedValue zb2 = zeta_bar_int(2, 12);
  BigReal ref = pi * pi / BigReal::from_int(12, pi.precision());
  CHECK(abs(zb2.estimate - ref) <= zb2.error_indicator + zb2.error_indicator);
  TruncatedValue zb3 = zeta_bar_int(3, 12);
  BigReal lit = BigReal::from_str("0.9015426774", prec_bits(12));
  CHECK(oracles::to_d(abs(zb3.estimate - lit)) < 1e-9);
}

TEST_CASE("beta at odd arguments: closed forms and the alternating oracle") {
  BigReal pi = pi_const(30);
  mpfr_prec_t bits = pi.precision();
  CHECK(oracles::to_d(abs(beta_odd(0, 30) - pi / BigReal::from_int(4, bits))) < 1e-35);
  CHECK(oracles::to_d(abs(beta_odd(1, 30) - pow_ui(pi, 3) / BigReal::from_int(32, bits))) < 1e-35);
  BigReal b2ref = pow_ui(pi, 5) * BigReal::from(Rat(5, 1536), bits);
  CHECK(oracles::to_d(abs(beta_odd(2, 30) - b2ref)) < 1e-35);

  // paired-term oracle at modest precision
  for (long a = 0; a <= 4; ++a) {
    long terms = a == 0 ? 4000000 : 200000;
    BigReal direct = oracles::beta_direct(2 * a + 1, terms, 20);
    double leibniz = 1.0;
    for (long i = 0; i < 2 * a + 1; ++i) leibniz /= static_cast<double>(2 * terms + 1);
    CHECK(oracles::to_d(abs(beta_odd(a, 20) - direct)) < leibniz + 1e-6);
  }
}
