#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tstar/constants.hpp>
#include <tstar/series.hpp>

#include "oracles.hpp"

using namespace tstar;
using namespace tstar::series;

namespace {
BigReal real_of(double v, int digits = 20) {
  BigReal r(prec_bits(digits));
  mpfr_set_d(r.raw(), v, MPFR_RNDN);
  return r;
}
}  // namespace

TEST_CASE("tail bound helpers") {
  const mpfr_prec_t bits = prec_bits(20);
  // p = 0 reduces to the plain integral comparison (2K-1)^{1-s}/(2(s-1))
  BigReal t = log_poly_tail_bound(2, 0, 1000, bits);
  CHECK(oracles::to_d(abs(t - BigReal::from(Rat(1, 2 * 1999), bits))) < 1e-12);
  // bounds really do dominate the sums they bound
  for (int p : {0, 1, 2}) {
    BigReal partial = BigReal::from_int(0, bits);
    BigReal term(bits), l(bits);
    for (long k = 1001; k <= 400000; ++k) {
      mpfr_set_si(l.raw(), 2 * k + 1, MPFR_RNDN);
      mpfr_log(l.raw(), l.raw(), MPFR_RNDN);
      mpfr_add_ui(l.raw(), l.raw(), 1, MPFR_RNDN);
      mpfr_pow_ui(l.raw(), l.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
      mpfr_set_si(term.raw(), (2 * k - 1), MPFR_RNDN);
      mpfr_sqr(term.raw(), term.raw(), MPFR_RNDN);
      mpfr_div(term.raw(), l.raw(), term.raw(), MPFR_RNDN);
      mpfr_add(partial.raw(), partial.raw(), term.raw(), MPFR_RNDN);
    }
    CHECK(partial < log_poly_tail_bound(2, p, 1000, bits));
  }
  CHECK(log_poly_series_bound(2, 0, bits) > real_of(1.2337));  // >= full sum pi^2/8
  CHECK_THROWS_AS(log_poly_tail_bound(1, 0, 100, bits), std::domain_error);
}

TEST_CASE("plain nested sums with rigorous outer bound") {
  SignedIndex s2({2}, {1});
  TruncatedValue tv = nested_t_sum(s2, 1000000, 20);
  CHECK(tv.bound_kind == BoundKind::rigorous);
  BigReal pi = pi_const(30);
  BigReal ref = pi * pi / BigReal::from_int(8, pi.precision());
  CHECK(abs(tv.estimate - ref) <= tv.error_indicator);
  CHECK(oracles::to_d(tv.error_indicator) < 3e-7);

  // strictly increasing truncations for an all-plus admissible index
  TruncatedValue half = nested_t_sum(s2, 500000, 20);
  CHECK(half.estimate < tv.estimate);
  CHECK(abs(tv.estimate - half.estimate) <= half.error_indicator);
}

TEST_CASE("alternating nested sums") {
  TruncatedValue cat = nested_t_sum(SignedIndex({2}, {-1}), 1000000, 20);
  CHECK(cat.bound_kind == BoundKind::rigorous);
  // independent paired-sum oracle
  BigReal direct = -oracles::beta_direct(2, 2000001, 20);
  CHECK(oracles::to_d(abs(cat.estimate - direct)) < 1e-12 + oracles::to_d(cat.error_indicator));
  CHECK(oracles::to_d(abs(cat.estimate - real_of(-0.9159655942))) < 1e-9);

  TruncatedValue mp4 = nested_t_sum(SignedIndex({1}, {-1}), 1000000, 20);
  BigReal pi = pi_const(30);
  CHECK(oracles::to_d(abs(mp4.estimate + pi / BigReal::from_int(4, pi.precision()))) <
        oracles::to_d(mp4.error_indicator) + 1e-15);

  CHECK_THROWS_AS(nested_t_sum(SignedIndex({1, 2}, {1, 1}), 1000, 20), std::domain_error);
}

TEST_CASE("empty signed index is exactly one") {
  TruncatedValue tv = nested_t_sum(SignedIndex{}, 10, 20);
  CHECK(oracles::to_d(tv.estimate) == 1.0);
  CHECK(tv.error_indicator.is_zero());
}

TEST_CASE("rigorous refinement: doubling K stays inside the indicator") {
  struct Case {
    std::vector<int> e, s;
    bool strict;
  };
  for (long K : {20000L, 80000L}) {
    TruncatedValue coarse = t_star_direct(Index({2, 1, 2}), K, 20);
    TruncatedValue fine = t_star_direct(Index({2, 1, 2}), 4 * K, 20);
    CHECK(coarse.bound_kind == BoundKind::rigorous);
    CHECK(abs(fine.estimate - coarse.estimate) <= coarse.error_indicator);

    TruncatedValue c2 = nested_t_sum(SignedIndex({3, 1}, {1, 1}), K, 20);
    TruncatedValue f2 = nested_t_sum(SignedIndex({3, 1}, {1, 1}), 4 * K, 20);
    CHECK(abs(f2.estimate - c2.estimate) <= c2.error_indicator);
  }
}

TEST_CASE("direct star sums") {
  TruncatedValue empty = t_star_direct(Index{}, 10, 20);
  CHECK(oracles::to_d(empty.estimate) == 1.0);
  CHECK(empty.error_indicator.is_zero());

  TruncatedValue t3 = t_star_direct(Index({3}), 400000, 20);
  TruncatedValue z3 = zeta_int(3, 14);
  BigReal ref = z3.estimate * BigReal::from(Rat(7, 8), prec_bits(20));
  CHECK(abs(t3.estimate - ref) <= t3.error_indicator + z3.error_indicator);
  CHECK(oracles::to_d(abs(t3.estimate - real_of(1.0517997903))) < 1e-9);

  long K = 1000000;
  TruncatedValue t2 = t_star_direct(Index({2}), K, 20);
  CHECK(t2.error_indicator <= BigReal::from(Rat(1, 4 * K - 2), prec_bits(20)) * real_of(1.000001));
  BigReal pi = pi_const(30);
  CHECK(abs(t2.estimate - pi * pi / BigReal::from_int(8, pi.precision())) <= t2.error_indicator);

  CHECK_THROWS_AS(t_star_direct(Index({1, 2}), 100, 20), std::domain_error);
}

TEST_CASE("block closed forms against classical references") {
  // single run of twos
  TruncatedValue a1 = t_star_closed_blocks(BlockForm({1}, {}), 4000, 20);
  BigReal pi = pi_const(30);
  BigReal pp = pi * pi / BigReal::from_int(8, pi.precision());
  CHECK(abs(a1.estimate - pp) <= a1.error_indicator);
  CHECK(a1.bound_kind == BoundKind::heuristic);

  // (2,3): zeta(3) pi^2/16 + 31 zeta(5)/64
  TruncatedValue b = t_star_closed_blocks(BlockForm({1, 0}, {3}), 4000, 20);
  TruncatedValue z3 = zeta_int(3, 16);
  TruncatedValue z5 = zeta_int(5, 16);
  BigReal ref = z3.estimate * pi * pi / BigReal::from_int(16, pi.precision()) +
                BigReal::from(Rat(31, 64), pi.precision()) * z5.estimate;
  CHECK(oracles::to_d(abs(b.estimate - ref)) <
        oracles::to_d(b.error_indicator) + oracles::to_d(z3.error_indicator) + 1e-12);
  CHECK(oracles::to_d(abs(b.estimate - real_of(1.2437))) < 1e-4);

  // (3): 7 zeta(3)/8
  TruncatedValue c = t_star_closed_blocks(BlockForm({0, 0}, {3}), 4000, 20);
  BigReal ref3 = z3.estimate * BigReal::from(Rat(7, 8), pi.precision());
  CHECK(oracles::to_d(abs(c.estimate - ref3)) < oracles::to_d(c.error_indicator) + 1e-12);

  CHECK_THROWS_AS(t_star_closed_blocks(BlockForm({0, 0}, {1}), 4000, 20), std::domain_error);
}

TEST_CASE("block closed forms track the direct sums") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{2}, {}}, {{0, 1}, {3}}, {{1, 0}, {5}}, {{0, 0, 0}, {3, 1}}};
  for (const auto& [a, c] : cases) {
    BlockForm bf(a, c);
    TruncatedValue closed = t_star_closed_blocks(bf, 4000, 20);
    TruncatedValue direct = t_star_direct(expand_blocks(bf), 400000, 20);
    CHECK(abs(closed.estimate - direct.estimate) <=
          closed.error_indicator + direct.error_indicator);
  }
}

TEST_CASE("generating function closed form") {
  const mpfr_prec_t bits = prec_bits(20);
  TruncatedValue g = g_eval_closed({}, {BigReal::from(Rat(1, 2), bits)}, 4000, 20);
  BigReal root2 = sqrt(BigReal::from_int(2, bits));
  CHECK(abs(g.estimate - root2) <= g.error_indicator);

  TruncatedValue g0 = g_eval_closed({}, {BigReal::from_int(0, bits)}, 4000, 20);
  CHECK(abs(g0.estimate - BigReal::from_int(1, bits)) <= g0.error_indicator);

  CHECK_THROWS_AS(g_eval_closed({1}, {BigReal::from_int(0, bits), BigReal::from_int(0, bits)}, 4000, 20),
                  std::domain_error);
}

TEST_CASE("generating function series vs closed") {
  const mpfr_prec_t bits = prec_bits(20);
  std::vector<BigReal> z{BigReal::from(Rat(1, 2), bits)};
  TruncatedValue series_val = g_eval_series({}, z, 40, 100000000, 6);
  BigReal root2 = sqrt(BigReal::from_int(2, bits));
  CHECK(series_val.bound_kind == BoundKind::rigorous);
  CHECK(abs(series_val.estimate - root2) <= series_val.error_indicator);
  CHECK(oracles::to_d(series_val.error_indicator) < 5e-6);

  std::vector<BigReal> z2{BigReal::from(Rat(1, 2), bits), BigReal::from(Rat(1, 3), bits)};
  TruncatedValue closed = g_eval_closed({3}, z2, 4000, 20);
  TruncatedValue ser = g_eval_series({3}, z2, 20, 100000000, 5);
  CHECK(abs(closed.estimate - ser.estimate) <= closed.error_indicator + ser.error_indicator);

  // constant term only when z = 0
  std::vector<BigReal> z0{BigReal::from_int(0, bits), BigReal::from_int(0, bits)};
  TruncatedValue ser0 = g_eval_series({3}, z0, 10, 100000000, 8);
  TruncatedValue t3 = t_star_direct(Index({3}), 400000, 20);
  CHECK(abs(ser0.estimate - t3.estimate) <= ser0.error_indicator + t3.error_indicator);
}

TEST_CASE("restricted generating function") {
  const mpfr_prec_t bits = prec_bits(20);
  TruncatedValue zero = restricted_g_eval({}, {BigReal::from_int(0, bits)}, 0, 4000, 20);
  CHECK(zero.estimate.is_zero());
  CHECK(zero.error_indicator.is_zero());

  TruncatedValue r = restricted_g_eval({}, {BigReal::from(Rat(1, 2), bits)}, 0, 4000, 20);
  BigReal expect = sqrt(BigReal::from_int(2, bits)) - BigReal::from_int(1, bits);
  CHECK(abs(r.estimate - expect) <= r.error_indicator + real_of(1e-6));

  // difference identity at d = 1
  std::vector<BigReal> z{BigReal::from(Rat(1, 2), bits), BigReal::from(Rat(1, 2), bits)};
  std::vector<BigReal> zz{BigReal::from(Rat(1, 2), bits), BigReal::from_int(0, bits)};
  TruncatedValue full = g_eval_closed({3}, z, 4000, 20);
  TruncatedValue part = g_eval_closed({3}, zz, 4000, 20);
  TruncatedValue rest = restricted_g_eval({3}, z, 1, 4000, 20);
  CHECK(abs(rest.estimate - (full.estimate - part.estimate)) <=
        rest.error_indicator + full.error_indicator + part.error_indicator);

  CHECK_THROWS_AS(restricted_g_eval({1}, z, 1, 4000, 20), std::domain_error);
  CHECK_THROWS_AS(restricted_g_eval({3}, z, 5, 4000, 20), std::domain_error);
}

TEST_CASE("product tail bound") {
  auto [l1, b1] = product_tail_check(1, BigReal::from(Rat(1, 2), prec_bits(20)));
  CHECK(oracles::to_d(b1) == 1.0);
  CHECK(l1 < b1);
  auto [l2, b2] = product_tail_check(10, BigReal::from(Rat(9, 10), prec_bits(20)));
  CHECK(oracles::to_d(abs(b2 - BigReal::from(Rat(1, 37), prec_bits(20)))) < 1e-15);
  CHECK(l2 < b2);
  auto [l3, b3] = product_tail_check(100, BigReal::from(Rat(1, 2), prec_bits(20)));
  CHECK(oracles::to_d(abs(b3 - BigReal::from(Rat(1, 397), prec_bits(20)))) < 1e-15);
  CHECK(l3 < b3);
}

TEST_CASE("double-factorial chain around pi/2") {
  WallisChain w1 = wallis_bounds(1);
  CHECK(w1.lower == Rat(2, 3));
  CHECK(w1.upper == Rat(1));
  BigReal pi = pi_const(30);
  CHECK(oracles::to_d(abs(w1.middle - pi / BigReal::from_int(4, pi.precision()))) < 1e-30);
  for (long n : {1L, 2L, 5L, 10L, 100L, 1000L}) {
    WallisChain w = wallis_bounds(n);
    const mpfr_prec_t bits = prec_bits(30);
    CHECK(BigReal::from(w.lower, bits) < w.middle);
    CHECK(w.middle < BigReal::from(w.upper, bits));
  }
  WallisChain w100 = wallis_bounds(100);
  const mpfr_prec_t bits = prec_bits(30);
  CHECK(oracles::to_d(abs(w100.middle - BigReal::from(w100.lower, bits))) < 0.01);
  CHECK(oracles::to_d(abs(w100.middle - BigReal::from(w100.upper, bits))) < 0.01);
}

TEST_CASE("shell growth probe") {
  const mpfr_prec_t bits = prec_bits(20);
  // d = 0: magnitudes strictly decreasing
  auto rows0 = gtilde_growth_probe({}, {BigReal::from(Rat(1, 2), bits)}, 50, 20);
  for (std::size_t i = 0; i + 1 < rows0.size(); ++i)
    CHECK(abs(rows0[i + 1].value) < abs(rows0[i].value));

  // d = 1, c = (3), z = 0: envelope respected beyond the first shell,
  // and the outer sign alternates
  auto rows1 = gtilde_growth_probe({3}, {BigReal::from_int(0, bits), BigReal::from_int(0, bits)},
                                   100, 20);
  for (std::size_t i = 1; i < rows1.size(); ++i) CHECK(abs(rows1[i].value) <= rows1[i].envelope);
  for (std::size_t i = 0; i + 1 < rows1.size(); ++i)
    CHECK(rows1[i].value.sign() * rows1[i + 1].value.sign() < 0);
}
