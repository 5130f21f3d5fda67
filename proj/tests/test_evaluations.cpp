#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tstar/constants.hpp>
#include <tstar/evaluations.hpp>
#include <tstar/series.hpp>

#include "oracles.hpp"

using namespace tstar;
using namespace tstar::evals;

namespace {
double err_of(const TruncatedValue& t) { return oracles::to_d(t.error_indicator); }
double gap(const TruncatedValue& a, const TruncatedValue& b) {
  return oracles::to_d(abs(a.estimate - b.estimate));
}
}  // namespace

TEST_CASE("composition enumeration is lexicographic and complete") {
  std::vector<std::vector<long>> got;
  for_each_compositions(4, 2, [&](const std::vector<long>& s) { got.push_back(s); });
  std::vector<std::vector<long>> expect{{1, 3}, {2, 2}, {3, 1}};
  CHECK(got == expect);
  long count = 0;
  for_each_compositions(7, 3, [&](const std::vector<long>&) { ++count; });
  CHECK(count == 15);  // C(6,2)
  CHECK_THROWS_AS(for_each_compositions(2, 3, [](const std::vector<long>&) {}), std::domain_error);
}

TEST_CASE("run of twos: both displayed lines") {
  Evaluator ev({25, 400000, 2000000});
  auto [alt0, eu0] = ev.thm41(0);
  CHECK(oracles::to_d(eu0.estimate) == 1.0);
  CHECK(gap(alt0, eu0) < err_of(alt0) + err_of(eu0));

  auto [alt1, eu1] = ev.thm41(1);
  BigReal pi = pi_const(30);
  BigReal pp8 = pi * pi / BigReal::from_int(8, pi.precision());
  CHECK(oracles::to_d(abs(eu1.estimate - pp8)) < 1e-25);
  CHECK(gap(alt1, eu1) < err_of(alt1) + err_of(eu1));

  auto [alt2, eu2] = ev.thm41(2);
  BigReal ref = pow_ui(pi, 4) * BigReal::from(Rat(5, 384), pi.precision());
  CHECK(oracles::to_d(abs(eu2.estimate - ref)) < 1e-25);
  CHECK(gap(alt2, eu2) < err_of(alt2) + err_of(eu2));
}

TEST_CASE("two-block values and the zeta-weighted equivalence") {
  Evaluator ev({25, 600000, 4000000});
  auto [l1, l2] = ev.thm42(0, 0);
  TruncatedValue z3 = zeta_int(3, 16);
  BigReal ref = z3.estimate * BigReal::from(Rat(7, 8), prec_bits(25));
  CHECK(oracles::to_d(abs(l2.estimate - ref)) < 1e-10);
  CHECK(gap(l1, l2) < 1e-9);

  auto [m1, m2] = ev.thm42(1, 0);
  CHECK(oracles::to_d(m1.estimate) == doctest::Approx(1.2437).epsilon(1e-4));
  CHECK(gap(m1, m2) < 1e-9);

  for (long a = 0; a <= 2; ++a) {
    for (long b = 0; b <= 2; ++b) {
      auto [x1, x2] = ev.thm42(a, b);
      TruncatedValue lw = ev.liwang42(a, b);
      CHECK(gap(x1, x2) < 1e-10);
      CHECK(gap(x1, lw) < 1e-10);
      CHECK(gap(x2, lw) < 1e-10);
    }
  }
}

TEST_CASE("one-block-of-ones values with the log 2 correction") {
  Evaluator ev({25, 400000, 2000000});
  auto [l1, l2] = ev.thm44(1, 0);
  CHECK(gap(l1, l2) < 1e-8);
  TruncatedValue oracle = ev.star_oracle(Index({2, 1}), 1e-4);
  CHECK(gap(l1, oracle) < 1e-4 + err_of(l1) + err_of(oracle));

  auto [k1, k2] = ev.thm44(1, 1);
  CHECK(gap(k1, k2) < 1e-8);
  TruncatedValue o2 = ev.star_oracle(Index({2, 1, 2}), 1e-4);
  CHECK(gap(k1, o2) < 1e-4 + err_of(k1) + err_of(o2));

  auto [j1, j2] = ev.thm44(2, 0);
  CHECK(gap(j1, j2) < 1e-8);
  CHECK_THROWS_AS(ev.thm44(0, 1), std::domain_error);
}

TEST_CASE("composition-weighted sums for a higher middle entry") {
  Evaluator ev({25, 400000, 2000000});
  TruncatedValue v = ev.thm45(0, 0, 1);  // t*(4) = pi^4/96
  BigReal pi = pi_const(30);
  BigReal ref = pow_ui(pi, 4) / BigReal::from_int(96, pi.precision());
  CHECK(oracles::to_d(abs(v.estimate - ref)) < 1e-6);

  TruncatedValue w = ev.thm45(0, 0, 2);  // t*(5) = 31 zeta(5)/32
  TruncatedValue z5 = zeta_int(5, 16);
  BigReal ref5 = z5.estimate * BigReal::from(Rat(31, 32), prec_bits(25));
  CHECK(oracles::to_d(abs(w.estimate - ref5)) < 1e-6);

  TruncatedValue u = ev.thm45(1, 0, 1);
  TruncatedValue oracle = ev.star_oracle(Index({2, 4}), 1e-5);
  CHECK(gap(u, oracle) < 1e-5 + err_of(u) + err_of(oracle));

  CHECK_THROWS_AS(ev.thm45(0, 0, 0), std::domain_error);
}

TEST_CASE("three-block evaluations against direct oracles") {
  Evaluator ev({25, 400000, 2000000});
  auto [c31, c33] = ev.thm46(0, 0, 0);
  TruncatedValue o31 = ev.star_oracle(Index({3, 1}), 1e-4);
  TruncatedValue o33 = ev.star_oracle(Index({3, 3}), 1e-4);
  CHECK(gap(c31, o31) < 1e-4 + err_of(c31) + err_of(o31));
  CHECK(gap(c33, o33) < 1e-4 + err_of(c33) + err_of(o33));

  auto [d13, d11] = ev.thm47(1, 0, 0);
  TruncatedValue o13 = ev.star_oracle(Index({2, 1, 3}), 1e-4);
  TruncatedValue o11 = ev.star_oracle(Index({2, 1, 1}), 1e-4);
  CHECK(gap(d13, o13) < 1e-4 + err_of(d13) + err_of(o13));
  CHECK(gap(d11, o11) < 1e-4 + err_of(d11) + err_of(o11));
  CHECK_THROWS_AS(ev.thm47(0, 0, 0), std::domain_error);
}

TEST_CASE("two-two bracket values") {
  Evaluator ev({25, 400000, 2000000});
  TruncatedValue v0 = ev.thm48(0);  // t*(2,2) = 5 pi^4/384
  BigReal pi = pi_const(30);
  BigReal ref = pow_ui(pi, 4) * BigReal::from(Rat(5, 384), pi.precision());
  CHECK(oracles::to_d(abs(v0.estimate - ref)) < 1e-6);

  TruncatedValue v1 = ev.thm48(1);
  TruncatedValue o1 = ev.star_oracle(Index({2, 1, 2}), 1e-4);
  CHECK(gap(v1, o1) < 1e-4 + err_of(v1) + err_of(o1));
}

TEST_CASE("repeated-pattern evaluations") {
  Evaluator ev({25, 400000, 2000000});
  TruncatedValue v = ev.thm49(1, 0);  // t*(3)
  TruncatedValue z3 = zeta_int(3, 16);
  BigReal ref = z3.estimate * BigReal::from(Rat(7, 8), prec_bits(25));
  CHECK(oracles::to_d(abs(v.estimate - ref)) < 1e-6);

  TruncatedValue w = ev.thm49(1, 1);
  TruncatedValue o = ev.star_oracle(Index({2, 3, 2}), 1e-4);
  CHECK(gap(w, o) < 1e-4 + err_of(w) + err_of(o));
  CHECK_THROWS_AS(ev.thm49(0, 1), std::domain_error);
}

TEST_CASE("target indices per formula") {
  CHECK(Evaluator::target_index("thm41", {3}) == Index({2, 2, 2}));
  CHECK(Evaluator::target_index("thm42", {1, 2}) == Index({2, 3, 2, 2}));
  CHECK(Evaluator::target_index("thm44", {1, 0}) == Index({2, 1}));
  CHECK(Evaluator::target_index("thm45", {0, 1, 2}) == Index({5, 2}));
  CHECK(Evaluator::target_index("thm46a", {0, 1, 0}) == Index({3, 2, 1}));
  CHECK(Evaluator::target_index("thm46b", {0, 0, 1}) == Index({3, 3, 2}));
  CHECK(Evaluator::target_index("thm47a", {1, 0, 0}) == Index({2, 1, 3}));
  CHECK(Evaluator::target_index("thm47b", {1, 0, 1}) == Index({2, 1, 1, 2}));
  CHECK(Evaluator::target_index("thm48", {2}) == Index({2, 1, 1, 2}));
  CHECK(Evaluator::target_index("thm49", {1, 0}) == Index({3}));
  CHECK(Evaluator::target_index("thm49", {2, 1}) == Index({2, 3, 2, 1, 2, 3, 2}));
  CHECK_THROWS_AS(Evaluator::target_index("thm99", {0}), std::domain_error);
}

TEST_CASE("cross checks fill reports and pass") {
  Evaluator ev({25, 400000, 2000000});
  EvaluationReport r1 = ev.cross_check("thm41", {1}, 1e-9);
  CHECK(r1.pass);
  CHECK(r1.closed.size() == 2);

  EvaluationReport r2 = ev.cross_check("thm42", {1, 0}, 1e-7);
  CHECK(r2.pass);
  CHECK(oracles::to_d(r2.abs_disagreement) < 1e-7 + err_of(r2.oracle) + err_of(r2.closed[0]));

  EvaluationReport r3 = ev.cross_check("thm48", {1}, 1e-6);
  CHECK(r3.pass);
  CHECK(r3.oracle_terms > 0);

  CHECK_THROWS_AS(ev.cross_check("nope", {1}, 1e-6), std::domain_error);
}
