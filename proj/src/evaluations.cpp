#include "tstar/evaluations.hpp"

#include <stdexcept>

#include "tstar/constants.hpp"
#include "tstar/series.hpp"

namespace tstar::evals {

namespace {

TruncatedValue tv_exactish(const BigReal& v) {
  BigReal err(v.precision());
  mpfr_set_ui_2exp(err.raw(), 1, -(v.precision() - 8), MPFR_RNDN);
  mpfr_mul(err.raw(), err.raw(), v.raw(), MPFR_RNDN);
  mpfr_abs(err.raw(), err.raw(), MPFR_RNDN);
  return {v, err, 0, BoundKind::rigorous};
}

TruncatedValue tv_scale(const TruncatedValue& t, const BigReal& f) {
  return {t.estimate * f, t.error_indicator * abs(f), t.terms_used, t.bound_kind};
}

TruncatedValue tv_add(const TruncatedValue& a, const TruncatedValue& b) {
  BoundKind k = (a.bound_kind == BoundKind::rigorous && b.bound_kind == BoundKind::rigorous)
                    ? BoundKind::rigorous
                    : BoundKind::heuristic;
  return {a.estimate + b.estimate, a.error_indicator + b.error_indicator,
          std::max(a.terms_used, b.terms_used), k};
}

TruncatedValue tv_mul(const TruncatedValue& a, const TruncatedValue& b) {
  BoundKind k = (a.bound_kind == BoundKind::rigorous && b.bound_kind == BoundKind::rigorous)
                    ? BoundKind::rigorous
                    : BoundKind::heuristic;
  BigReal err = abs(a.estimate) * b.error_indicator + abs(b.estimate) * a.error_indicator +
                a.error_indicator * b.error_indicator;
  return {a.estimate * b.estimate, err, std::max(a.terms_used, b.terms_used), k};
}

std::string memo_key(const std::vector<int>& entries, const std::vector<int>& signs, long K,
                     int digits) {
  std::string key;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (signs[i] < 0) key += '~';
    key += std::to_string(entries[i]);
    key += ',';
  }
  key += '/';
  key += std::to_string(K);
  key += '/';
  key += std::to_string(digits);
  return key;
}

}  // namespace

void for_each_compositions(long m, long r,
                           const std::function<void(const std::vector<long>&)>& fn) {
  if (m < 1 || r < 1 || r > m) throw std::domain_error("for_each_compositions: need 1 <= r <= m");
  std::vector<long> parts(static_cast<std::size_t>(r));
  long count = 0;
  auto rec = [&](auto&& self, long pos, long rest) -> void {
    if (pos == r - 1) {
      parts[static_cast<std::size_t>(pos)] = rest;
      ++count;
      fn(parts);
      return;
    }
    for (long v = 1; v <= rest - (r - 1 - pos); ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, m);
  if (Int(count) != binomial(m - 1, r - 1))
    throw std::logic_error("for_each_compositions: count mismatch with C(m-1, r-1)");
}

TruncatedValue Evaluator::t_alt(std::vector<int> entries, std::vector<int> signs) {
  // single alternating entry of odd exponent: exactly -beta(2a+1), which the
  // Euler-number form delivers to full working precision (the plain sweep
  // converges like 1/K at exponent 1 and would cap the line accuracy)
  if (entries.size() == 1 && signs[0] == -1 && entries[0] % 2 == 1)
    return tv_exactish(-beta_odd((entries[0] - 1) / 2, cfg_.digits));
  std::string key = memo_key(entries, signs, cfg_.terms, cfg_.digits);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  TruncatedValue tv =
      series::nested_t_sum(SignedIndex(std::move(entries), std::move(signs)), cfg_.terms, cfg_.digits);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.insert({key, tv});
  return tv;
}

TruncatedValue Evaluator::star_oracle(const Index& idx, double tolerance) {
  BigReal target(prec_bits(cfg_.digits));
  mpfr_set_d(target.raw(), tolerance / 3.0, MPFR_RNDN);
  long terms = series::suggest_terms(idx, target, cfg_.oracle_cap, cfg_.digits);
  return series::t_star_direct(idx, terms, cfg_.digits);
}

namespace {
BigReal neg_over_pi(long num, int digits) {  // -num/pi
  BigReal pi = pi_const(digits);
  return BigReal::from_int(-num, pi.precision()) / pi;
}
}  // namespace

std::pair<TruncatedValue, TruncatedValue> Evaluator::thm41(long a) {
  if (a < 0) throw std::domain_error("thm41: a must be >= 0");
  // the alternating line stays a genuine sweep: routing it through the
  // Euler form would make both displayed lines the same computation
  TruncatedValue alt_sum =
      series::nested_t_sum(SignedIndex({static_cast<int>(2 * a + 1)}, {-1}), cfg_.terms, cfg_.digits);
  TruncatedValue alt_line = tv_scale(alt_sum, neg_over_pi(4, cfg_.digits));
  Rat coeff = Rat(euler_numbers(2 * a).back()) / (rat_pow(Rat(4), a) * Rat(factorial(2 * a)));
  if (a % 2 != 0) coeff = -coeff;
  BigReal euler = pow_ui(pi_const(cfg_.digits), static_cast<unsigned long>(2 * a)) *
                  BigReal::from(coeff, prec_bits(cfg_.digits));
  return {alt_line, tv_exactish(euler)};
}

std::pair<TruncatedValue, TruncatedValue> Evaluator::thm42(long a, long b) {
  if (a < 0 || b < 0) throw std::domain_error("thm42: a, b must be >= 0");
  const int d = cfg_.digits;
  TruncatedValue line1 =
      tv_add(tv_scale(t_alt({static_cast<int>(2 * a + 2 * b + 4)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({static_cast<int>(2 * a + 2), static_cast<int>(2 * b + 2)}, {-1, 1}),
                      neg_over_pi(8, d)));
  TruncatedValue line2{BigReal::from_int(0, prec_bits(d)), BigReal::from_int(0, prec_bits(d)), 0,
                       BoundKind::rigorous};
  for (long r = 1; r <= a + b + 1; ++r) {
    Rat bracket = Rat(binomial(2 * r, 2 * a + 1)) * (Rat(1) - rat_pow(Rat(2), -2 * r)) +
                  Rat(binomial(2 * r, 2 * b + 1));
    Rat cr = Rat(-4) * rat_pow(Rat(2), -2 * r) * bracket;
    TruncatedValue prod =
        tv_mul(zeta_int(2 * r + 1, d), t_alt({static_cast<int>(2 * a + 2 * b + 3 - 2 * r)}, {-1}));
    line2 = tv_add(line2, tv_scale(prod, BigReal::from(cr, prec_bits(d)) / pi_const(d)));
  }
  return {line1, line2};
}

TruncatedValue Evaluator::liwang42(long a, long b) {
  if (a < 0 || b < 0) throw std::domain_error("liwang42: a, b must be >= 0");
  const int d = cfg_.digits;
  TruncatedValue acc{BigReal::from_int(0, prec_bits(d)), BigReal::from_int(0, prec_bits(d)), 0,
                     BoundKind::rigorous};
  for (long r = 1; r <= a + b + 1; ++r) {
    Rat bracket = Rat(binomial(2 * r, 2 * a + 1)) * (Rat(1) - rat_pow(Rat(2), -2 * r)) +
                  Rat(binomial(2 * r, 2 * b + 1));
    TruncatedValue star2 = thm41(a + b + 1 - r).second;
    TruncatedValue prod = tv_mul(zeta_int(2 * r + 1, d), star2);
    acc = tv_add(acc, tv_scale(prod, BigReal::from(rat_pow(Rat(2), -2 * r) * bracket, prec_bits(d))));
  }
  return acc;
}

std::pair<TruncatedValue, TruncatedValue> Evaluator::thm44(long a, long b) {
  if (a < 1) throw std::domain_error("thm44: a must be >= 1");
  if (b < 0) throw std::domain_error("thm44: b must be >= 0");
  const int d = cfg_.digits;
  TruncatedValue line1 =
      tv_add(tv_scale(t_alt({static_cast<int>(2 * a + 2 * b + 2)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({static_cast<int>(2 * a + 1), static_cast<int>(2 * b + 1)}, {1, -1}),
                      neg_over_pi(8, d)));
  TruncatedValue line2{BigReal::from_int(0, prec_bits(d)), BigReal::from_int(0, prec_bits(d)), 0,
                       BoundKind::rigorous};
  for (long r = 1; r <= a + b; ++r) {
    Rat bracket = Rat(binomial(2 * r, 2 * a)) +
                  Rat(binomial(2 * r, 2 * b)) * (Rat(1) - rat_pow(Rat(2), -2 * r));
    Rat cr = Rat(-4) * rat_pow(Rat(2), -2 * r) * bracket;
    TruncatedValue prod =
        tv_mul(zeta_int(2 * r + 1, d), t_alt({static_cast<int>(2 * a + 2 * b + 1 - 2 * r)}, {-1}));
    line2 = tv_add(line2, tv_scale(prod, BigReal::from(cr, prec_bits(d)) / pi_const(d)));
  }
  if (b == 0) {
    BigReal f = log2_const(d) * neg_over_pi(4, d);
    line2 = tv_add(line2, tv_scale(t_alt({static_cast<int>(2 * a + 1)}, {-1}), f));
  }
  return {line1, line2};
}

TruncatedValue Evaluator::thm45(long a, long b, long c) {
  if (a < 0 || b < 0) throw std::domain_error("thm45: a, b must be >= 0");
  if (c < 1) throw std::domain_error("thm45: c must be >= 1 (c = 0 is the two-block case)");
  const int d = cfg_.digits;
  TruncatedValue acc{BigReal::from_int(0, prec_bits(d)), BigReal::from_int(0, prec_bits(d)), 0,
                     BoundKind::rigorous};
  for (long r = 1; r <= c + 2; ++r) {
    BigReal weight = BigReal::from_int(1L << r, prec_bits(d));
    for_each_compositions(c + 2, r, [&](const std::vector<long>& s) {
      std::vector<int> entries;
      std::vector<int> signs;
      if (r == 1) {
        entries = {static_cast<int>(2 * a + 2 * b + 4 + c)};
        signs = {-1};
      } else {
        entries.push_back(static_cast<int>(2 * a + 1 + s[0]));
        signs.push_back(-1);
        for (long i = 1; i < r - 1; ++i) {
          entries.push_back(static_cast<int>(s[static_cast<std::size_t>(i)]));
          signs.push_back(1);
        }
        entries.push_back(static_cast<int>(2 * b + 1 + s[static_cast<std::size_t>(r - 1)]));
        signs.push_back(1);
      }
      acc = tv_add(acc, tv_scale(t_alt(std::move(entries), std::move(signs)), weight));
    });
  }
  return tv_scale(acc, neg_over_pi(2, d));
}

std::pair<TruncatedValue, TruncatedValue> Evaluator::thm46(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw std::domain_error("thm46: a, b, c must be >= 0");
  const int d = cfg_.digits;
  auto I = [](long v) { return static_cast<int>(v); };
  TruncatedValue case31 = tv_add(
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 2 * c + 5)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({I(2 * a + 2), I(2 * b + 2 * c + 3)}, {-1, 1}), neg_over_pi(8, d))),
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 4), I(2 * c + 1)}, {1, -1}), neg_over_pi(8, d)),
             tv_scale(t_alt({I(2 * a + 2), I(2 * b + 2), I(2 * c + 1)}, {-1, -1, -1}),
                      neg_over_pi(16, d))));
  TruncatedValue case33 = tv_add(
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 2 * c + 7)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({I(2 * a + 2), I(2 * b + 2 * c + 5)}, {-1, 1}), neg_over_pi(8, d))),
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 5), I(2 * c + 2)}, {-1, 1}), neg_over_pi(8, d)),
             tv_scale(t_alt({I(2 * a + 2), I(2 * b + 3), I(2 * c + 2)}, {-1, 1, 1}),
                      neg_over_pi(16, d))));
  return {case31, case33};
}

std::pair<TruncatedValue, TruncatedValue> Evaluator::thm47(long a, long b, long c) {
  if (a < 1) throw std::domain_error("thm47: a must be >= 1");
  if (b < 0 || c < 0) throw std::domain_error("thm47: b, c must be >= 0");
  const int d = cfg_.digits;
  auto I = [](long v) { return static_cast<int>(v); };
  TruncatedValue case13 = tv_add(
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 2 * c + 5)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({I(2 * a + 1), I(2 * b + 2 * c + 4)}, {1, -1}), neg_over_pi(8, d))),
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 3), I(2 * c + 2)}, {-1, 1}), neg_over_pi(8, d)),
             tv_scale(t_alt({I(2 * a + 1), I(2 * b + 2), I(2 * c + 2)}, {1, -1, 1}),
                      neg_over_pi(16, d))));
  TruncatedValue case11 = tv_add(
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 2 * c + 3)}, {-1}), neg_over_pi(4, d)),
             tv_scale(t_alt({I(2 * a + 1), I(2 * b + 2 * c + 2)}, {1, -1}), neg_over_pi(8, d))),
      tv_add(tv_scale(t_alt({I(2 * a + 2 * b + 2), I(2 * c + 1)}, {1, -1}), neg_over_pi(8, d)),
             tv_scale(t_alt({I(2 * a + 1), I(2 * b + 1), I(2 * c + 1)}, {1, 1, -1}),
                      neg_over_pi(16, d))));
  return {case13, case11};
}

TruncatedValue Evaluator::thm48(long d) {
  if (d < 0) throw std::domain_error("thm48: d must be >= 0");
  const int dg = cfg_.digits;
  TruncatedValue acc{BigReal::from_int(0, prec_bits(dg)), BigReal::from_int(0, prec_bits(dg)), 0,
                     BoundKind::rigorous};
  for (long r = 1; r <= d + 1; ++r) {
    BigReal weight = BigReal::from_int(1L << r, prec_bits(dg));
    for_each_compositions(d + 1, r, [&](const std::vector<long>& s) {
      std::vector<int> entries;
      std::vector<int> signs;
      if (r == 1) {
        entries = {static_cast<int>(d + 5)};
        signs = {-1};
      } else {
        entries.push_back(static_cast<int>(s[0] + 2));
        signs.push_back(1);
        for (long i = 1; i < r - 1; ++i) {
          entries.push_back(static_cast<int>(s[static_cast<std::size_t>(i)]));
          signs.push_back(1);
        }
        entries.push_back(static_cast<int>(s[static_cast<std::size_t>(r - 1)] + 2));
        signs.push_back(-1);
      }
      acc = tv_add(acc, tv_scale(t_alt(std::move(entries), std::move(signs)), weight));
    });
  }
  return tv_scale(acc, neg_over_pi(2, dg));
}

TruncatedValue Evaluator::thm49(long d, long a) {
  if (d < 1) throw std::domain_error("thm49: d must be >= 1");
  if (a < 0) throw std::domain_error("thm49: a must be >= 0");
  const int dg = cfg_.digits;
  TruncatedValue acc{BigReal::from_int(0, prec_bits(dg)), BigReal::from_int(0, prec_bits(dg)), 0,
                     BoundKind::rigorous};
  for (long r = 1; r <= 2 * d; ++r) {
    BigReal weight = BigReal::from_int(1L << r, prec_bits(dg));
    for_each_compositions(2 * d, r, [&](const std::vector<long>& s) {
      std::vector<int> entries;
      std::vector<int> signs;
      for (long i = 0; i < r; ++i) {
        long si = s[static_cast<std::size_t>(i)];
        entries.push_back(static_cast<int>((2 * a + 2) * si));
        long par = (i == r - 1) ? si - 1 : si;
        signs.push_back(par % 2 != 0 ? -1 : 1);
      }
      acc = tv_add(acc, tv_scale(t_alt(std::move(entries), std::move(signs)), weight));
    });
  }
  return tv_scale(acc, neg_over_pi(2, dg));
}

Index Evaluator::target_index(const std::string& id, const std::vector<long>& p) {
  auto twos = [](std::vector<int>& v, long n) {
    for (long i = 0; i < n; ++i) v.push_back(2);
  };
  std::vector<int> e;
  if (id == "thm41") {
    twos(e, p.at(0));
  } else if (id == "thm42" || id == "liwang42" || id == "thm45") {
    long mid = id == "thm45" ? p.at(2) + 3 : 3;
    twos(e, p.at(0));
    e.push_back(static_cast<int>(mid));
    twos(e, p.at(1));
  } else if (id == "thm44") {
    twos(e, p.at(0));
    e.push_back(1);
    twos(e, p.at(1));
  } else if (id == "thm46a" || id == "thm46b" || id == "thm47a" || id == "thm47b") {
    const bool first_three = id[4] == '6';
    const bool variant_a = id.back() == 'a';
    int c1 = first_three ? 3 : 1;
    int c2 = variant_a ? (first_three ? 1 : 3) : (first_three ? 3 : 1);
    twos(e, p.at(0));
    e.push_back(c1);
    twos(e, p.at(1));
    e.push_back(c2);
    twos(e, p.at(2));
  } else if (id == "thm48") {
    e.push_back(2);
    for (long i = 0; i < p.at(0); ++i) e.push_back(1);
    e.push_back(2);
  } else if (id == "thm49") {
    long d = p.at(0), a = p.at(1);
    for (long i = 0; i + 1 < d; ++i) {
      twos(e, a);
      e.push_back(3);
      twos(e, a);
      e.push_back(1);
    }
    twos(e, a);
    e.push_back(3);
    twos(e, a);
  } else {
    throw std::domain_error("target_index: unknown formula id '" + id + "'");
  }
  return Index(std::move(e));
}

EvaluationReport Evaluator::cross_check(const std::string& id, const std::vector<long>& p,
                                        double tolerance) {
  EvaluationReport rep;
  rep.formula_id = id;
  rep.inputs = p;
  rep.tolerance = tolerance;
  if (id == "thm41") {
    auto [l1, l2] = thm41(p.at(0));
    rep.closed = {l1, l2};
  } else if (id == "thm42") {
    auto [l1, l2] = thm42(p.at(0), p.at(1));
    rep.closed = {l1, l2};
  } else if (id == "liwang42") {
    rep.closed = {liwang42(p.at(0), p.at(1))};
  } else if (id == "thm44") {
    auto [l1, l2] = thm44(p.at(0), p.at(1));
    rep.closed = {l1, l2};
  } else if (id == "thm45") {
    rep.closed = {thm45(p.at(0), p.at(1), p.at(2))};
  } else if (id == "thm46a") {
    rep.closed = {thm46(p.at(0), p.at(1), p.at(2)).first};
  } else if (id == "thm46b") {
    rep.closed = {thm46(p.at(0), p.at(1), p.at(2)).second};
  } else if (id == "thm47a") {
    rep.closed = {thm47(p.at(0), p.at(1), p.at(2)).first};
  } else if (id == "thm47b") {
    rep.closed = {thm47(p.at(0), p.at(1), p.at(2)).second};
  } else if (id == "thm48") {
    rep.closed = {thm48(p.at(0))};
  } else if (id == "thm49") {
    rep.closed = {thm49(p.at(0), p.at(1))};
  } else {
    throw std::domain_error("cross_check: unknown formula id '" + id + "'");
  }
  rep.oracle = star_oracle(target_index(id, p), tolerance);
  rep.oracle_terms = rep.oracle.terms_used;
  BigReal dis = BigReal::from_int(0, prec_bits(cfg_.digits));
  BigReal closed_err = BigReal::from_int(0, prec_bits(cfg_.digits));
  for (const TruncatedValue& line : rep.closed) {
    BigReal d = abs(line.estimate - rep.oracle.estimate);
    if (d > dis) dis = d;
    if (line.error_indicator > closed_err) closed_err = line.error_indicator;
  }
  rep.abs_disagreement = dis;
  BigReal tol(prec_bits(cfg_.digits));
  mpfr_set_d(tol.raw(), tolerance, MPFR_RNDN);
  rep.pass = dis <= tol + rep.oracle.error_indicator + closed_err;
  return rep;
}

}  // namespace tstar::evals
