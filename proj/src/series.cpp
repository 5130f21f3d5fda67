#include "tstar/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "tstar/chain.hpp"
#include "tstar/constants.hpp"

namespace tstar::series {

using detail::ChainShape;

namespace {

BigReal big_zero(mpfr_prec_t bits) { return BigReal::from_int(0, bits); }
BigReal big_one(mpfr_prec_t bits) { return BigReal::from_int(1, bits); }

BigReal pow10_neg(int digits, mpfr_prec_t bits) {
  BigReal t(bits);
  mpfr_set_ui(t.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(t.raw(), t.raw(), -digits, MPFR_RNDN);
  return t;
}

struct SweepOut {
  BigReal total;
  std::vector<BigReal> tail_shells;  // last <= 16 outer contributions, in order
};

// One ascending pass over the outer variable, with one running accumulator
// per position: acc[j] holds the nested sum of the suffix starting at j over
// chains bounded by the current k. Weak chains update inner positions first
// at each k, strict chains consume the previous-k values.
SweepOut nested_sweep(const std::vector<int>& s, const std::vector<int>& sigma, bool strict, long K,
                      mpfr_prec_t bits) {
  const std::size_t r = s.size();
  std::vector<BigReal> acc(r, big_zero(bits));
  std::vector<BigReal> ring;
  ring.reserve(16);
  BigReal w(bits), shell(bits), one = big_one(bits);
  Int kp;
  for (long k = 1; k <= K; ++k) {
    BigReal prev0 = acc[0];
    if (strict) {
      for (std::size_t j = 0; j < r; ++j) {
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(2 * k - 1),
                      static_cast<unsigned long>(s[j]));
        mpfr_div_z(w.raw(), one.raw(), kp.get_mpz_t(), MPFR_RNDN);
        if (sigma[j] < 0 && (k % 2 != 0)) mpfr_neg(w.raw(), w.raw(), MPFR_RNDN);
        // ascending order: acc[j+1] still holds the strictly-smaller prefix
        if (j + 1 < r)
          mpfr_fma(acc[j].raw(), w.raw(), acc[j + 1].raw(), acc[j].raw(), MPFR_RNDN);
        else
          mpfr_add(acc[j].raw(), acc[j].raw(), w.raw(), MPFR_RNDN);
      }
    } else {
      for (std::size_t j = r; j-- > 0;) {
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(2 * k - 1),
                      static_cast<unsigned long>(s[j]));
        mpfr_div_z(w.raw(), one.raw(), kp.get_mpz_t(), MPFR_RNDN);
        if (sigma[j] < 0 && (k % 2 != 0)) mpfr_neg(w.raw(), w.raw(), MPFR_RNDN);
        if (j + 1 < r)
          mpfr_fma(acc[j].raw(), w.raw(), acc[j + 1].raw(), acc[j].raw(), MPFR_RNDN);
        else
          mpfr_add(acc[j].raw(), acc[j].raw(), w.raw(), MPFR_RNDN);
      }
    }
    if (K - k < 16) {
      mpfr_sub(shell.raw(), acc[0].raw(), prev0.raw(), MPFR_RNDN);
      ring.push_back(shell);
    }
  }
  return {r == 0 ? big_one(bits) : acc[0], std::move(ring)};
}

// err = |last shell| + max |final five shells|, the shell-decay heuristic
BigReal shell_heuristic(const std::vector<BigReal>& ring, mpfr_prec_t bits) {
  if (ring.empty()) return big_zero(bits);
  BigReal err = abs(ring.back());
  BigReal m = big_zero(bits);
  for (std::size_t i = ring.size() >= 5 ? ring.size() - 5 : 0; i < ring.size(); ++i) {
    BigReal a = abs(ring[i]);
    if (a > m) m = a;
  }
  return err + m;
}

bool shells_alternating_decreasing(const std::vector<BigReal>& ring, std::size_t window) {
  if (ring.size() < window) return false;
  for (std::size_t i = ring.size() - window; i + 1 < ring.size(); ++i) {
    if (ring[i].sign() == 0 || ring[i + 1].sign() == 0) return false;
    if (ring[i].sign() == ring[i + 1].sign()) return false;
    if (abs(ring[i + 1]) > abs(ring[i])) return false;
  }
  return true;
}

}  // namespace

BigReal log_poly_tail_bound(long s, int p, long K, mpfr_prec_t bits) {
  if (s < 2 || p < 0 || K < 2) throw std::domain_error("log_poly_tail_bound: need s >= 2, p >= 0, K >= 2");
  const BigReal u = BigReal::from_int(2 * K - 1, bits);
  const BigReal lnu = ln(u);
  const BigReal sm1 = BigReal::from_int(s - 1, bits);
  BigReal u1s = big_one(bits) / pow_ui(u, static_cast<unsigned long>(s - 1));
  std::vector<BigReal> integrals;
  integrals.push_back(u1s / sm1);
  for (int i = 1; i <= p; ++i)
    integrals.push_back((pow_ui(lnu, static_cast<unsigned long>(i)) * u1s +
                         BigReal::from_int(i, bits) * integrals.back()) /
                        sm1);
  // (1 + ln(2x+1)) <= 21/10 + ln(2x-1) for x >= 1, then binomial expansion
  const BigReal c0 = BigReal::from(Rat(21, 10), bits);
  BigReal total = big_zero(bits);
  for (int i = 0; i <= p; ++i)
    total += BigReal::from(Rat(binomial(p, i)), bits) * pow_ui(c0, static_cast<unsigned long>(p - i)) *
             integrals[static_cast<std::size_t>(i)];
  return total / BigReal::from_int(2, bits);
}

namespace {
std::mutex g_lpsb_mutex;
std::map<std::tuple<long, int, mpfr_prec_t>, BigReal> g_lpsb_cache;
}  // namespace

BigReal log_poly_series_bound(long s, int p, mpfr_prec_t bits) {
  if (s < 2 || p < 0) throw std::domain_error("log_poly_series_bound: need s >= 2, p >= 0");
  {
    std::lock_guard<std::mutex> lock(g_lpsb_mutex);
    auto it = g_lpsb_cache.find({s, p, bits});
    if (it != g_lpsb_cache.end()) return it->second;
  }
  const long head = 2000;
  BigReal sum = big_zero(bits), t(bits), l(bits);
  Int kp;
  for (long k = 1; k <= head; ++k) {
    mpfr_set_ui(l.raw(), static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
    mpfr_log(l.raw(), l.raw(), MPFR_RNDN);
    mpfr_add_ui(l.raw(), l.raw(), 1, MPFR_RNDN);
    mpfr_pow_ui(l.raw(), l.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(2 * k - 1), static_cast<unsigned long>(s));
    mpfr_div_z(t.raw(), l.raw(), kp.get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
  }
  BigReal result = sum + log_poly_tail_bound(s, p, head, bits);
  std::lock_guard<std::mutex> lock(g_lpsb_mutex);
  g_lpsb_cache.insert({{s, p, bits}, result});
  return result;
}

InnerBound inner_suffix_bound(const std::vector<int>& entries, std::size_t from, mpfr_prec_t bits) {
  InnerBound b{big_one(bits), 0};
  if (entries.size() <= from) return b;
  for (std::size_t j = entries.size(); j-- > from;) {
    if (entries[j] >= 2) {
      b.scale *= log_poly_series_bound(entries[j], b.log_power, bits);
      b.log_power = 0;
    } else {
      b.log_power += 1;
    }
  }
  return b;
}

long suggest_terms(const Index& s, const BigReal& target, long cap, int digits) {
  if (s.empty()) return 1;
  const mpfr_prec_t bits = prec_bits(digits);
  InnerBound inner = inner_suffix_bound(s.entries, 1, bits);
  long k = 4096;
  while (k < cap && inner.scale * log_poly_tail_bound(s.entries[0], inner.log_power, k, bits) > target)
    k *= 2;
  return std::min(k, cap);
}

TruncatedValue nested_t_sum(const SignedIndex& s, long K, int digits) {
  if (!s.admissible()) throw std::domain_error("nested_t_sum: leading entry (1, +1) diverges");
  const mpfr_prec_t bits = prec_bits(digits);
  if (s.empty()) return {big_one(bits), big_zero(bits), 0, BoundKind::rigorous};
  if (K < 1) throw std::domain_error("nested_t_sum: K must be >= 1");
  SweepOut out = nested_sweep(s.entries, s.signs, /*strict=*/true, K, bits);
  if (s.signs[0] < 0) {
    if (shells_alternating_decreasing(out.tail_shells, 10))
      return {out.total, abs(out.tail_shells.back()), K, BoundKind::rigorous};
    return {out.total, shell_heuristic(out.tail_shells, bits), K, BoundKind::heuristic};
  }
  InnerBound inner = inner_suffix_bound(s.entries, 1, bits);
  BigReal err = inner.scale * log_poly_tail_bound(s.entries[0], inner.log_power, K, bits);
  return {out.total, err, K, BoundKind::rigorous};
}

TruncatedValue t_star_direct(const Index& s, long K, int digits) {
  const mpfr_prec_t bits = prec_bits(digits);
  if (s.empty()) return {big_one(bits), big_zero(bits), 0, BoundKind::rigorous};
  if (s.entries[0] == 1) throw std::domain_error("t_star_direct: leading entry 1 diverges");
  if (K < 1) throw std::domain_error("t_star_direct: K must be >= 1");
  std::vector<int> plus(s.size(), 1);
  SweepOut out = nested_sweep(s.entries, plus, /*strict=*/false, K, bits);
  InnerBound inner = inner_suffix_bound(s.entries, 1, bits);
  BigReal err = inner.scale * log_poly_tail_bound(s.entries[0], inner.log_power, K, bits);
  return {out.total, err, K, BoundKind::rigorous};
}

namespace {

struct SeriesChainParams {
  const ChainShape& shape;
  const std::vector<BigReal>* zsq = nullptr;  // generating mode
  const std::vector<int>* aa = nullptr;       // coefficient mode
  int restrict_u = -1;
  mpfr_prec_t bits;
};

BigReal series_chain_weight(const SeriesChainParams& p, int j, long k) {
  const auto& node = p.shape.nodes[static_cast<std::size_t>(j)];
  const long odd = 2 * k - 1;
  BigReal f(p.bits);
  if (!node.is_outer) {
    mpfr_set_si(f.raw(), odd, MPFR_RNDN);
    mpfr_si_div(f.raw(), 1, f.raw(), MPFR_RNDN);
    return f;
  }
  const int i = node.block;
  const int delta = p.shape.delta[static_cast<std::size_t>(i)];
  if (p.zsq) {
    BigReal den(p.bits);
    mpfr_set_si(den.raw(), odd, MPFR_RNDN);
    mpfr_sqr(den.raw(), den.raw(), MPFR_RNDN);
    mpfr_sub(den.raw(), den.raw(), (*p.zsq)[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
    Rat num = rat_pow(Rat(odd), delta - 1);
    f = BigReal::from(num, p.bits) / den;
  } else {
    f = BigReal::from(rat_pow(Rat(odd), -(2 * (*p.aa)[static_cast<std::size_t>(i)] - delta + 3)), p.bits);
  }
  if ((static_cast<long>(delta) * k) % 2 != 0) f = -f;
  if (i == 0) {
    f += f;  // |factor| 2 of V^#_{0,k_0}
    f = -f;
    if (p.shape.d() == 0) f = f / BigReal::from_int(odd, p.bits);
  } else if (i == p.shape.d()) {
    f = f / BigReal::from_int(odd, p.bits);
  }
  if (i == p.restrict_u) f = f / BigReal::from_int(odd * odd, p.bits);
  return f;
}

struct ShellRun {
  BigReal total;
  std::vector<BigReal> ring;  // last <= 16 shells
  std::vector<BigReal> all;   // filled only when keep_all
};

ShellRun run_chain(const SeriesChainParams& p, long K, bool keep_all) {
  ShellRun run{big_zero(p.bits), {}, {}};
  run.ring.reserve(16);
  detail::chain_shells<BigReal>(
      K, p.shape.last(), big_zero(p.bits), big_one(p.bits),
      [&](int j, long k) { return series_chain_weight(p, j, k); },
      [&](long k, const BigReal& shell) {
        run.total += shell;
        if (K - k < 16) run.ring.push_back(shell);
        if (keep_all) run.all.push_back(shell);
      });
  return run;
}

BigReal two_over_pi(int digits) {
  BigReal pi = pi_const(digits);
  return BigReal::from_int(2, pi.precision()) / pi;
}

std::vector<BigReal> squares_checked(const std::vector<BigReal>& z, mpfr_prec_t bits) {
  std::vector<BigReal> zsq;
  zsq.reserve(z.size());
  BigReal one = big_one(bits);
  for (const BigReal& v : z) {
    if (!(abs(v) < one)) throw std::domain_error("generating-function evaluation needs |z| < 1");
    BigReal q(bits);
    mpfr_sqr(q.raw(), v.raw(), MPFR_RNDN);
    zsq.push_back(q);
  }
  return zsq;
}

void check_convergent_c(const std::vector<int>& c) {
  for (int ci : c) (void)delta_weight(ci);
  if (!c.empty() && c[0] < 3)
    throw std::domain_error("infinite generating function needs c_1 >= 3");
}

}  // namespace

TruncatedValue t_star_closed_blocks(const BlockForm& b, long K, int digits) {
  auto conv = validate_convergent_star(b);
  if (!conv.ok) throw std::domain_error("t_star_closed_blocks: divergent block form: " + conv.reason);
  if (K < 6) throw std::domain_error("t_star_closed_blocks: K too small");
  const mpfr_prec_t bits = prec_bits(digits);
  ChainShape shape = ChainShape::make(b.c);
  SeriesChainParams p{shape, nullptr, &b.a, -1, bits};
  ShellRun run = run_chain(p, K, false);
  BigReal scale = two_over_pi(digits);
  return {scale * run.total, scale * shell_heuristic(run.ring, bits), K, BoundKind::heuristic};
}

TruncatedValue g_eval_closed(const std::vector<int>& c, const std::vector<BigReal>& z, long K,
                             int digits) {
  check_convergent_c(c);
  if (z.size() != c.size() + 1) throw std::domain_error("g_eval_closed: z must have length d+1");
  if (K < 6) throw std::domain_error("g_eval_closed: K too small");
  const mpfr_prec_t bits = prec_bits(digits);
  std::vector<BigReal> zsq = squares_checked(z, bits);
  ChainShape shape = ChainShape::make(c);
  SeriesChainParams p{shape, &zsq, nullptr, -1, bits};
  ShellRun run = run_chain(p, K, false);
  BigReal scale = two_over_pi(digits);
  return {scale * run.total, scale * shell_heuristic(run.ring, bits), K, BoundKind::heuristic};
}

TruncatedValue restricted_g_eval(const std::vector<int>& c, const std::vector<BigReal>& z, int u,
                                 long K, int digits) {
  for (int ci : c) (void)delta_weight(ci);
  if (z.size() != c.size() + 1) throw std::domain_error("restricted_g_eval: z must have length d+1");
  if (u < 0 || static_cast<std::size_t>(u) >= z.size())
    throw std::domain_error("restricted_g_eval: u out of range");
  if (u >= 1 && c[0] < 3) throw std::domain_error("restricted_g_eval: u >= 1 needs c_1 >= 3");
  const mpfr_prec_t bits = prec_bits(digits);
  if (z[static_cast<std::size_t>(u)].is_zero())
    return {big_zero(bits), big_zero(bits), 0, BoundKind::rigorous};
  std::vector<BigReal> zsq = squares_checked(z, bits);
  ChainShape shape = ChainShape::make(c);
  SeriesChainParams p{shape, &zsq, nullptr, u, bits};
  ShellRun run = run_chain(p, K, false);
  BigReal scale = two_over_pi(digits) * zsq[static_cast<std::size_t>(u)];
  return {scale * run.total, scale * shell_heuristic(run.ring, bits), K, BoundKind::heuristic};
}

TruncatedValue g_eval_series(const std::vector<int>& c, const std::vector<BigReal>& z, long a_max,
                             long K, int digits) {
  check_convergent_c(c);
  if (z.size() != c.size() + 1) throw std::domain_error("g_eval_series: z must have length d+1");
  if (a_max < 0) throw std::domain_error("g_eval_series: a_max must be >= 0");
  // `digits` sets the truncation target; arithmetic runs at >= 15 digits
  const int wp = std::max(digits, 15);
  const mpfr_prec_t bits = prec_bits(wp);
  std::vector<BigReal> zsq = squares_checked(z, bits);
  const std::size_t d = c.size();

  // same absolute-contribution budget for every monomial, distributed along
  // sqrt of the monomial weight so deeper coefficients may truncate earlier
  BigReal spread = big_one(bits);
  for (const BigReal& v : z) spread = spread / (big_one(bits) - abs(v));
  BigReal base_target = pow10_neg(digits, bits) / (BigReal::from_int(2, bits) * spread);

  BigReal estimate = big_zero(bits), err = big_zero(bits);
  bool rigorous = true;
  BigReal max_coeff = big_zero(bits);
  std::vector<int> a(d + 1, 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j > d) {
      BigReal weight = big_one(bits);
      for (std::size_t i = 0; i <= d; ++i)
        if (a[i] > 0) weight *= pow_ui(zsq[i], static_cast<unsigned long>(a[i]));
      Index idx = expand_blocks(BlockForm(a, c));
      BigReal target = base_target / sqrt(weight);
      long terms = suggest_terms(idx, target, K, wp);
      TruncatedValue tv = t_star_direct(idx, terms, wp);
      estimate += tv.estimate * weight;
      err += tv.error_indicator * weight;
      if (abs(tv.estimate) > max_coeff) max_coeff = abs(tv.estimate);
      return;
    }
    int hi = zsq[j].is_zero() ? 0 : static_cast<int>(a_max);
    for (int v = 0; v <= hi; ++v) {
      a[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);

  // tail over tuples with some a_j > a_max: geometric in every block
  BigReal coeff_bound(bits);
  bool clean_split = true;
  for (std::size_t i = 0; i < d; ++i)
    if (c[i] < 3) clean_split = false;
  if (clean_split) {
    // split-chain bound: each run of twos contributes < 4/pi, each separator
    // c_i >= 3 contributes <= 1 + 1/(2(c_i-1))
    BigReal four_over_pi = two_over_pi(wp) + two_over_pi(wp);
    coeff_bound = big_one(bits);
    for (std::size_t i = 0; i <= d; ++i) coeff_bound *= four_over_pi;
    for (std::size_t i = 0; i < d; ++i)
      coeff_bound *= BigReal::from(Rat(1) + Rat(1, 2 * (static_cast<long>(c[i]) - 1)), bits);
  } else {
    coeff_bound = (max_coeff + max_coeff);  // empirical headroom only
    rigorous = false;
  }
  BigReal tail = big_zero(bits);
  for (std::size_t jj = 0; jj <= d; ++jj) {
    if (zsq[jj].is_zero()) continue;
    BigReal t = pow_ui(zsq[jj], static_cast<unsigned long>(a_max + 1));
    for (std::size_t i = 0; i <= d; ++i) t = t / (big_one(bits) - zsq[i]);
    tail += t;
  }
  err += coeff_bound * tail;
  return {estimate, err, K, rigorous ? BoundKind::rigorous : BoundKind::heuristic};
}

std::pair<BigReal, BigReal> product_tail_check(long n, const BigReal& z) {
  if (n < 1) throw std::domain_error("product_tail_check: n must be >= 1");
  const mpfr_prec_t bits = prec_bits(30);
  BigReal one = big_one(bits);
  if (!(abs(z) < one)) throw std::domain_error("product_tail_check: needs |z| < 1");
  BigReal bound = one / BigReal::from_int(4 * n - 3, bits);
  BigReal zsq(bits);
  mpfr_sqr(zsq.raw(), z.raw(), MPFR_RNDN);

  BigReal prod = one, factor(bits), lhs(bits);
  long m = n;
  const long cap = 50000000;
  for (;;) {
    long chunk = std::max<long>(4 * n, 4096);
    long stop = std::min(m + chunk, cap);
    for (long k = m + 1; k <= stop; ++k) {
      mpfr_set_si(factor.raw(), 2 * k - 1, MPFR_RNDN);
      mpfr_sqr(factor.raw(), factor.raw(), MPFR_RNDN);
      mpfr_div(factor.raw(), zsq.raw(), factor.raw(), MPFR_RNDN);
      mpfr_ui_sub(factor.raw(), 1, factor.raw(), MPFR_RNDN);
      mpfr_div(prod.raw(), prod.raw(), factor.raw(), MPFR_RNDN);
    }
    m = stop;
    // remaining factors: log of the rest is below z^2/((1-z^2) 2(2m-1))
    BigReal rem = zsq / ((one - zsq) * BigReal::from_int(2 * (2 * m - 1), bits));
    if (rem < bound / BigReal::from_int(1000, bits) || m >= cap) {
      BigReal up(bits);
      mpfr_exp(up.raw(), rem.raw(), MPFR_RNDN);
      lhs = prod * up - one;
      break;
    }
  }
  return {abs(lhs), bound};
}

WallisChain wallis_bounds(long n) {
  if (n < 1) throw std::domain_error("wallis_bounds: n must be >= 1");
  Rat lower(double_factorial(2 * n), double_factorial(2 * n + 1));
  lower.canonicalize();
  Rat upper(double_factorial(2 * n - 2), double_factorial(2 * n - 1));
  upper.canonicalize();
  Rat mid_ratio(double_factorial(2 * n - 1), double_factorial(2 * n));
  mid_ratio.canonicalize();
  const int digits = 30;
  BigReal middle = BigReal::from(mid_ratio, prec_bits(digits)) * pi_const(digits) /
                   BigReal::from_int(2, prec_bits(digits));
  return {lower, middle, upper};
}

std::vector<ProbeRow> gtilde_growth_probe(const std::vector<int>& c, const std::vector<BigReal>& z,
                                          long k0_max, int digits) {
  check_convergent_c(c);
  if (z.size() != c.size() + 1) throw std::domain_error("gtilde_growth_probe: z must have length d+1");
  const mpfr_prec_t bits = prec_bits(digits);
  std::vector<BigReal> zsq = squares_checked(z, bits);
  ChainShape shape = ChainShape::make(c);
  SeriesChainParams p{shape, &zsq, nullptr, -1, bits};
  ShellRun run = run_chain(p, k0_max, true);

  long a = 0;
  for (int ci : c) a += ci;
  auto env_shape = [&](long k0) {
    BigReal l(bits);
    mpfr_set_si(l.raw(), 2 * k0 + 1, MPFR_RNDN);
    mpfr_log(l.raw(), l.raw(), MPFR_RNDN);
    BigReal kk = BigReal::from_int(k0, bits);
    return pow_ui(l, static_cast<unsigned long>(a)) / (kk * kk);
  };
  BigReal cal = abs(run.all[0]) / env_shape(1);
  std::vector<ProbeRow> rows;
  rows.reserve(static_cast<std::size_t>(k0_max));
  for (long k0 = 1; k0 <= k0_max; ++k0)
    rows.push_back({k0, run.all[static_cast<std::size_t>(k0 - 1)], cal * env_shape(k0)});
  return rows;
}

}  // namespace tstar::series
