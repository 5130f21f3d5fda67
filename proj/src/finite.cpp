#include "tstar/finite.hpp"

#include <stdexcept>

#include "tstar/chain.hpp"
#include "tstar/constants.hpp"

namespace tstar::finite {

using detail::ChainShape;

Rat v_sharp(long k, long m, long ones) {
  if (k < 0 || m < 0) throw std::domain_error("v_sharp: k, m must be nonnegative");
  if (ones <= 0) {
    if (triangle(k, m) == 0) return Rat(1);
    Rat r(2 * (2 * k - 1), 2 * m - 1);
    r.canonicalize();
    return r;
  }
  if (m < 1 || k < m) throw std::domain_error("v_sharp: nonempty index requires k >= m >= 1");
  // F_t(v) = sum over chains v = l_t <= ... <= l_1 <= k of the 2^{descents}
  // weights, including the boundary descent from k; the final boundary to m
  // is applied at the end.
  std::size_t width = static_cast<std::size_t>(k - m + 1);
  std::vector<Rat> f(width), next(width);
  for (long v = m; v <= k; ++v)
    f[static_cast<std::size_t>(v - m)] = Rat(triangle(k, v) ? 2 : 1, 2 * v - 1);
  for (long t = 2; t <= ones; ++t) {
    Rat suffix(0);  // sum_{u > v} F(u)
    for (long v = k; v >= m; --v) {
      std::size_t iv = static_cast<std::size_t>(v - m);
      next[iv] = (f[iv] + 2 * suffix) / Rat(2 * v - 1);
      suffix += f[iv];
    }
    f.swap(next);
  }
  Rat total(0);
  for (long v = m; v <= k; ++v) total += f[static_cast<std::size_t>(v - m)] * (triangle(v, m) ? 2 : 1);
  Rat ratio(2 * k - 1, 2 * m - 1);
  ratio.canonicalize();
  return ratio * total;
}

Rat t_window_star(long n, long m, const Index& s) {
  if (m < 1 || m > n) throw std::domain_error("t_window_star: need n >= m >= 1");
  if (s.empty()) return Rat(1);
  std::size_t r = s.size();
  std::vector<Rat> acc(r, Rat(0));
  for (long k = m; k <= n; ++k) {
    for (std::size_t j = r; j-- > 0;) {
      Rat w = rat_pow(Rat(2 * k - 1), -s.entries[j]);
      acc[j] += j + 1 < r ? w * acc[j + 1] : w;
    }
  }
  return acc[0];
}

Rat t_harmonic_star(long n, const Index& s) {
  if (n < 1) throw std::domain_error("t_harmonic_star: n must be >= 1");
  return t_window_star(n, 1, s);
}

namespace {
Rat t_star_enum(long n, const Index& s, std::size_t pos, long limit) {
  if (pos == s.size()) return Rat(1);
  Rat total(0);
  for (long k = 1; k <= limit; ++k)
    total += rat_pow(Rat(2 * k - 1), -s.entries[pos]) * t_star_enum(n, s, pos + 1, k);
  return total;
}
}  // namespace

Rat t_harmonic_star_ref(long n, const Index& s) {
  if (n < 1) throw std::domain_error("t_harmonic_star_ref: n must be >= 1");
  return t_star_enum(n, s, 0, n);
}

namespace {

struct ChainParams {
  const ChainShape& shape;
  long n;
  const std::vector<Rat>* zsq = nullptr;  // generating mode
  const std::vector<int>* aa = nullptr;   // coefficient mode
  int restrict_u = -1;
};

Rat chain_weight(const ChainParams& p, int j, long k) {
  const auto& node = p.shape.nodes[static_cast<std::size_t>(j)];
  const long odd = 2 * k - 1;
  if (!node.is_outer) return Rat(1, odd);
  const int i = node.block;
  const int delta = p.shape.delta[static_cast<std::size_t>(i)];
  Rat f;
  if (p.zsq) {
    f = rat_pow(Rat(odd), delta - 1) / (Rat(odd) * Rat(odd) - (*p.zsq)[static_cast<std::size_t>(i)]);
  } else {
    f = rat_pow(Rat(odd), -(2 * (*p.aa)[static_cast<std::size_t>(i)] - delta + 3));
  }
  if ((static_cast<long>(delta) * k) % 2 != 0) f = -f;
  if (i == 0) {
    // V^#_{0,k_0}(empty) = -2/(2k_0-1); for d >= 1 the 2k_0-1 numerator of
    // the first separator kernel cancels the denominator
    f *= -2;
    if (p.shape.d() == 0) f /= Rat(odd);
    f *= Rat(binomial(2 * p.n - 1, p.n - k));
  } else if (i == p.shape.d()) {
    f /= Rat(odd);
  }
  if (i == p.restrict_u) f /= Rat(odd) * Rat(odd);
  return f;
}

Rat chain_total(const ChainParams& p) {
  Rat total(0);
  detail::chain_shells<Rat>(
      p.n, p.shape.last(), Rat(0), Rat(1), [&](int j, long k) { return chain_weight(p, j, k); },
      [&](long, const Rat& shell) { total += shell; });
  return total;
}

Rat prefactor(long n) { return Rat(n) * Rat(binomial(2 * n, n)) / rat_pow(Rat(2), 4 * n - 2); }

std::vector<Rat> squares(const std::vector<Rat>& z) {
  std::vector<Rat> zsq;
  zsq.reserve(z.size());
  for (Rat v : z) {
    v.canonicalize();  // tolerate raw two-argument mpq inputs
    if (abs(v) >= 1) throw std::domain_error("generating-function evaluation needs |z| < 1");
    zsq.push_back(v * v);
  }
  return zsq;
}

void check_dims(long n, const std::vector<int>& c, const std::vector<Rat>& z) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (z.size() != c.size() + 1) throw std::domain_error("z must have length d+1");
}

}  // namespace

Rat gn_closed_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z) {
  check_dims(n, c, z);
  ChainShape shape = ChainShape::make(c);
  std::vector<Rat> zsq = squares(z);
  ChainParams p{shape, n, &zsq, nullptr, -1};
  return prefactor(n) * chain_total(p);
}

namespace {
// Direct evaluation of the chain expansion, one tuple k_0 >= ... >= k_d at a
// time, with v_sharp for the separator kernels. Reference path for tests.
Rat gn_ref_recurse(long n, const std::vector<int>& c, const std::vector<Rat>& zsq,
                   const std::vector<int>& delta, std::vector<long>& ks, std::size_t i, long hi) {
  std::size_t d = c.size();
  if (i > d) {
    Rat term(binomial(2 * n - 1, n - ks[0]));
    for (std::size_t j = 0; j <= d; ++j) {
      long odd = 2 * ks[j] - 1;
      long prev = j == 0 ? 0 : ks[j - 1];
      long ones = (j == 0 ? 1 : c[j - 1]) - 3;
      Rat f = rat_pow(Rat(odd), delta[j] - 1) / (Rat(odd) * Rat(odd) - zsq[j]);
      if ((static_cast<long>(delta[j]) * ks[j]) % 2 != 0) f = -f;
      term *= f * v_sharp(prev, ks[j], ones);
    }
    return term;
  }
  Rat total(0);
  for (long k = 1; k <= hi; ++k) {
    ks[i] = k;
    total += gn_ref_recurse(n, c, zsq, delta, ks, i + 1, k);
  }
  return total;
}
}  // namespace

Rat gn_closed_eval_ref(long n, const std::vector<int>& c, const std::vector<Rat>& z) {
  check_dims(n, c, z);
  ChainShape shape = ChainShape::make(c);
  std::vector<Rat> zsq = squares(z);
  std::vector<long> ks(c.size() + 1);
  return prefactor(n) * gn_ref_recurse(n, c, zsq, shape.delta, ks, 0, n);
}

namespace {

// S[u][v] = sum_{a=0..a_max} zsq^a t*_{u,v}({2}^a) for 1 <= v <= u <= n.
std::vector<std::vector<Rat>> window_poly(long n, const Rat& zsq, long a_max) {
  std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::vector<Rat>> S(N + 1, std::vector<Rat>(N + 1, Rat(0)));
  for (std::size_t v = 1; v <= N; ++v) {
    // T_a(u) over u = v-1..n, rolling in a
    std::vector<Rat> prev(N + 1, Rat(1)), cur(N + 1, Rat(0));
    for (std::size_t u = v; u <= N; ++u) S[u][v] = Rat(1);
    Rat zp = zsq;
    for (long a = 1; a <= a_max; ++a) {
      cur[v - 1] = 0;
      for (std::size_t u = v; u <= N; ++u) {
        long odd = 2 * static_cast<long>(u) - 1;
        cur[u] = cur[u - 1] + prev[u] / Rat(odd * odd);
      }
      for (std::size_t u = v; u <= N; ++u) S[u][v] += zp * cur[u];
      if (a < a_max) {
        prev.swap(cur);
        zp *= zsq;
      }
    }
  }
  return S;
}

}  // namespace

Rat gn_series_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max) {
  check_dims(n, c, z);
  if (a_max < 0) throw std::domain_error("gn_series_eval: a_max must be >= 0");
  for (int ci : c) (void)delta_weight(ci);  // rejects c_i = 2
  std::vector<Rat> zsq = squares(z);
  std::size_t d = c.size();
  std::vector<std::vector<std::vector<Rat>>> S;
  S.reserve(d + 1);
  for (std::size_t j = 0; j <= d; ++j) S.push_back(window_poly(n, zsq[j], a_max));

  // sum over n >= m_1 >= ... >= m_d >= 1 of the separator weights times the
  // per-block window polynomials
  std::vector<long> ms(d + 1, 0);
  ms[0] = n;  // upper bound for block 0
  Rat total(0);
  auto rec = [&](auto&& self, std::size_t i, long hi) -> void {
    if (i > d) {
      Rat term(1);
      long upper = n;
      for (std::size_t j = 1; j <= d; ++j) {
        term *= rat_pow(Rat(2 * ms[j] - 1), -c[j - 1]);
        term *= S[j - 1][static_cast<std::size_t>(upper)][static_cast<std::size_t>(ms[j])];
        upper = ms[j];
      }
      term *= S[d][static_cast<std::size_t>(upper)][1];
      total += term;
      return;
    }
    for (long m = 1; m <= hi; ++m) {
      ms[i] = m;
      self(self, i + 1, m);
    }
  };
  rec(rec, 1, n);
  return total;
}

Rat gn_series_eval_ref(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max) {
  check_dims(n, c, z);
  std::vector<Rat> zsq = squares(z);
  std::size_t d = c.size();
  std::vector<int> a(d + 1, 0);
  Rat total(0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j > d) {
      BlockForm b(a, c);
      Rat term = t_harmonic_star(n, expand_blocks(b));
      for (std::size_t i = 0; i <= d; ++i) term *= rat_pow(zsq[i], a[i]);
      total += term;
      return;
    }
    for (int v = 0; v <= a_max; ++v) {
      a[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return total;
}

Rat gn_series_certificate(long n, const std::vector<int>& c, const std::vector<Rat>& z, long a_max) {
  std::vector<Rat> zsq = squares(z);
  // limiting value of t*_n({2}^a) as a grows: the pole at z^2 = 1
  Rat limit_run(1);
  for (long k = 2; k <= n; ++k) {
    long odd = 2 * k - 1;
    limit_run *= Rat(odd * odd) / Rat(odd * odd - 1);
  }
  Rat g = gn_closed_eval(n, c, z);
  Rat tails(0);
  for (const Rat& q : zsq) tails += rat_pow(q, a_max + 1) / (Rat(1) - q);
  return limit_run * g * tails;
}

Rat gn_coefficient_closed(long n, const BlockForm& b) {
  if (n < 1) throw std::domain_error("gn_coefficient_closed: n must be >= 1");
  ChainShape shape = ChainShape::make(b.c);
  ChainParams p{shape, n, nullptr, &b.a, -1};
  return prefactor(n) * chain_total(p);
}

Rat gn_restricted_eval(long n, const std::vector<int>& c, const std::vector<Rat>& z, int u) {
  check_dims(n, c, z);
  if (u < 0 || static_cast<std::size_t>(u) >= z.size())
    throw std::domain_error("gn_restricted_eval: u out of range");
  if (z[static_cast<std::size_t>(u)] == 0) return Rat(0);
  std::vector<Rat> z0 = z;
  z0[static_cast<std::size_t>(u)] = 0;
  return gn_closed_eval(n, c, z) - gn_closed_eval(n, c, z0);
}

Rat gn_restricted_weighted(long n, const std::vector<int>& c, const std::vector<Rat>& z, int u) {
  check_dims(n, c, z);
  if (u < 0 || static_cast<std::size_t>(u) >= z.size())
    throw std::domain_error("gn_restricted_weighted: u out of range");
  ChainShape shape = ChainShape::make(c);
  std::vector<Rat> zsq = squares(z);
  ChainParams p{shape, n, &zsq, nullptr, u};
  return zsq[static_cast<std::size_t>(u)] * prefactor(n) * chain_total(p);
}

std::pair<Rat, Rat> identity_weighted_binomial(long n, long l) {
  if (n < 1 || l < 0) throw std::domain_error("identity_weighted_binomial: need n >= 1, l >= 0");
  Rat lhs(0);
  for (long k = l + 1; k <= n; ++k) lhs += Rat(2 * k - 1) * Rat(binomial(2 * n - 1, n - k));
  Rat rhs = Rat(n - l) * Rat(binomial(2 * n - 1, n - l));
  return {lhs, rhs};
}

std::pair<Rat, Rat> identity_alternating_binomial(long n, long l) {
  if (n < 1 || l < 0) throw std::domain_error("identity_alternating_binomial: need n >= 1, l >= 0");
  Rat lhs(0);
  for (long k = l + 1; k <= n; ++k) {
    Rat term(binomial(2 * n - 1, n - k));
    lhs += (k % 2 != 0) ? -term : term;
  }
  Rat rhs = Rat(n - l, 2 * n - 1) * Rat(binomial(2 * n - 1, n - l));
  rhs.canonicalize();
  if (l % 2 == 0) rhs = -rhs;
  return {lhs, rhs};
}

std::pair<Rat, Rat> identity_vsharp_binomial(long n, long l, long c) {
  if (l < 1) throw std::domain_error("identity_vsharp_binomial: l must be >= 1");
  if (n < 1 || c < 0) throw std::domain_error("identity_vsharp_binomial: need n >= 1, c >= 0");
  Rat lhs(0);
  for (long k = l; k <= n; ++k) {
    Rat term = Rat(binomial(2 * n - 1, n - k)) * v_sharp(k, l, c) / Rat(2 * k - 1);
    lhs += (k % 2 != 0) ? -term : term;
  }
  Rat rhs = Rat(binomial(2 * n - 1, n - l)) / rat_pow(Rat(2 * n - 1), c + 1);
  if (l % 2 != 0) rhs = -rhs;
  return {lhs, rhs};
}

}  // namespace tstar::finite
