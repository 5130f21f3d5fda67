#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tstar {

using Int = mpz_class;
/// Exact rational in canonical form (denominator > 0, gcd(num, den) = 1).
/// All arithmetic through mpq_class preserves canonicality.
using Rat = mpq_class;

/// num/den in canonical form (two-argument mpq construction does not
/// canonicalize on its own).
inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// base^exp for integer exp (negative allowed, base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

/// Parses "p", "-p" or "p/q" and canonicalizes. Throws std::invalid_argument.
Rat parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q = 1).
std::string rat_str(const Rat& q);

}  // namespace tstar
