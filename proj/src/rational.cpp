#include "tstar/rational.hpp"

#include <stdexcept>

namespace tstar {

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0 && exp < 0) throw std::domain_error("rat_pow: 0 to a negative power");
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (exp < 0) {
    mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
    r.canonicalize();  // restores a positive denominator
  }
  return r;
}

Rat parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
  if (mpz_sgn(q.get_den_mpz_t()) == 0)
    throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  return q.get_str();
}

}  // namespace tstar
