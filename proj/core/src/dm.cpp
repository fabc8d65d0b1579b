#include "logtangent/dm.hpp"

#include <stdexcept>

#include "internal/fields.hpp"

namespace logtangent {

Rat psi_integral(const std::vector<long>& a, long n) {
  if (n < 3) throw std::invalid_argument("psi_integral: needs at least 3 markings");
  if (static_cast<long>(a.size()) > n)
    throw std::invalid_argument("psi_integral: more exponents than markings");
  long sum = 0;
  for (long e : a) {
    if (e < 0) throw std::invalid_argument("psi_integral: negative exponent");
    sum += e;
  }
  if (sum != n - 3) return Rat(0);
  mpz_class num = factorial_z(static_cast<unsigned long>(n - 3));
  for (long e : a) {
    mpz_class f = factorial_z(static_cast<unsigned long>(e));
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), f.get_mpz_t());
  }
  return Rat(num);
}

RatFunc series_integral(const std::vector<RatFunc>& weights, long s) {
  return internal::series_integral_v(weights, s);
}

}  // namespace logtangent
