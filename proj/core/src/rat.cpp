#include "logtangent/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace logtangent {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!valid(num) || !valid(den))
    throw std::invalid_argument("Rat: malformed rational '" + s + "'");
  mpz_class dz(den);
  if (dz == 0)
    throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), dz);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rat: zero to negative power");
    return Rat(0);
  }
  mpz_class n, d;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), a);
  mpq_class q = (e > 0) ? mpq_class(n, d) : mpq_class(d, n);
  q.canonicalize();
  return Rat(q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace logtangent
