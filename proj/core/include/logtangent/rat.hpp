#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace logtangent {

// Arbitrary-precision rational with canonical (reduced, positive-denominator)
// representation maintained by GMP.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "num", "-num" or "num/den". Throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rat from_string(const std::string& s);

  // "num/den" with den > 1, plain integer otherwise.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat pow(long e) const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

mpz_class factorial_z(unsigned long n);
mpz_class binomial_z(unsigned long n, unsigned long k);

}  // namespace logtangent
