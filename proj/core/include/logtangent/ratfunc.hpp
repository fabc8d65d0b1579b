#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "logtangent/poly.hpp"

namespace logtangent {

// Rational function num/den in one variable, kept fully reduced with a monic
// denominator. Every constructor and operation restores this canonical form,
// so equal functions compare equal coefficient-wise.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}  // NOLINT
  RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}       // NOLINT
  RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  // The value if both degrees are zero after reduction, nullopt otherwise.
  std::optional<Rat> constant_value() const;

  // Evaluates at x; throws std::domain_error when x is a pole.
  Rat eval(const Rat& x) const;

  RatFunc operator-() const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  // Integer powers; negative exponents invert (zero base then throws).
  RatFunc pow(long e) const;

  std::string str() const;

 private:
  void reduce();
  Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace logtangent
