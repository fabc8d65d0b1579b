#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "logtangent/rat.hpp"

namespace logtangent {

// Dense univariate polynomial over Rat. Coefficients ascending by exponent,
// trailing zeros trimmed; the zero polynomial has an empty coefficient vector
// and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(Rat c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }  // NOLINT
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  explicit Poly(std::vector<Rat> coeffs);

  // c0 + c1*x.
  static Poly linear(Rat c0, Rat c1);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rat(1); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(long k) const;
  Rat leading() const;
  Rat constant() const { return coeff(0); }

  Rat eval(const Rat& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Total order usable as a map key: by degree, then coefficients low to high.
  friend bool operator<(const Poly& a, const Poly& b);

  Poly pow(unsigned long e) const;

  // Euclidean division; o must be nonzero. Returns {quotient, remainder}.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& o);

  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  // Scales so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace logtangent
