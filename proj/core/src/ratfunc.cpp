#include "logtangent/ratfunc.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace logtangent {

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  const Rat lead = den_.leading();
  if (lead != Rat(1)) {
    const Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rat> RatFunc::constant_value() const {
  if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
  if (num_.is_zero()) return Rat(0);
  return num_.constant() / den_.constant();
}

Rat RatFunc::eval(const Rat& x) const {
  const Rat d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  // Classic gcd trick: with g = gcd(da, db), the sum over lcm = da*(db/g)
  // needs one final reduction only against g.
  Poly g = Poly::gcd(a.den_, b.den_);
  Poly da = Poly::divmod(a.den_, g).first;
  Poly db = Poly::divmod(b.den_, g).first;
  Poly num = a.num_ * db + b.num_ * da;
  Poly den = a.den_ * db;
  return RatFunc(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  // Cross-cancel before multiplying to keep intermediate degrees low.
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  Poly n1 = g1.degree() > 0 ? Poly::divmod(a.num_, g1).first : a.num_;
  Poly d2 = g1.degree() > 0 ? Poly::divmod(b.den_, g1).first : b.den_;
  Poly n2 = g2.degree() > 0 ? Poly::divmod(b.num_, g2).first : b.num_;
  Poly d1 = g2.degree() > 0 ? Poly::divmod(a.den_, g2).first : a.den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return a * b.inverse();
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Rat(1));
  const RatFunc base = e < 0 ? inverse() : *this;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  RatFunc acc(Rat(1)), sq(base);
  while (a > 0) {
    if (a & 1UL) acc = acc * sq;
    a >>= 1UL;
    if (a > 0) sq = sq * sq;
  }
  return acc;
}

std::string RatFunc::str() const {
  std::ostringstream os;
  if (den_.is_one()) {
    os << num_.str();
  } else {
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.str();
}

}  // namespace logtangent
