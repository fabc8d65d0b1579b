#include "logtangent/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace logtangent {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::linear(Rat c0, Rat c1) {
  return Poly(std::vector<Rat>{std::move(c0), std::move(c1)});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::leading() const {
  if (coeffs_.empty()) return Rat(0);
  return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size())
    return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

Poly Poly::pow(unsigned long e) const {
  Poly base(*this), acc(Rat(1));
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& o) {
  if (o.is_zero()) throw std::domain_error("Poly: division by zero");
  if (a.degree() < o.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs_;
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - o.degree()) + 1,
                        Rat(0));
  const Rat lead = o.leading();
  for (long k = a.degree() - o.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + o.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (long j = 0; j <= o.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -=
          q * o.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*this);
  const Rat inv = Rat(1) / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i].str();
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace logtangent
