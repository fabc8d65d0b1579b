#pragma once

#include <cstdint>

#include "logtangent/ratfunc.hpp"

namespace logtangent {

// Integer combination a*l0 + b*l1 of the first two torus weights; the third
// weight is l2 = -l0 - l1, so every character of the three-point action is
// representable. Dehomogenized with l0 = 1 and l1 = t, the weight becomes the
// linear polynomial a + b*t.
struct Weight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
  friend Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
  Weight operator-() const { return {-a, -b}; }
  friend Weight operator*(std::int64_t k, Weight w) { return {k * w.a, k * w.b}; }
  friend bool operator==(Weight x, Weight y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(Weight x, Weight y) { return !(x == y); }

  bool is_zero() const { return a == 0 && b == 0; }
};

// Tangent weight data of the fixed point with the given label (0, 1 or 2).
// Throws std::out_of_range for any other value.
Weight weight_of(int fixed_point_index);

Poly weight_poly(Weight w);
RatFunc weight_to_ratfunc(Weight w);

// Euler class of the tangent space at fixed point i: the product of the two
// weights l_i - l_j over j != i. Quadratic in t.
Poly tangent_euler(int fixed_point_index);

}  // namespace logtangent
