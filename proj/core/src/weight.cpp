#include "logtangent/weight.hpp"

#include <stdexcept>

namespace logtangent {

Weight weight_of(int fixed_point_index) {
  switch (fixed_point_index) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, -1};
    default:
      throw std::out_of_range("weight_of: fixed point index must be 0, 1 or 2");
  }
}

Poly weight_poly(Weight w) { return Poly::linear(Rat(w.a), Rat(w.b)); }

RatFunc weight_to_ratfunc(Weight w) { return RatFunc(weight_poly(w)); }

Poly tangent_euler(int fixed_point_index) {
  const Weight li = weight_of(fixed_point_index);
  Poly prod(Rat(1));
  for (int j = 0; j < 3; ++j) {
    if (j == fixed_point_index) continue;
    prod = prod * weight_poly(li - weight_of(j));
  }
  return prod;
}

}  // namespace logtangent
