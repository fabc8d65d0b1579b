#pragma once

#include <vector>

#include "logtangent/ratfunc.hpp"

namespace logtangent {

// Integral of psi_1^{a_1} ... psi_m^{a_m} over the moduli of stable genus-0
// curves with n marked points: the multinomial coefficient (n-3; a) when the
// exponents sum to n-3, and 0 otherwise. Entries beyond a's length count as
// exponent 0. Requires n >= 3, a.size() <= n and nonnegative exponents.
Rat psi_integral(const std::vector<long>& a, long n);

// Localisation vertex series: for k flag weights w_1..w_k and s extra
// markings, the sum over exponent vectors of psi integrals against
// prod w_i^{-1-a_i}, which closes to (prod 1/w_i) * (sum 1/w_i)^{k+s-3}.
// Requires k >= 1, s >= 0, k+s >= 3 and nonzero weights.
RatFunc series_integral(const std::vector<RatFunc>& weights, long s);

}  // namespace logtangent
