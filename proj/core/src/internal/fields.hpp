#pragma once

#include <stdexcept>
#include <vector>

#include "logtangent/rat.hpp"
#include "logtangent/ratfunc.hpp"
#include "logtangent/weight.hpp"

// Evaluation fields: the same contribution formulas run either symbolically
// over rational functions in t or numerically at a fixed rational t0. Exact
// arithmetic makes the two routes agree coefficient for coefficient.
namespace logtangent::internal {

struct SymbolicField {
  using V = RatFunc;
  V weight(Weight w) const { return weight_to_ratfunc(w); }
  V rat(const Rat& r) const { return RatFunc(r); }
};

struct PointField {
  using V = Rat;
  Rat t0;
  V weight(Weight w) const { return Rat(w.a) + Rat(w.b) * t0; }
  V rat(const Rat& r) const { return r; }
};

template <typename V>
V series_integral_v(const std::vector<V>& weights, long s) {
  const long k = static_cast<long>(weights.size());
  if (k < 1) throw std::invalid_argument("series_integral: needs a flag");
  if (s < 0) throw std::invalid_argument("series_integral: negative marking count");
  if (k + s < 3)
    throw std::invalid_argument("series_integral: fewer than three special points");
  V prod_inv(1);
  V sum_inv(0);
  for (const V& w : weights) {
    if (w.is_zero()) throw std::invalid_argument("series_integral: zero weight");
    V inv = V(1) / w;
    prod_inv = prod_inv * inv;
    sum_inv = sum_inv + inv;
  }
  return prod_inv * sum_inv.pow(k + s - 3);
}

template <typename F>
typename F::V tangent_euler_v(const F& f, int i) {
  const Weight li = weight_of(i);
  typename F::V prod(1);
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    prod = prod * f.weight(li - weight_of(j));
  }
  return prod;
}

// Contribution of the one-edge graph: degree-d cover of the line from fixed
// point i to fixed point j, marked at the i end.
template <typename F>
typename F::V atomic_value(const F& f, int i, int j, int d) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
    throw std::invalid_argument("atomic contribution: labels must be distinct in 0..2");
  if (d < 1) throw std::invalid_argument("atomic contribution: degree must be >= 1");
  const Weight li = weight_of(i);
  const Weight lj = weight_of(j);
  typename F::V num(1);
  for (std::int64_t a = 1; a < d; ++a)
    num = num * f.weight(a * li + (3 * d - a) * lj);
  for (std::int64_t b = 0; b < d; ++b)
    num = num * f.weight((3 * d - b) * li + b * lj);
  const Rat sign = (d % 2 == 0) ? Rat(1) : Rat(-1);
  const mpz_class fact = factorial_z(static_cast<unsigned long>(d));
  const Rat scalar = sign * Rat(d) * Rat(fact) * Rat(fact);
  typename F::V den =
      f.weight(lj - li).pow(2L * d - 1) * f.rat(scalar);
  return num / den;
}

struct FlagSpec {
  int far_label = 0;
  int deg = 1;
};

template <typename F>
std::vector<typename F::V> flag_values(const F& f, int near_label,
                                       const std::vector<FlagSpec>& flags) {
  std::vector<typename F::V> out;
  out.reserve(flags.size());
  for (const FlagSpec& fl : flags) {
    if (fl.far_label < 0 || fl.far_label > 2 || fl.far_label == near_label)
      throw std::invalid_argument("flag: far label must differ from the vertex label");
    if (fl.deg < 1) throw std::invalid_argument("flag: degree must be >= 1");
    out.push_back(f.weight(weight_of(near_label) - weight_of(fl.far_label)) /
                  f.rat(Rat(fl.deg)));
  }
  return out;
}

// Root with k >= 2 branches: the splitting defect is the Euler class power
// times the vertex series with one extra marking. Invariant under flipping
// every flag weight, so either orientation convention gives the same value.
template <typename F>
typename F::V defect1_value(const F& f, int root_label,
                            const std::vector<FlagSpec>& flags) {
  if (root_label < 0 || root_label > 2)
    throw std::invalid_argument("defect: root label out of range");
  if (flags.size() < 2)
    throw std::invalid_argument("defect: needs at least two flags");
  const auto ws = flag_values(f, root_label, flags);
  const long k = static_cast<long>(ws.size());
  return tangent_euler_v(f, root_label).pow(k - 1) * series_integral_v(ws, 1);
}

// Root joined by one edge (degree d0) to a central vertex carrying k >= 1
// further branches: the exact ratio of the full contribution to the product
// of the one-edge piece and the re-rooted remainder.
template <typename F>
typename F::V defect2_value(const F& f, int root_label, int central_label,
                            int d0, const std::vector<FlagSpec>& flags) {
  if (root_label < 0 || root_label > 2 || central_label < 0 ||
      central_label > 2 || root_label == central_label)
    throw std::invalid_argument("defect: labels must be distinct in 0..2");
  if (d0 < 1) throw std::invalid_argument("defect: degree must be >= 1");
  if (flags.empty())
    throw std::invalid_argument("defect: central vertex needs a further branch");
  using V = typename F::V;
  const V w0 = f.weight(weight_of(central_label) - weight_of(root_label)) /
               f.rat(Rat(d0));
  const auto ws = flag_values(f, central_label, flags);
  V s_rest(0);
  for (const V& w : ws) s_rest = s_rest + V(1) / w;
  const V s_in = V(1) / w0 + s_rest;
  const long k = static_cast<long>(ws.size());
  const V ratio = s_in.pow(k - 2) / s_rest.pow(k - 2);
  return tangent_euler_v(f, central_label) * ratio / (w0 * w0);
}

}  // namespace logtangent::internal
