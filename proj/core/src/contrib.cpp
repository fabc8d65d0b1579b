#include "logtangent/contrib.hpp"

#include <stdexcept>

#include "internal/evaluator.hpp"
#include "internal/fields.hpp"
#include "internal/rooted.hpp"
#include "logtangent/weight.hpp"

namespace logtangent {

namespace {

const internal::SymbolicField kSym{};

std::vector<internal::FlagSpec> to_specs(const std::vector<Flag>& flags) {
  std::vector<internal::FlagSpec> out;
  out.reserve(flags.size());
  for (const Flag& f : flags) out.push_back({f.far_label, f.deg});
  return out;
}

// Incident edge counts; validation is delegated to build_rooted.
std::vector<int> valences(const LocGraph& g) {
  std::vector<int> n(g.labels.size(), 0);
  for (const auto& e : g.edges) {
    ++n[static_cast<std::size_t>(e.u)];
    ++n[static_cast<std::size_t>(e.v)];
  }
  return n;
}

RatFunc three_lambda(int label) {
  return weight_to_ratfunc(3 * weight_of(label));
}

}  // namespace

RatFunc atomic_contribution(int i, int j, int d) {
  return internal::atomic_value(kSym, i, j, d);
}

RatFunc flag_weight(const LocGraph& g, int vertex, int edge) {
  internal::build_rooted(g);
  if (edge < 0 || static_cast<std::size_t>(edge) >= g.edges.size())
    throw std::invalid_argument("flag_weight: edge index out of range");
  const LocEdge& e = g.edges[static_cast<std::size_t>(edge)];
  if (vertex != e.u && vertex != e.v)
    throw std::invalid_argument("flag_weight: vertex is not an endpoint of the edge");
  const int near = g.labels[static_cast<std::size_t>(vertex)];
  const int far = g.labels[static_cast<std::size_t>(vertex == e.u ? e.v : e.u)];
  return weight_to_ratfunc(weight_of(far) - weight_of(near)) /
         RatFunc(Rat(e.deg));
}

RatFunc o3_numerator(const LocGraph& g) {
  internal::build_rooted(g);
  RatFunc r(1);
  for (const auto& e : g.edges) {
    const Weight li = weight_of(g.labels[static_cast<std::size_t>(e.u)]);
    const Weight lj = weight_of(g.labels[static_cast<std::size_t>(e.v)]);
    const Rat inv_deg = Rat(1) / Rat(e.deg);
    for (std::int64_t a = 0; a <= 3LL * e.deg; ++a)
      r *= weight_to_ratfunc(a * li + (3LL * e.deg - a) * lj) * RatFunc(inv_deg);
  }
  const auto n = valences(g);
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    const int m = (static_cast<int>(v) == g.marked) ? 1 : 0;
    const RatFunc tl = three_lambda(g.labels[v]);
    if (n[v] + m >= 3)
      r *= tl.pow(1 - n[v]);
    else if (n[v] == 2 && m == 0)
      r /= tl;
  }
  return r;
}

RatFunc logob_weight(const LocGraph& g) {
  const internal::RootedNode root = internal::build_rooted(g);
  RatFunc r(1);
  const std::function<void(const internal::RootedNode&)> walk =
      [&](const internal::RootedNode& node) {
        if (node.branches.empty()) {
          r *= three_lambda(node.label);
          return;
        }
        if (node.branches.size() >= 2)
          r /= three_lambda(node.label)
                   .pow(static_cast<long>(node.branches.size()) - 1);
        for (const auto& b : node.branches) walk(b.child);
      };
  walk(root);
  return r;
}

RatFunc normal_bundle_inverse(const LocGraph& g) {
  internal::build_rooted(g);
  RatFunc r(1);
  // Edge factors: inverse weights of the cover's deformations, except the
  // two fixed-tangent directions along the line itself.
  for (const auto& e : g.edges) {
    const Weight li = weight_of(g.labels[static_cast<std::size_t>(e.u)]);
    const Weight lj = weight_of(g.labels[static_cast<std::size_t>(e.v)]);
    r *= RatFunc(Rat(1, e.deg));
    for (std::int64_t a = 0; a <= e.deg; ++a) {
      for (int k = 0; k < 3; ++k) {
        const Weight w =
            a * li + (e.deg - a) * lj - static_cast<std::int64_t>(e.deg) * weight_of(k);
        if (w.is_zero()) continue;
        r *= RatFunc(Rat(e.deg)) / weight_to_ratfunc(w);
      }
    }
  }
  // Vertex factors, with flag weights oriented toward the vertex.
  const auto n = valences(g);
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    const int label = g.labels[v];
    const int m = (static_cast<int>(v) == g.marked) ? 1 : 0;
    std::vector<RatFunc> ws;
    for (const auto& e : g.edges) {
      if (e.u != static_cast<int>(v) && e.v != static_cast<int>(v)) continue;
      const int far =
          g.labels[static_cast<std::size_t>(e.u == static_cast<int>(v) ? e.v : e.u)];
      ws.push_back(weight_to_ratfunc(weight_of(label) - weight_of(far)) /
                   RatFunc(Rat(e.deg)));
    }
    if (n[v] + m >= 3) {
      r *= RatFunc(tangent_euler(label)).pow(n[v] - 1) *
           internal::series_integral_v(ws, m);
    } else if (n[v] == 2 && m == 0) {
      r *= RatFunc(tangent_euler(label)) / (ws[0] + ws[1]);
    } else if (n[v] == 1 && m == 0) {
      r *= ws[0];
    }
  }
  return r;
}

RatFunc contribution_direct(const LocGraph& g) {
  return o3_numerator(g) * normal_bundle_inverse(g) / logob_weight(g);
}

RatFunc defect_case1(int root_label, const std::vector<Flag>& flags) {
  return internal::defect1_value(kSym, root_label, to_specs(flags));
}

RatFunc defect_case2(int root_label, int central_label, int root_edge_degree,
                     const std::vector<Flag>& remaining_flags) {
  return internal::defect2_value(kSym, root_label, central_label,
                                 root_edge_degree, to_specs(remaining_flags));
}

struct SplitMemo::Impl {
  internal::Evaluator<internal::SymbolicField> eval;
};

SplitMemo::SplitMemo() : impl_(std::make_unique<Impl>()) {}
SplitMemo::~SplitMemo() = default;
SplitMemo::SplitMemo(SplitMemo&&) noexcept = default;
SplitMemo& SplitMemo::operator=(SplitMemo&&) noexcept = default;

std::size_t SplitMemo::size() const { return impl_->eval.memo_size(); }

RatFunc contribution_split(const LocGraph& g, SplitMemo& memo) {
  return memo.impl().eval.contribution(g);
}

}  // namespace logtangent
