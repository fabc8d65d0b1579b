#pragma once

#include <memory>
#include <vector>

#include "logtangent/graphs.hpp"
#include "logtangent/ratfunc.hpp"

namespace logtangent {

// Outgoing edge seen from a vertex: the label at the far end and the
// covering degree of the edge.
struct Flag {
  int far_label = 0;
  int deg = 1;
};

// Contribution of the one-edge graph covering the line from fixed point i to
// fixed point j with degree d, marked at the i end.
RatFunc atomic_contribution(int i, int j, int d);

// Tangent weight of the edge at the given endpoint: (far - near)/deg. The
// edge is addressed by its index into g.edges; vertex must be an endpoint.
RatFunc flag_weight(const LocGraph& g, int vertex, int edge);

// Euler class of the pushed-forward cubic line bundle on the fixed locus.
RatFunc o3_numerator(const LocGraph& g);

// Euler class of the logarithmic obstruction piece, rooted at the mark.
RatFunc logob_weight(const LocGraph& g);

// Inverse Euler class of the virtual normal bundle, including the edge
// automorphism factors 1/deg.
RatFunc normal_bundle_inverse(const LocGraph& g);

// Full localisation contribution of one graph class, before dividing by the
// order of its automorphism group.
RatFunc contribution_direct(const LocGraph& g);

// Splitting defect at a root with k >= 2 branches.
RatFunc defect_case1(int root_label, const std::vector<Flag>& flags);

// Splitting defect across a single root edge of degree d0 into a central
// vertex carrying the remaining flags. Depends on the root label as well as
// the central one: the defect is the exact ratio
// contribution / (atomic * re-rooted remainder), and both edge endpoints
// enter that ratio.
RatFunc defect_case2(int root_label, int central_label, int root_edge_degree,
                     const std::vector<Flag>& remaining_flags);

// Memo shared across evaluations: values of marked subgraphs keyed by their
// canonical serialization, plus defect values keyed by their parameters.
class SplitMemo {
 public:
  SplitMemo();
  ~SplitMemo();
  SplitMemo(SplitMemo&&) noexcept;
  SplitMemo& operator=(SplitMemo&&) noexcept;
  SplitMemo(const SplitMemo&) = delete;
  SplitMemo& operator=(const SplitMemo&) = delete;

  std::size_t size() const;

  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

// Same value as contribution_direct, computed by recursive splitting with
// memoized pendant values.
RatFunc contribution_split(const LocGraph& g, SplitMemo& memo);

}  // namespace logtangent
