#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "logtangent/graphs.hpp"

namespace logtangent::internal {

struct RootedBranch;

// A localisation graph rooted at its marked vertex, with branches sorted by
// canonical token so that isomorphic subtrees serialize identically.
struct RootedNode {
  int label = 0;
  std::vector<RootedBranch> branches;
  std::string body;  // concatenation of branch tokens
};

struct RootedBranch {
  int deg = 1;
  RootedNode child;
  std::string token;  // "(label:deg)" or "(label:deg body)"
};

// Validates g (tree shape, label range, distinct labels across each edge,
// positive degrees, at least one edge) and roots it at the marked vertex.
// Throws std::invalid_argument on malformed input.
RootedNode build_rooted(const LocGraph& g);

std::string rooted_key(const RootedNode& root);
mpz_class rooted_aut(const RootedNode& root);

}  // namespace logtangent::internal
