#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace logtangent {

struct LocEdge {
  int u = 0;
  int v = 0;
  int deg = 1;
};

// Combinatorial type of a torus-fixed locus: a tree whose vertices carry the
// label of the fixed point they map to, whose edges are multiple covers of
// the coordinate lines (so the two endpoint labels always differ), and with a
// single marked vertex.
struct LocGraph {
  std::vector<int> labels;
  std::vector<LocEdge> edges;
  int marked = 0;

  int total_degree() const;
};

// Stable serialization of the marked-rooted canonical form, e.g.
// "(0 x (1:1)(1:1))" for the root at fixed point 0 carrying two unit edges to
// leaves at fixed point 1. Used as memo and cache key.
using CanonKey = std::string;

enum class DegreeMode { ordered, unordered };

// Degree split (d0, d1, d2) over the three coordinate lines. Unordered
// triples are stored sorted descending.
struct MultiDegree {
  int d0 = 0;
  int d1 = 0;
  int d2 = 0;
  DegreeMode mode = DegreeMode::ordered;

  static MultiDegree make(int a, int b, int c, DegreeMode mode);
  int total() const { return d0 + d1 + d2; }
  std::string str() const;  // "(d0,d1,d2)"

  friend bool operator==(const MultiDegree& x, const MultiDegree& y) {
    return x.mode == y.mode && x.d0 == y.d0 && x.d1 == y.d1 && x.d2 == y.d2;
  }
  friend bool operator!=(const MultiDegree& x, const MultiDegree& y) {
    return !(x == y);
  }
  friend bool operator<(const MultiDegree& x, const MultiDegree& y);
};

// Canonical key plus automorphism group order of the marked tree. Throws
// std::invalid_argument when g is not a valid localisation graph.
std::pair<CanonKey, mpz_class> canonical_key_and_aut(const LocGraph& g);

// An edge between fixed points i and j covers the line away from the third
// point k, so its degree counts toward component k of the multidegree.
MultiDegree multidegree(const LocGraph& g, DegreeMode mode);

struct GraphClass {
  LocGraph graph;
  mpz_class aut;
  CanonKey key;
};

// Streams every isomorphism class of total degree d exactly once, in a fixed
// deterministic order. Throws std::invalid_argument for d < 1.
void for_each_graph_class(
    int d, const std::function<void(const LocGraph&, const mpz_class&,
                                    const CanonKey&)>& fn);

std::vector<GraphClass> enumerate_graphs(int d);

}  // namespace logtangent
