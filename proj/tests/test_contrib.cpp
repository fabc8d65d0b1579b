#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "internal/evaluator.hpp"
#include "logtangent/contrib.hpp"
#include "logtangent/graphs.hpp"

using namespace logtangent;

namespace {

const Poly kT = Poly::linear(Rat(0), Rat(1));

Poly lam(int i) { return weight_poly(weight_of(i)); }

LocGraph make_graph(std::vector<int> labels, std::vector<LocEdge> edges,
                    int marked) {
  LocGraph g;
  g.labels = std::move(labels);
  g.edges = std::move(edges);
  g.marked = marked;
  return g;
}

// Product of the 3e+1 cubic-section weights carried by one edge.
RatFunc edge_o3(int i, int j, int e) {
  RatFunc prod(1);
  for (int a = 0; a <= 3 * e; ++a) {
    Poly w = Poly(a) * lam(i) + Poly(3 * e - a) * lam(j);
    prod *= RatFunc(w, Poly(e));
  }
  return prod;
}

}  // namespace

TEST_CASE("atomic contribution pins") {
  CHECK(atomic_contribution(0, 1, 1) == RatFunc(Poly(3), Poly(1) - kT));
  CHECK(atomic_contribution(1, 2, 1) ==
        RatFunc(Poly(3) * kT, Poly(1) + Poly(2) * kT));
  // d = 2: (1/(8(l1-l0)^3)) (l0+5l1)(6l0)(5l0+l1).
  RatFunc expect2(Poly(6) * (Poly(1) + Poly(5) * kT) * (Poly(5) + kT),
                  Poly(8) * (kT - Poly(1)).pow(3));
  CHECK(atomic_contribution(0, 1, 2) == expect2);
  CHECK_THROWS_AS(atomic_contribution(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(atomic_contribution(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(atomic_contribution(0, 1, 0), std::invalid_argument);
}

TEST_CASE("direct assembly reproduces the atomic formula for d <= 3") {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int d = 1; d <= 3; ++d) {
        auto g = make_graph({i, j}, {{0, 1, d}}, 0);
        CHECK(contribution_direct(g) == atomic_contribution(i, j, d));
      }
    }
}

TEST_CASE("flag weights") {
  auto g = make_graph({0, 1}, {{0, 1, 2}}, 0);
  CHECK(flag_weight(g, 0, 0) ==
        RatFunc(kT - Poly(1), Poly(2)));
  CHECK(flag_weight(g, 1, 0) ==
        RatFunc(Poly(1) - kT, Poly(2)));
  auto h = make_graph({0, 2}, {{0, 1, 1}}, 0);
  CHECK(flag_weight(h, 0, 0) == RatFunc(Poly(-2) - kT));
  CHECK_THROWS_AS(flag_weight(g, 0, 1), std::invalid_argument);
  auto chain = make_graph({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}}, 0);
  CHECK_THROWS_AS(flag_weight(chain, 2, 0), std::invalid_argument);
}

TEST_CASE("cubic-section numerator assembly") {
  auto atomic = make_graph({0, 1}, {{0, 1, 1}}, 0);
  // 3l1 (l0+2l1)(2l0+l1) 3l0, no vertex factors.
  CHECK(o3_numerator(atomic) == edge_o3(0, 1, 1));
  // Unmarked valence-2 vertex divides by 3l1.
  auto chain = make_graph({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}}, 0);
  CHECK(o3_numerator(chain) ==
        edge_o3(0, 1, 1) * edge_o3(1, 2, 1) / RatFunc(Poly(3) * lam(1)));
  // Contracted marked root with two edges scales by (3l0)^(1-2).
  auto star = make_graph({0, 1, 1}, {{0, 1, 1}, {0, 2, 1}}, 0);
  CHECK(o3_numerator(star) ==
        edge_o3(0, 1, 1) * edge_o3(0, 1, 1) / RatFunc(Poly(3) * lam(0)));
}

TEST_CASE("logarithmic obstruction weight") {
  auto atomic = make_graph({0, 1}, {{0, 1, 1}}, 0);
  CHECK(logob_weight(atomic) == RatFunc(Poly(3) * kT));
  auto chain = make_graph({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}}, 0);
  CHECK(logob_weight(chain) == RatFunc(Poly(3) * lam(2)));
  auto star = make_graph({0, 1, 1}, {{0, 1, 1}, {0, 2, 1}}, 0);
  CHECK(logob_weight(star) ==
        RatFunc((Poly(3) * lam(1)).pow(2), Poly(3) * lam(0)));
}

TEST_CASE("logob leaf/relation rank is 1 on every tree") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& c : enumerate_graphs(d)) {
      const LocGraph& g = c.graph;
      int n = static_cast<int>(g.labels.size());
      // Orient away from the mark and count children.
      std::vector<int> children(n, 0), parent(n, -1), order;
      std::vector<char> seen(n, 0);
      order.push_back(g.marked);
      seen[static_cast<size_t>(g.marked)] = 1;
      for (size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        for (const auto& e : g.edges) {
          int other = e.u == v ? e.v : (e.v == v ? e.u : -1);
          if (other < 0 || seen[static_cast<size_t>(other)]) continue;
          seen[static_cast<size_t>(other)] = 1;
          parent[static_cast<size_t>(other)] = v;
          ++children[static_cast<size_t>(v)];
          order.push_back(other);
        }
      }
      int leaves = 0, relations = 0;
      RatFunc expect(1);
      for (int v = 0; v < n; ++v) {
        if (children[static_cast<size_t>(v)] == 0) {
          ++leaves;
          expect *= RatFunc(Poly(3) * lam(g.labels[static_cast<size_t>(v)]));
        } else if (children[static_cast<size_t>(v)] >= 2) {
          relations += children[static_cast<size_t>(v)] - 1;
          expect /= RatFunc(Poly(3) * lam(g.labels[static_cast<size_t>(v)]))
                        .pow(children[static_cast<size_t>(v)] - 1);
        }
      }
      CHECK(leaves - relations == 1);
      CHECK(logob_weight(g) == expect);
    }
}

TEST_CASE("normal bundle inverse pin on the atomic graph") {
  auto atomic = make_graph({0, 1}, {{0, 1, 1}}, 0);
  Poly d01 = lam(0) - lam(1), d02 = lam(0) - lam(2), d12 = lam(1) - lam(2);
  CHECK(normal_bundle_inverse(atomic) == RatFunc(Poly(1), d01 * d02 * d12));
}

TEST_CASE("degree-1 contributions sum to 9") {
  RatFunc total;
  for (const auto& c : enumerate_graphs(1)) {
    CHECK(c.aut == 1);
    total += contribution_direct(c.graph);
  }
  CHECK(total == RatFunc(9));
}

TEST_CASE("splitting defect pins") {
  // Case II on the unit chain removed at p0: (1+2t)/(3t).
  CHECK(defect_case2(0, 1, 1, {{2, 1}}) ==
        RatFunc(Poly(1) + Poly(2) * kT, Poly(3) * kT));
  // Same chain shape, marked end relabeled to p2: a different defect.
  CHECK(defect_case2(2, 1, 1, {{2, 1}}) ==
        RatFunc(kT - Poly(1), Poly(2) + Poly(4) * kT));
  // Case I at p0 with two unit flags to p1: (2+t)/(1-t).
  CHECK(defect_case1(0, {{1, 1}, {1, 1}}) ==
        RatFunc(Poly(2) + kT, Poly(1) - kT));
  CHECK_THROWS_AS(defect_case1(0, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(defect_case2(0, 1, 1, {}), std::invalid_argument);
}

TEST_CASE("star defects specialize to the closed product at l2 = 0") {
  // Root p1, flags to p2 with degrees d_i: at t = -1 the defect becomes
  // 2^(r-1) d^(r-2) prod d_i.
  std::vector<std::vector<int>> partitions;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (cur.size() >= 2) partitions.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      gen(remaining - p, p);
      cur.pop_back();
    }
  };
  gen(6, 6);
  for (const auto& parts : partitions) {
    std::vector<Flag> flags;
    long d = 0;
    Rat prod(1);
    for (int p : parts) {
      flags.push_back({2, p});
      d += p;
      prod *= Rat(p);
    }
    long r = static_cast<long>(parts.size());
    Rat expected = Rat(2).pow(r - 1) * Rat(d).pow(r - 2) * prod;
    RatFunc defect = defect_case1(1, flags);
    CHECK(defect.eval(Rat(-1)) == expected);
  }
}

TEST_CASE("chain value equals its split factorization") {
  auto chain = make_graph({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}}, 0);
  RatFunc direct = contribution_direct(chain);
  CHECK(direct == RatFunc(Poly(3), Poly(1) - kT));
  CHECK(direct == defect_case2(0, 1, 1, {{2, 1}}) *
                      atomic_contribution(0, 1, 1) *
                      atomic_contribution(1, 2, 1));
  // Star factorization through Case I.
  auto star = make_graph({0, 1, 1}, {{0, 1, 1}, {0, 2, 1}}, 0);
  RatFunc star_direct = contribution_direct(star);
  CHECK(star_direct ==
        RatFunc(Poly(9) * (Poly(2) + kT), (Poly(1) - kT).pow(3)));
  CHECK(star_direct ==
        defect_case1(0, {{1, 1}, {1, 1}}) *
            atomic_contribution(0, 1, 1) * atomic_contribution(0, 1, 1));
}

TEST_CASE("deeper pinned class value") {
  // Root p0, one unit edge to p1 carrying two unit edges to p2:
  // -27 t^2 / ((t-1)(1+2t)^2).
  auto g = make_graph({0, 1, 2, 2}, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}}, 0);
  RatFunc expect(Poly(-27) * kT * kT,
                 (kT - Poly(1)) * (Poly(1) + Poly(2) * kT).pow(2));
  CHECK(contribution_direct(g) == expect);
  SplitMemo memo;
  CHECK(contribution_split(g, memo) == expect);
}

TEST_CASE("split equals direct on every class of degree <= 3") {
  SplitMemo memo;
  for (int d = 1; d <= 3; ++d)
    for (const auto& c : enumerate_graphs(d)) {
      RatFunc direct = contribution_direct(c.graph);
      RatFunc split = contribution_split(c.graph, memo);
      CHECK(direct == split);
      // No denominator vanishes at the l2 = 0 point t = -1.
      CHECK(direct.den().eval(Rat(-1)) != Rat(0));
    }
  CHECK(memo.size() > 0);
}

TEST_CASE("point evaluation matches the symbolic value") {
  internal::Evaluator<internal::PointField> pt(internal::PointField{Rat(13, 7)});
  internal::Evaluator<internal::PointField> pt2(
      internal::PointField{Rat(-22, 9)});
  SplitMemo memo;
  for (int d = 1; d <= 2; ++d)
    for (const auto& c : enumerate_graphs(d)) {
      RatFunc sym = contribution_split(c.graph, memo);
      CHECK(pt.contribution(c.graph) == sym.eval(Rat(13, 7)));
      CHECK(pt2.contribution(c.graph) == sym.eval(Rat(-22, 9)));
    }
}
