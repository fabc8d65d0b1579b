#include "logtangent/graphs.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "internal/rooted.hpp"

namespace logtangent {

int LocGraph::total_degree() const {
  int s = 0;
  for (const auto& e : edges) s += e.deg;
  return s;
}

MultiDegree MultiDegree::make(int a, int b, int c, DegreeMode mode) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("MultiDegree: negative component");
  MultiDegree md{a, b, c, mode};
  if (mode == DegreeMode::unordered) {
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end(), std::greater<int>());
    md.d0 = v[0];
    md.d1 = v[1];
    md.d2 = v[2];
  }
  return md;
}

std::string MultiDegree::str() const {
  std::ostringstream os;
  os << "(" << d0 << "," << d1 << "," << d2 << ")";
  return os.str();
}

bool operator<(const MultiDegree& x, const MultiDegree& y) {
  if (x.mode != y.mode) return x.mode < y.mode;
  if (x.d0 != y.d0) return x.d0 < y.d0;
  if (x.d1 != y.d1) return x.d1 < y.d1;
  return x.d2 < y.d2;
}

namespace internal {
namespace {

std::string branch_token(int label, int deg, const std::string& body) {
  std::string t = "(" + std::to_string(label) + ":" + std::to_string(deg);
  if (!body.empty()) {
    t += " ";
    t += body;
  }
  t += ")";
  return t;
}

RootedNode build_subtree(int v, int parent,
                         const std::vector<std::vector<std::pair<int, int>>>& adj,
                         const std::vector<int>& labels) {
  RootedNode node;
  node.label = labels[static_cast<std::size_t>(v)];
  for (const auto& [w, deg] : adj[static_cast<std::size_t>(v)]) {
    if (w == parent) continue;
    RootedBranch b;
    b.deg = deg;
    b.child = build_subtree(w, v, adj, labels);
    b.token = branch_token(b.child.label, b.deg, b.child.body);
    node.branches.push_back(std::move(b));
  }
  std::sort(node.branches.begin(), node.branches.end(),
            [](const RootedBranch& a, const RootedBranch& b) {
              return a.token < b.token;
            });
  for (const auto& b : node.branches) node.body += b.token;
  return node;
}

}  // namespace

RootedNode build_rooted(const LocGraph& g) {
  const std::size_t n = g.labels.size();
  if (n < 2 || g.edges.size() + 1 != n)
    throw std::invalid_argument("LocGraph: not a tree with at least one edge");
  for (int l : g.labels)
    if (l < 0 || l > 2)
      throw std::invalid_argument("LocGraph: vertex label out of range");
  if (g.marked < 0 || static_cast<std::size_t>(g.marked) >= n)
    throw std::invalid_argument("LocGraph: marked vertex out of range");

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : g.edges) {
    if (e.u < 0 || static_cast<std::size_t>(e.u) >= n || e.v < 0 ||
        static_cast<std::size_t>(e.v) >= n || e.u == e.v)
      throw std::invalid_argument("LocGraph: bad edge endpoints");
    if (e.deg < 1) throw std::invalid_argument("LocGraph: edge degree must be positive");
    if (g.labels[static_cast<std::size_t>(e.u)] ==
        g.labels[static_cast<std::size_t>(e.v)])
      throw std::invalid_argument("LocGraph: edge joins equal labels");
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.deg});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.deg});
  }

  std::vector<char> seen(n, 0);
  std::vector<int> stack{g.marked};
  seen[static_cast<std::size_t>(g.marked)] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [w, deg] : adj[static_cast<std::size_t>(v)]) {
      (void)deg;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("LocGraph: disconnected");

  return build_subtree(g.marked, -1, adj, g.labels);
}

std::string rooted_key(const RootedNode& root) {
  return "(" + std::to_string(root.label) + " x " + root.body + ")";
}

mpz_class rooted_aut(const RootedNode& root) {
  mpz_class a = 1;
  std::size_t i = 0;
  while (i < root.branches.size()) {
    std::size_t j = i;
    while (j < root.branches.size() &&
           root.branches[j].token == root.branches[i].token)
      ++j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
    a *= f;
    i = j;
  }
  for (const auto& b : root.branches) a *= rooted_aut(b.child);
  return a;
}

}  // namespace internal

std::pair<CanonKey, mpz_class> canonical_key_and_aut(const LocGraph& g) {
  internal::RootedNode root = internal::build_rooted(g);
  return {internal::rooted_key(root), internal::rooted_aut(root)};
}

MultiDegree multidegree(const LocGraph& g, DegreeMode mode) {
  std::array<int, 3> d{0, 0, 0};
  for (const auto& e : g.edges) {
    if (e.u < 0 || static_cast<std::size_t>(e.u) >= g.labels.size() ||
        e.v < 0 || static_cast<std::size_t>(e.v) >= g.labels.size())
      throw std::invalid_argument("LocGraph: bad edge endpoints");
    const int i = g.labels[static_cast<std::size_t>(e.u)];
    const int j = g.labels[static_cast<std::size_t>(e.v)];
    if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
      throw std::invalid_argument("LocGraph: bad labels across an edge");
    d[static_cast<std::size_t>(3 - i - j)] += e.deg;
  }
  return MultiDegree::make(d[0], d[1], d[2], mode);
}

namespace {

// Canonical subtree shared across the enumeration. Slots sorted by token, so
// the serialization doubles as the identity of the class.
struct CanonTree {
  struct Slot {
    int deg = 1;
    const CanonTree* sub = nullptr;
    std::string token;
  };
  int label = 0;
  int weight = 0;
  mpz_class aut = 1;
  std::vector<Slot> slots;
  std::string body;
};

struct Branch {
  int weight = 0;
  int deg = 1;
  const CanonTree* sub = nullptr;
  std::string token;
};

std::string slot_token(int deg, const CanonTree& sub) {
  std::string t = "(" + std::to_string(sub.label) + ":" + std::to_string(deg);
  if (!sub.body.empty()) {
    t += " ";
    t += sub.body;
  }
  t += ")";
  return t;
}

// Generates one canonical representative per isomorphism class by choosing
// branch multisets in a fixed candidate order; no dedup pass is needed.
class Enumerator {
 public:
  explicit Enumerator(int d) : d_(d) {
    for (auto& t : trees_) t.resize(static_cast<std::size_t>(d_));
  }

  void run(const std::function<void(const LocGraph&, const mpz_class&,
                                    const CanonKey&)>& fn) {
    for (int m = 0; m < 3; ++m) {
      pool_.push_back(CanonTree{});
      pool_.back().label = m;
      trees_[static_cast<std::size_t>(m)][0].push_back(&pool_.back());
    }
    for (int u = 1; u <= d_; ++u) {
      for (int m = 0; m < 3; ++m) append_candidates(m, u);
      for (int m = 0; m < 3; ++m) {
        if (u < d_)
          build_pooled(m, u);
        else
          emit_roots(m, fn);
      }
    }
  }

 private:
  void append_candidates(int m, int w) {
    auto& cands = cands_[static_cast<std::size_t>(m)];
    const std::size_t start = cands.size();
    for (int c = 0; c < 3; ++c) {
      if (c == m) continue;
      for (int s = 1; s <= w; ++s)
        for (const CanonTree* sub :
             trees_[static_cast<std::size_t>(c)][static_cast<std::size_t>(w - s)])
          cands.push_back({w, s, sub, slot_token(s, *sub)});
    }
    std::sort(cands.begin() + static_cast<std::ptrdiff_t>(start), cands.end(),
              [](const Branch& a, const Branch& b) { return a.token < b.token; });
  }

  template <typename Sink>
  void multisets(int m, int target, const Sink& sink) {
    const auto& cands = cands_[static_cast<std::size_t>(m)];
    std::vector<std::size_t> chosen;
    rec(cands, 0, target, chosen, sink);
  }

  template <typename Sink>
  void rec(const std::vector<Branch>& cands, std::size_t start, int remaining,
           std::vector<std::size_t>& chosen, const Sink& sink) {
    if (remaining == 0) {
      sink(chosen);
      return;
    }
    for (std::size_t i = start; i < cands.size() && cands[i].weight <= remaining;
         ++i) {
      chosen.push_back(i);
      rec(cands, i, remaining - cands[i].weight, chosen, sink);
      chosen.pop_back();
    }
  }

  CanonTree materialize(int m, int weight, const std::vector<std::size_t>& idxs) {
    const auto& cands = cands_[static_cast<std::size_t>(m)];
    CanonTree node;
    node.label = m;
    node.weight = weight;
    for (std::size_t idx : idxs) {
      const Branch& b = cands[idx];
      node.slots.push_back({b.deg, b.sub, b.token});
    }
    std::sort(node.slots.begin(), node.slots.end(),
              [](const CanonTree::Slot& a, const CanonTree::Slot& b) {
                return a.token < b.token;
              });
    std::size_t i = 0;
    while (i < node.slots.size()) {
      std::size_t j = i;
      while (j < node.slots.size() && node.slots[j].token == node.slots[i].token)
        ++j;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
      node.aut *= f;
      i = j;
    }
    for (const auto& s : node.slots) {
      node.aut *= s.sub->aut;
      node.body += s.token;
    }
    return node;
  }

  void build_pooled(int m, int u) {
    multisets(m, u, [&](const std::vector<std::size_t>& idxs) {
      pool_.push_back(materialize(m, u, idxs));
      trees_[static_cast<std::size_t>(m)][static_cast<std::size_t>(u)].push_back(
          &pool_.back());
    });
  }

  void emit_roots(int m, const std::function<void(const LocGraph&, const mpz_class&,
                                                  const CanonKey&)>& fn) {
    multisets(m, d_, [&](const std::vector<std::size_t>& idxs) {
      const CanonTree node = materialize(m, d_, idxs);
      LocGraph g;
      g.marked = 0;
      g.labels.push_back(node.label);
      for (const auto& s : node.slots) emit_subtree(g, 0, s);
      fn(g, node.aut, "(" + std::to_string(node.label) + " x " + node.body + ")");
    });
  }

  static void emit_subtree(LocGraph& g, int parent, const CanonTree::Slot& s) {
    const int idx = static_cast<int>(g.labels.size());
    g.labels.push_back(s.sub->label);
    g.edges.push_back({parent, idx, s.deg});
    for (const auto& cs : s.sub->slots) emit_subtree(g, idx, cs);
  }

  int d_;
  std::deque<CanonTree> pool_;  // stable addresses
  std::array<std::vector<std::vector<const CanonTree*>>, 3> trees_;
  std::array<std::vector<Branch>, 3> cands_;
};

}  // namespace

void for_each_graph_class(
    int d, const std::function<void(const LocGraph&, const mpz_class&,
                                    const CanonKey&)>& fn) {
  if (d < 1) throw std::invalid_argument("for_each_graph_class: degree must be >= 1");
  Enumerator e(d);
  e.run(fn);
}

std::vector<GraphClass> enumerate_graphs(int d) {
  std::vector<GraphClass> out;
  for_each_graph_class(d, [&](const LocGraph& g, const mpz_class& aut,
                              const CanonKey& key) {
    out.push_back({g, aut, key});
  });
  return out;
}

}  // namespace logtangent
