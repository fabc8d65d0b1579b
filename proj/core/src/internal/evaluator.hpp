#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "internal/fields.hpp"
#include "internal/rooted.hpp"
#include "logtangent/graphs.hpp"

namespace logtangent::internal {

// Hash map sharded by key hash so worker threads rarely contend. Racing
// computations of the same key are benign: exact values are canonical, so
// the last write stores the same bytes.
template <typename V>
class ShardedMap {
 public:
  std::optional<V> get(const std::string& k) {
    Shard& s = shard(k);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.m.find(k);
    if (it == s.m.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& k, const V& v) {
    Shard& s = shard(k);
    std::lock_guard<std::mutex> lock(s.mu);
    s.m.emplace(k, v);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mu);
      n += s.m.size();
    }
    return n;
  }

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, V> m;
  };
  Shard& shard(const std::string& k) {
    return shards_[std::hash<std::string>{}(k) % kShards];
  }
  static constexpr std::size_t kShards = 32;
  std::array<Shard, kShards> shards_;
};

template <typename F>
class Evaluator {
 public:
  using V = typename F::V;

  explicit Evaluator(F field = F{}) : f_(std::move(field)) {}

  V contribution(const LocGraph& g) {
    const RootedNode root = build_rooted(g);
    // Top-level classes stream through exactly once; only shared interior
    // values are worth keeping.
    return value_root(root, /*memoize=*/false);
  }

  std::size_t memo_size() const { return values_.size(); }

 private:
  static std::vector<FlagSpec> flags_of(const RootedNode& n) {
    std::vector<FlagSpec> fs;
    fs.reserve(n.branches.size());
    for (const auto& b : n.branches) fs.push_back({b.child.label, b.deg});
    return fs;
  }

  V value_root(const RootedNode& n, bool memoize = true) {
    if (n.branches.empty())
      throw std::invalid_argument("contribution: unstable degree-0 vertex");
    if (n.branches.size() == 1) return value_pendant(n.label, n.branches[0]);
    const std::string key = rooted_key(n);
    if (memoize) {
      if (auto hit = values_.get(key)) return *hit;
    }
    V acc = defect1(n.label, flags_of(n));
    for (const auto& b : n.branches) acc = acc * value_pendant(n.label, b);
    if (memoize) values_.put(key, acc);
    return acc;
  }

  V value_pendant(int root_label, const RootedBranch& b) {
    const std::string key =
        "(" + std::to_string(root_label) + " x " + b.token + ")";
    if (auto hit = values_.get(key)) return *hit;
    V v(0);
    if (b.child.branches.empty()) {
      v = atomic_value(f_, root_label, b.child.label, b.deg);
    } else {
      v = defect2(root_label, b.child.label, b.deg, flags_of(b.child)) *
          atomic_value(f_, root_label, b.child.label, b.deg) *
          value_root(b.child);
    }
    values_.put(key, v);
    return v;
  }

  static std::string flags_key(const std::vector<FlagSpec>& flags) {
    // Defects are symmetric in their flags; a sorted key pools permutations.
    std::vector<std::pair<int, int>> fs;
    fs.reserve(flags.size());
    for (const auto& f : flags) fs.push_back({f.far_label, f.deg});
    std::sort(fs.begin(), fs.end());
    std::string k;
    for (const auto& [far, deg] : fs)
      k += std::to_string(far) + ":" + std::to_string(deg) + ",";
    return k;
  }

  V defect1(int root_label, const std::vector<FlagSpec>& flags) {
    const std::string key = "d1|" + std::to_string(root_label) + "|" + flags_key(flags);
    if (auto hit = defects_.get(key)) return *hit;
    V v = defect1_value(f_, root_label, flags);
    defects_.put(key, v);
    return v;
  }

  V defect2(int root_label, int central_label, int d0,
            const std::vector<FlagSpec>& flags) {
    const std::string key = "d2|" + std::to_string(root_label) + "|" +
                            std::to_string(central_label) + "|" +
                            std::to_string(d0) + "|" + flags_key(flags);
    if (auto hit = defects_.get(key)) return *hit;
    V v = defect2_value(f_, root_label, central_label, d0, flags);
    defects_.put(key, v);
    return v;
  }

  F f_;
  ShardedMap<V> values_;
  ShardedMap<V> defects_;
};

}  // namespace logtangent::internal
