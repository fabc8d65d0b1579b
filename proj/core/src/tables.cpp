#include "logtangent/tables.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "internal/evaluator.hpp"
#include "internal/parallel.hpp"
#include "json.hpp"

namespace logtangent {

namespace {

constexpr std::size_t kBatch = 2048;

// Fixed evaluation points with numerator and denominator beyond any
// coefficient the calculus can produce at supported degrees, so no reduced
// denominator can vanish there. A pole still just advances to the next pair.
const std::array<std::pair<Rat, Rat>, 3>& point_pairs() {
  static const std::array<std::pair<Rat, Rat>, 3> pairs = {{
      {Rat(1000003, 999983), Rat(-1000033, 999979)},
      {Rat(1000037, 999961), Rat(-1000039, 999959)},
      {Rat(1000099, 999953), Rat(-1000121, 999979)},
  }};
  return pairs;
}

struct ClassRec {
  LocGraph graph;
  Rat inv_aut;
  CanonKey key;
  MultiDegree bucket;
};

// Streams classes of the given degree in batches through `process`, which
// receives the batch and must leave per-class results in `out`.
template <typename Process>
void stream_batches(int degree, DegreeMode mode, const Process& process) {
  std::vector<ClassRec> batch;
  batch.reserve(kBatch);
  for_each_graph_class(degree, [&](const LocGraph& g, const mpz_class& aut,
                                   const CanonKey& key) {
    batch.push_back(
        {g, Rat(1) / Rat(mpz_class(aut)), key, multidegree(g, mode)});
    if (batch.size() >= kBatch) {
      process(batch);
      batch.clear();
    }
  });
  if (!batch.empty()) process(batch);
}

using DenGroups = std::map<Poly, Poly>;

// Accumulates num/den contributions grouped by identical denominator, which
// keeps the expensive polynomial gcds out of the inner loop.
void add_to_groups(DenGroups& groups, const RatFunc& value, const Rat& scale) {
  Poly num = value.num();
  num *= scale;
  auto it = groups.find(value.den());
  if (it == groups.end())
    groups.emplace(value.den(), std::move(num));
  else
    it->second += num;
}

Poly poly_lcm_monic(const Poly& a, const Poly& b) {
  Poly g = Poly::gcd(a, b);
  return a * Poly::divmod(b, g).first;
}

// Closes a grouped sum to its constant value. The common denominator divides
// the numerator exactly precisely when the sum is weight-independent.
Rat fold_groups(const DenGroups& groups) {
  if (groups.empty()) return Rat(0);
  Poly lcm(Rat(1));
  for (const auto& [den, num] : groups) {
    (void)num;
    lcm = poly_lcm_monic(lcm, den);
  }
  Poly total;
  for (const auto& [den, num] : groups)
    total += num * Poly::divmod(lcm, den).first;
  if (total.is_zero()) return Rat(0);
  auto [q, r] = Poly::divmod(total, lcm);
  if (!r.is_zero() || q.degree() > 0)
    throw std::logic_error(
        "bucket sum depends on the torus weights; evaluator bug");
  return q.constant();
}

template <typename Filter>
std::map<MultiDegree, Rat> run_symbolic(int degree, DegreeMode mode,
                                        const Filter& keep,
                                        const EvalOptions& opts) {
  internal::Evaluator<internal::SymbolicField> eval;
  std::map<MultiDegree, DenGroups> buckets;
  stream_batches(degree, mode, [&](const std::vector<ClassRec>& batch) {
    std::vector<RatFunc> results(batch.size());
    std::vector<char> active(batch.size(), 0);
    std::vector<char> fresh(batch.size(), 0);
    internal::parallel_for(batch.size(), opts.jobs, [&](std::size_t i) {
      const ClassRec& rec = batch[i];
      if (!keep(rec.bucket)) return;
      active[i] = 1;
      if (opts.cache && opts.cache->enabled()) {
        if (auto hit = opts.cache->load(rec.key)) {
          results[i] = std::move(*hit);
          return;
        }
      }
      results[i] = eval.contribution(rec.graph);
      fresh[i] = 1;
    });
    // Cache writes stay on this thread so there is a single writer.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!active[i]) continue;
      if (fresh[i] && opts.cache && opts.cache->enabled())
        opts.cache->store(batch[i].key, results[i]);
      add_to_groups(buckets[batch[i].bucket], results[i], batch[i].inv_aut);
    }
  });
  std::map<MultiDegree, Rat> out;
  for (const auto& [mdeg, groups] : buckets) out[mdeg] = fold_groups(groups);
  return out;
}

template <typename Filter>
std::map<MultiDegree, Rat> run_two_point(int degree, DegreeMode mode,
                                         const Filter& keep,
                                         const EvalOptions& opts,
                                         const Rat& t1, const Rat& t2) {
  internal::Evaluator<internal::PointField> ev1(internal::PointField{t1});
  internal::Evaluator<internal::PointField> ev2(internal::PointField{t2});
  std::map<MultiDegree, std::pair<Rat, Rat>> buckets;
  stream_batches(degree, mode, [&](const std::vector<ClassRec>& batch) {
    std::vector<std::pair<Rat, Rat>> results(batch.size());
    std::vector<char> active(batch.size(), 0);
    internal::parallel_for(batch.size(), opts.jobs, [&](std::size_t i) {
      const ClassRec& rec = batch[i];
      if (!keep(rec.bucket)) return;
      active[i] = 1;
      results[i] = {ev1.contribution(rec.graph), ev2.contribution(rec.graph)};
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!active[i]) continue;
      auto& [s1, s2] = buckets[batch[i].bucket];
      s1 += results[i].first * batch[i].inv_aut;
      s2 += results[i].second * batch[i].inv_aut;
    }
  });
  std::map<MultiDegree, Rat> out;
  for (const auto& [mdeg, sums] : buckets) {
    if (sums.first != sums.second)
      throw std::logic_error(
          "bucket sum depends on the torus weights; evaluator bug");
    out[mdeg] = sums.first;
  }
  return out;
}

template <typename Filter>
std::map<MultiDegree, Rat> run_buckets(int degree, DegreeMode mode,
                                       const Filter& keep,
                                       const EvalOptions& opts) {
  SumStrategy strategy = opts.strategy;
  if (strategy == SumStrategy::automatic)
    strategy = degree <= 6 ? SumStrategy::symbolic : SumStrategy::two_point;
  if (strategy == SumStrategy::symbolic)
    return run_symbolic(degree, mode, keep, opts);
  for (const auto& [t1, t2] : point_pairs()) {
    try {
      return run_two_point(degree, mode, keep, opts, t1, t2);
    } catch (const std::domain_error&) {
      // Pole at this point pair; deterministic fallback to the next one.
    }
  }
  throw std::runtime_error("all evaluation point pairs hit a pole");
}

const auto kKeepAll = [](const MultiDegree&) { return true; };

}  // namespace

int symmetry_factor(const MultiDegree& mdeg) {
  if (mdeg.mode != DegreeMode::unordered)
    throw std::invalid_argument("symmetry_factor: needs an unordered multidegree");
  if (mdeg.d0 == mdeg.d1 && mdeg.d1 == mdeg.d2) return 1;
  if (mdeg.d0 == mdeg.d1 || mdeg.d1 == mdeg.d2) return 3;
  return 6;
}

Rat component_contribution(int degree, const MultiDegree& mdeg,
                           const EvalOptions& opts) {
  if (mdeg.total() != degree)
    throw std::invalid_argument(
        "component_contribution: multidegree total differs from the degree");
  auto buckets = run_buckets(
      degree, mdeg.mode, [&](const MultiDegree& b) { return b == mdeg; }, opts);
  auto it = buckets.find(mdeg);
  return it == buckets.end() ? Rat(0) : it->second;
}

ContributionTable build_table(int degree, DegreeMode mode,
                              const EvalOptions& opts) {
  auto buckets = run_buckets(degree, mode, kKeepAll, opts);
  ContributionTable t;
  t.degree = degree;
  t.mode = mode;
  for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
    if (it->second.is_zero()) continue;
    t.rows.push_back({it->first, it->second});
    t.total += it->second;
  }
  return t;
}

Rat total_invariant(int degree, const EvalOptions& opts) {
  return build_table(degree, DegreeMode::unordered, opts).total;
}

namespace {

const char* mode_name(DegreeMode mode) {
  return mode == DegreeMode::ordered ? "ordered" : "unordered";
}

}  // namespace

std::string table_to_json(const ContributionTable& t) {
  nlohmann::ordered_json j;
  j["degree"] = t.degree;
  j["mode"] = mode_name(t.mode);
  j["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& row : t.rows) {
    nlohmann::ordered_json r;
    r["mdeg"] = {row.mdeg.d0, row.mdeg.d1, row.mdeg.d2};
    r["value"] = row.value.str();
    j["rows"].push_back(std::move(r));
  }
  j["total"] = t.total.str();
  return j.dump(2) + "\n";
}

std::string table_to_csv(const ContributionTable& t) {
  std::ostringstream os;
  os << "d0,d1,d2,value\n";
  for (const TableRow& row : t.rows)
    os << row.mdeg.d0 << "," << row.mdeg.d1 << "," << row.mdeg.d2 << ","
       << row.value.str() << "\n";
  os << "total,,," << t.total.str() << "\n";
  return os.str();
}

std::string table_to_markdown(const ContributionTable& t) {
  std::ostringstream os;
  os << "| Multidegree | Contribution |\n";
  os << "| --- | --- |\n";
  for (const TableRow& row : t.rows)
    os << "| " << row.mdeg.str() << " | " << row.value.str() << " |\n";
  os << "| Total | " << t.total.str() << " |\n";
  return os.str();
}

}  // namespace logtangent
