#pragma once

#include <string>
#include <vector>

#include "logtangent/cache.hpp"
#include "logtangent/graphs.hpp"
#include "logtangent/rat.hpp"

namespace logtangent {

struct TableRow {
  MultiDegree mdeg;
  Rat value;
};

// Per-multidegree invariants of one total degree. Rows carry only nonzero
// buckets, sorted lexicographically descending.
struct ContributionTable {
  int degree = 0;
  DegreeMode mode = DegreeMode::unordered;
  std::vector<TableRow> rows;
  Rat total;
};

// How bucket sums over graph classes are evaluated. Symbolic sums close each
// bucket to an exact constant rational function; the two-point strategy
// instead evaluates every class at two fixed rational points and insists the
// sums agree. Automatic picks symbolic through degree 6.
enum class SumStrategy { automatic, symbolic, two_point };

struct EvalOptions {
  int jobs = 1;
  SumStrategy strategy = SumStrategy::automatic;
  DiskCache* cache = nullptr;
};

// Orbit size of an unordered multidegree under permuting the three lines:
// 1, 3 or 6. Throws for an ordered input.
int symmetry_factor(const MultiDegree& mdeg);

// Sum of contribution/aut over all classes of the given total degree whose
// multidegree matches. The sum is weight-independent; a non-constant result
// would be an implementation bug and raises std::logic_error.
Rat component_contribution(int degree, const MultiDegree& mdeg,
                           const EvalOptions& opts = {});

ContributionTable build_table(int degree, DegreeMode mode,
                              const EvalOptions& opts = {});

// Sum over all multidegrees: the full tangency invariant of the degree.
Rat total_invariant(int degree, const EvalOptions& opts = {});

std::string table_to_json(const ContributionTable& t);
std::string table_to_csv(const ContributionTable& t);
std::string table_to_markdown(const ContributionTable& t);

}  // namespace logtangent
