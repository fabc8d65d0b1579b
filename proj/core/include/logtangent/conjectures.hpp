#pragma once

#include <string>
#include <utility>
#include <vector>

#include "logtangent/rat.hpp"
#include "logtangent/tables.hpp"

namespace logtangent {

// Closed form conjectured for the fully concentrated multidegree (d,0,0),
// one tangency point of maximal contact: binom(4d-1, d) / d^2.
Rat hyper_d00(long d);

// Closed form conjectured for multidegrees (d1, d2, 0) with d1, d2 >= 1:
// (6/(d1 d2)) binom(4d1+2d2-1, d1-1) binom(4d2+2d1-1, d2-1).
Rat hyper_d1d2(long d1, long d2);

// Partition sum conjecturally equal to hyper_d00(d): over partitions
// (k_1..k_r) of d, 2^(r-1) d^(r-2) / #Aut * prod ((-1)^(k_i-1) binom(3k_i, k_i) / k_i),
// computed through the exponential generating function (the sum equals
// [x^d] exp(2d F) / (2 d^2) with F = sum_k f(k) x^k).
Rat combinatorial_lhs(long d);

// One strictly positive unordered partition of d, parts non-increasing;
// aut is the product of factorials of part multiplicities.
struct PartitionTerm {
  std::vector<long> parts;
  mpz_class aut;
};

// All partitions of d in lexicographically descending part order. Used by the
// term-by-term oracle for combinatorial_lhs; impractical past d ~ 60.
std::vector<PartitionTerm> partitions_of(long d);

struct ConjectureEntry {
  std::string check;
  int degree = 0;
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

struct ConjectureReport {
  std::vector<ConjectureEntry> entries;
  bool all_ok() const;
};

// Runs every conjecture check: the combinatorial identity for d <= d_max,
// and the table-backed checks (closed forms for (d,0,0) and (d1,d2,0) rows,
// and integrality of gcd^2-rescaled ordered rows) for d <= tables_through.
// Failures become report entries, never exceptions.
ConjectureReport verify_conjectures(int d_max, int tables_through,
                                    const EvalOptions& opts = {});

std::string report_to_json(const ConjectureReport& report);

// Contributions of the nine one-dimensional multiple-cover components in the
// torsion-point count, per cover type.
inline const Rat kDoubleCoverLine{3, 4};
inline const Rat kTripleCoverLine{10, 9};
// Stored for the degree-4 picture, which this solver does not support: the
// component count bookkeeping there is unresolved.
inline const Rat kQuadrupleCoverLine{35, 16};
inline const Rat kDoubleCoverConic{9, 4};

// Number of embedded tangent curves predicted by the torsion-point count.
inline constexpr long kEmbeddedTangentConics = 27;
inline constexpr long kEmbeddedTangentCubics = 234;

struct DegenerationArrow {
  MultiDegree target;
  Rat count;
  std::string meaning;
};

// Consistency picture matching the torsion-point count against the table:
// every embedded curve degenerates onto the triangle with some multidegree,
// and the fully concentrated row additionally absorbs the nine
// multiple-cover components.
struct DegenerationPicture {
  int degree = 0;
  long embedded_count = 0;
  int cover_components = 9;
  Rat cover_constant;
  // General-fibre component census: embedded curves and cover components.
  std::vector<std::pair<std::string, Rat>> general_fibre_counts;
  std::vector<DegenerationArrow> arrows;
  // One equation per central multidegree: table row = arrows in, plus the
  // multiple-cover term on the fully concentrated row.
  std::vector<std::string> balances;
};

// Solves the picture for degree 2 or 3 from the unordered table. Throws
// std::invalid_argument for any other degree and std::runtime_error when the
// table is inconsistent with the torsion-point count.
DegenerationPicture solve_degeneration(int degree,
                                       const ContributionTable& table);

}  // namespace logtangent
