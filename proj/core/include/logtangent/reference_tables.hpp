#pragma once

#include <vector>

#include "logtangent/tables.hpp"

namespace logtangent {

// Frozen unordered multidegree tables for total degrees 1 through 8. These
// are the regression targets for the evaluator: rows lex descending, totals
// equal to the row sums.
struct ReferenceTable {
  int degree = 0;
  std::vector<TableRow> rows;
  Rat total;
};

// Throws std::out_of_range outside [1, reference_max_degree()].
const ReferenceTable& reference_table(int degree);

int reference_max_degree();

}  // namespace logtangent
