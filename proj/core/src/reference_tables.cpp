#include "logtangent/reference_tables.hpp"

#include <stdexcept>

namespace logtangent {

namespace {

TableRow row(int a, int b, int c, long num, long den = 1) {
  return {MultiDegree::make(a, b, c, DegreeMode::unordered), Rat(num, den)};
}

std::vector<ReferenceTable> make_tables() {
  std::vector<ReferenceTable> tables;
  tables.push_back({1, {row(1, 0, 0, 9)}, Rat(9)});
  tables.push_back({2,
                    {row(2, 0, 0, 63, 4), row(1, 1, 0, 18)},
                    Rat(135, 4)});
  tables.push_back({3,
                    {row(3, 0, 0, 55), row(2, 1, 0, 162), row(1, 1, 1, 27)},
                    Rat(244)});
  tables.push_back({4,
                    {row(4, 0, 0, 4095, 16), row(3, 1, 0, 936),
                     row(2, 2, 0, 1089, 2), row(2, 1, 1, 576)},
                    Rat(36999, 16)});
  tables.push_back({5,
                    {row(5, 0, 0, 34884, 25), row(4, 1, 0, 6120),
                     row(3, 2, 0, 8190), row(3, 1, 1, 4680),
                     row(2, 2, 1, 5040)},
                    Rat(635634, 25)});
  tables.push_back({6,
                    {row(6, 0, 0, 33649, 4), row(5, 1, 0, 43092),
                     row(4, 2, 0, 130815, 2), row(4, 1, 1, 40014),
                     row(3, 3, 0, 36992), row(3, 2, 1, 96228),
                     row(2, 2, 2, 67797, 4)},
                    Rat(307095)});
  tables.push_back({7,
                    {row(7, 0, 0, 2664090, 49), row(6, 1, 0, 318780),
                     row(5, 2, 0, 541926), row(5, 1, 1, 350658),
                     row(4, 3, 0, 682290), row(4, 2, 1, 948528),
                     row(3, 3, 1, 513639), row(3, 2, 2, 547344)},
                    Rat(193919175, 49)});
  tables.push_back({8,
                    {row(8, 0, 0, 23666175, 64), row(7, 1, 0, 2442960),
                     row(6, 2, 0, 4601610), row(6, 1, 1, 3116880),
                     row(5, 3, 0, 6375600), row(5, 2, 1, 9448560),
                     row(4, 4, 0, 28227969, 8), row(4, 3, 1, 11139552),
                     row(4, 2, 2, 6045264), row(3, 3, 2, 6407712)},
                    Rat(3422490759L, 64)});
  return tables;
}

}  // namespace

const ReferenceTable& reference_table(int degree) {
  static const std::vector<ReferenceTable> tables = make_tables();
  if (degree < 1 || degree > static_cast<int>(tables.size()))
    throw std::out_of_range("reference_table: degree must lie in [1, 8]");
  return tables[static_cast<size_t>(degree - 1)];
}

int reference_max_degree() { return 8; }

}  // namespace logtangent
