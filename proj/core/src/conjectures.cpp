#include "logtangent/conjectures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace logtangent {

namespace {

Rat binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binom: bad arguments");
  return Rat(binomial_z(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

}  // namespace

Rat hyper_d00(long d) {
  if (d < 1) throw std::invalid_argument("hyper_d00: d must be >= 1");
  return binom(4 * d - 1, d) / Rat(d * d);
}

Rat hyper_d1d2(long d1, long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("hyper_d1d2: degrees must be >= 1");
  return Rat(6, d1 * d2) * binom(4 * d1 + 2 * d2 - 1, d1 - 1) *
         binom(4 * d2 + 2 * d1 - 1, d2 - 1);
}

Rat combinatorial_lhs(long d) {
  if (d < 1) throw std::invalid_argument("combinatorial_lhs: d must be >= 1");
  // Partition sum via the exponential formula: sum over partitions of d of
  // (2d)^r prod f(k_i) / #Aut equals [x^d] exp(2d F) with F = sum f(k) x^k.
  // With H = 2d F, the coefficients E_n of exp(H) satisfy
  // n E_n = sum_{j=1}^{n} j H_j E_{n-j}.
  std::vector<Rat> h(static_cast<size_t>(d) + 1);
  for (long k = 1; k <= d; ++k) {
    Rat f = binom(3 * k, k) / Rat(k);
    if (k % 2 == 0) f = -f;
    h[static_cast<size_t>(k)] = Rat(2 * d) * f;
  }
  std::vector<Rat> e(static_cast<size_t>(d) + 1);
  e[0] = Rat(1);
  for (long n = 1; n <= d; ++n) {
    Rat acc;
    for (long j = 1; j <= n; ++j)
      acc += Rat(j) * h[static_cast<size_t>(j)] * e[static_cast<size_t>(n - j)];
    e[static_cast<size_t>(n)] = acc / Rat(n);
  }
  return e[static_cast<size_t>(d)] / Rat(2 * d * d);
}

std::vector<PartitionTerm> partitions_of(long d) {
  if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
  std::vector<PartitionTerm> out;
  std::vector<long> parts;
  // Descending-part recursion; each partition is emitted once.
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      mpz_class aut(1);
      size_t i = 0;
      while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        aut *= factorial_z(static_cast<unsigned long>(j - i));
        i = j;
      }
      out.push_back({parts, aut});
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

bool ConjectureReport::all_ok() const {
  for (const auto& entry : entries)
    if (!entry.ok) return false;
  return true;
}

namespace {

const TableRow* find_row(const ContributionTable& table, const MultiDegree& md) {
  for (const auto& row : table.rows)
    if (row.mdeg == md) return &row;
  return nullptr;
}

void push_equality(ConjectureReport& report, std::string check, int degree,
                   const Rat& lhs, const Rat& rhs) {
  report.entries.push_back(
      {std::move(check), degree, lhs == rhs, lhs.str(), rhs.str()});
}

long gcd3(long a, long b, long c) {
  long g = std::gcd(std::gcd(a, b), c);
  return g;
}

}  // namespace

ConjectureReport verify_conjectures(int d_max, int tables_through,
                                    const EvalOptions& opts) {
  if (d_max < 1) throw std::invalid_argument("verify_conjectures: d_max must be >= 1");
  if (tables_through < 0 || tables_through > d_max)
    throw std::invalid_argument(
        "verify_conjectures: tables_through must lie in [0, d_max]");
  ConjectureReport report;
  for (int d = 1; d <= d_max; ++d)
    push_equality(report, "combinatorial-d00", d, combinatorial_lhs(d),
                  hyper_d00(d));
  for (int d = 1; d <= tables_through; ++d) {
    ContributionTable table = build_table(d, DegreeMode::unordered, opts);
    for (const auto& row : table.rows) {
      const auto& md = row.mdeg;
      Rat factor(symmetry_factor(md));
      Rat ordered_value = row.value / factor;
      if (md.d1 == 0 && md.d2 == 0) {
        push_equality(report, "table-d00" + md.str(), d, row.value,
                      factor * hyper_d00(md.d0));
      } else if (md.d2 == 0) {
        push_equality(report, "table-d1d2" + md.str(), d, row.value,
                      factor * hyper_d1d2(md.d0, md.d1));
      }
      Rat scaled = Rat(gcd3(md.d0, md.d1, md.d2)) *
                   Rat(gcd3(md.d0, md.d1, md.d2)) * ordered_value;
      bool ok = scaled.is_integer() && scaled.sign() >= 0;
      report.entries.push_back({"integrality" + md.str(), d, ok, scaled.str(),
                                "nonnegative integer"});
    }
  }
  return report;
}

std::string report_to_json(const ConjectureReport& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& entry : report.entries) {
    nlohmann::ordered_json e;
    e["check"] = entry.check;
    e["degree"] = entry.degree;
    e["status"] = entry.ok ? "ok" : "fail";
    e["lhs"] = entry.lhs;
    e["rhs"] = entry.rhs;
    j.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

namespace {

Rat row_value(const ContributionTable& table, int a, int b, int c) {
  const TableRow* row =
      find_row(table, MultiDegree::make(a, b, c, DegreeMode::unordered));
  if (!row) throw std::runtime_error("inconsistent table: missing row");
  return row->value;
}

void require_count(const Rat& count) {
  if (!count.is_integer() || count.sign() < 0)
    throw std::runtime_error(
        "inconsistent table: non-integral embedded-curve count");
}

}  // namespace

DegenerationPicture solve_degeneration(int degree,
                                       const ContributionTable& table) {
  if (degree != 2 && degree != 3)
    throw std::invalid_argument(
        "solve_degeneration: only degrees 2 and 3 are supported");
  if (table.degree != degree)
    throw std::invalid_argument("solve_degeneration: table degree mismatch");
  if (table.mode != DegreeMode::unordered)
    throw std::invalid_argument(
        "solve_degeneration: requires the unordered table");

  DegenerationPicture pic;
  pic.degree = degree;
  if (degree == 2) {
    pic.embedded_count = kEmbeddedTangentConics;
    pic.cover_constant = kDoubleCoverLine;
    pic.general_fibre_counts.emplace_back("embedded tangent conics",
                                          Rat(pic.embedded_count));
    pic.general_fibre_counts.emplace_back("double-cover components",
                                          Rat(pic.cover_components));
    Rat split = row_value(table, 1, 1, 0);
    Rat concentrated =
        row_value(table, 2, 0, 0) - Rat(pic.cover_components) * kDoubleCoverLine;
    require_count(split);
    require_count(concentrated);
    pic.arrows.push_back({MultiDegree::make(1, 1, 0, DegreeMode::unordered),
                          split, "tangency split across two lines"});
    pic.arrows.push_back({MultiDegree::make(2, 0, 0, DegreeMode::unordered),
                          concentrated, "maximal tangency at a single line"});
    pic.balances.push_back(row_value(table, 1, 1, 0).str() + " = " + split.str());
    pic.balances.push_back(row_value(table, 2, 0, 0).str() + " = " +
                           concentrated.str() + " + 9·(" +
                           kDoubleCoverLine.str() + ")");
  } else {
    pic.embedded_count = kEmbeddedTangentCubics;
    pic.cover_constant = kTripleCoverLine;
    pic.general_fibre_counts.emplace_back("embedded tangent cubics",
                                          Rat(pic.embedded_count));
    pic.general_fibre_counts.emplace_back("triple-cover components",
                                          Rat(pic.cover_components));
    Rat three_way = row_value(table, 1, 1, 1);
    Rat two_way = row_value(table, 2, 1, 0);
    Rat concentrated =
        row_value(table, 3, 0, 0) - Rat(pic.cover_components) * kTripleCoverLine;
    require_count(three_way);
    require_count(two_way);
    require_count(concentrated);
    pic.arrows.push_back({MultiDegree::make(1, 1, 1, DegreeMode::unordered),
                          three_way, "tangency split across all three lines"});
    pic.arrows.push_back({MultiDegree::make(2, 1, 0, DegreeMode::unordered),
                          two_way, "tangency split across two lines"});
    pic.arrows.push_back({MultiDegree::make(3, 0, 0, DegreeMode::unordered),
                          concentrated, "maximal tangency at a single line"});
    pic.balances.push_back(row_value(table, 1, 1, 1).str() + " = " +
                           three_way.str());
    pic.balances.push_back(row_value(table, 2, 1, 0).str() + " = " +
                           two_way.str());
    pic.balances.push_back(row_value(table, 3, 0, 0).str() + " = " +
                           concentrated.str() + " + 9·(" +
                           kTripleCoverLine.str() + ")");
  }
  Rat total;
  for (const auto& arrow : pic.arrows) total += arrow.count;
  if (total != Rat(pic.embedded_count))
    throw std::runtime_error(
        "inconsistent table: arrow counts do not sum to the embedded-curve "
        "total");
  return pic;
}

}  // namespace logtangent
