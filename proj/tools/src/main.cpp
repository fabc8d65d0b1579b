#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logtangent/cache.hpp"
#include "logtangent/conjectures.hpp"
#include "logtangent/contrib.hpp"
#include "logtangent/graphs.hpp"
#include "logtangent/reference_tables.hpp"
#include "logtangent/tables.hpp"

namespace lt = logtangent;

namespace {

void warn_long_run(int degree) {
  if (degree >= 7)
    std::cerr << "warning: degree " << degree
              << " evaluates hundreds of thousands of graph classes; this can "
                 "take a while (--jobs helps)\n";
}

int run_table(int degree, const std::string& mode, const std::string& format,
              const lt::EvalOptions& opts) {
  warn_long_run(degree);
  lt::DegreeMode m =
      mode == "ordered" ? lt::DegreeMode::ordered : lt::DegreeMode::unordered;
  lt::ContributionTable table = lt::build_table(degree, m, opts);
  if (format == "csv")
    std::cout << lt::table_to_csv(table);
  else if (format == "md")
    std::cout << lt::table_to_markdown(table);
  else
    std::cout << lt::table_to_json(table);
  return 0;
}

int run_verify_tables(int max_degree, const lt::EvalOptions& opts) {
  bool all_ok = true;
  for (int d = 1; d <= max_degree; ++d) {
    warn_long_run(d);
    const lt::ReferenceTable& ref = lt::reference_table(d);
    lt::ContributionTable got =
        lt::build_table(d, lt::DegreeMode::unordered, opts);
    std::vector<std::string> diffs;
    size_t i = 0, j = 0;
    while (i < got.rows.size() || j < ref.rows.size()) {
      if (i < got.rows.size() && j < ref.rows.size() &&
          got.rows[i].mdeg == ref.rows[j].mdeg) {
        if (got.rows[i].value != ref.rows[j].value)
          diffs.push_back("  row " + got.rows[i].mdeg.str() + ": computed " +
                          got.rows[i].value.str() + ", reference " +
                          ref.rows[j].value.str());
        ++i, ++j;
      } else if (j >= ref.rows.size() ||
                 (i < got.rows.size() && ref.rows[j].mdeg < got.rows[i].mdeg)) {
        diffs.push_back("  unexpected row " + got.rows[i].mdeg.str() + " = " +
                        got.rows[i].value.str());
        ++i;
      } else {
        diffs.push_back("  missing row " + ref.rows[j].mdeg.str());
        ++j;
      }
    }
    if (got.total != ref.total)
      diffs.push_back("  total: computed " + got.total.str() + ", reference " +
                      ref.total.str());
    if (diffs.empty()) {
      std::cout << "degree " << d << ": ok (" << got.rows.size()
                << " rows, total " << got.total.str() << ")\n";
    } else {
      all_ok = false;
      std::cout << "degree " << d << ": MISMATCH\n";
      for (const auto& line : diffs) std::cout << line << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int run_check_conjectures(int max_d, int tables_through,
                          const lt::EvalOptions& opts) {
  lt::ConjectureReport report =
      lt::verify_conjectures(max_d, tables_through, opts);
  std::cout << lt::report_to_json(report);
  return report.all_ok() ? 0 : 1;
}

int run_cross_check(int degree, const lt::EvalOptions& opts) {
  (void)opts;
  lt::SplitMemo memo;
  size_t count = 0;
  bool ok = true;
  lt::for_each_graph_class(degree, [&](const lt::LocGraph& g,
                                       const mpz_class& aut,
                                       const lt::CanonKey& key) {
    (void)aut;
    ++count;
    if (!ok) return;
    lt::RatFunc direct = lt::contribution_direct(g);
    lt::RatFunc split = lt::contribution_split(g, memo);
    if (!(direct == split)) {
      ok = false;
      std::cerr << "mismatch at class " << key << ":\n  direct = "
                << direct.str() << "\n  split  = " << split.str() << "\n";
    }
  });
  if (!ok) return 1;
  std::cout << "all " << count << " graph classes: split == direct\n";
  return 0;
}

int run_degeneration(int degree, const lt::EvalOptions& opts) {
  lt::ContributionTable table =
      lt::build_table(degree, lt::DegreeMode::unordered, opts);
  lt::DegenerationPicture pic = lt::solve_degeneration(degree, table);
  std::cout << "degree " << pic.degree << " degeneration picture\n";
  std::cout << "general fibre:";
  for (size_t i = 0; i < pic.general_fibre_counts.size(); ++i)
    std::cout << (i ? ", " : " ") << pic.general_fibre_counts[i].first << " = "
              << pic.general_fibre_counts[i].second.str();
  std::cout << "\narrows:\n";
  for (const auto& arrow : pic.arrows)
    std::cout << "  " << arrow.count.str() << " -> " << arrow.target.str()
              << "  " << arrow.meaning << "\n";
  std::cout << "balances:\n";
  for (const auto& line : pic.balances) std::cout << "  " << line << "\n";
  std::cout << "total: " << table.total.str() << " = " << pic.embedded_count
            << " + " << pic.cover_components << "·("
            << pic.cover_constant.str() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact multidegree tables of maximal-contact log Gromov-Witten "
      "invariants of the plane relative to the toric triangle"};
  app.require_subcommand(1);

  int jobs = 1;
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--jobs", jobs, "Worker threads for graph evaluation")
      ->check(CLI::Range(1, 512));
  app.add_option("--cache-dir", cache_dir,
                 "Contribution cache directory (default: $LOGTANGENT_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Disable the contribution cache");

  auto* table_cmd =
      app.add_subcommand("table", "Print the contribution table of one degree");
  int t_degree = 0;
  std::string t_mode = "unordered";
  std::string t_format = "json";
  table_cmd->add_option("--degree", t_degree, "Total degree")
      ->required()
      ->check(CLI::Range(1, 64));
  table_cmd->add_option("--mode", t_mode, "Multidegree grouping")
      ->check(CLI::IsMember({"ordered", "unordered"}));
  table_cmd->add_option("--format", t_format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  table_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand(
      "verify-tables", "Recompute tables and compare to the embedded references");
  int v_max = 6;
  verify_cmd->add_option("--max-degree", v_max, "Verify degrees 1..N")
      ->check(CLI::Range(1, lt::reference_max_degree()));
  verify_cmd->fallthrough();

  auto* conj_cmd = app.add_subcommand(
      "check-conjectures", "Check closed forms, integrality, and the partition identity");
  int c_max = 50;
  int c_tables = -1;
  conj_cmd->add_option("--max-d", c_max,
                       "Check the partition identity for d = 1..N")
      ->check(CLI::Range(1, 100000));
  conj_cmd->add_option("--tables-through", c_tables,
                       "Recompute tables through this degree for the "
                       "table-backed checks (default min(max-d, 5))")
      ->check(CLI::Range(0, 64));
  conj_cmd->fallthrough();

  auto* cross_cmd = app.add_subcommand(
      "cross-check", "Compare the split evaluator against direct assembly on every class");
  int x_degree = 0;
  cross_cmd->add_option("--degree", x_degree, "Total degree")
      ->required()
      ->check(CLI::Range(1, 64));
  cross_cmd->fallthrough();

  auto* degen_cmd = app.add_subcommand(
      "degeneration", "Solve the embedded-curve degeneration picture");
  int g_degree = 0;
  degen_cmd->add_option("--degree", g_degree, "Total degree (2 or 3)")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  degen_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    const CLI::App* active = &app;
    while (!active->get_subcommands().empty())
      active = active->get_subcommands().front();
    std::cout << active->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::optional<lt::DiskCache> cache;
  lt::EvalOptions opts;
  opts.jobs = jobs;
  if (!no_cache) {
    std::string dir = cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("LOGTANGENT_CACHE_DIR")) dir = env;
    if (!dir.empty()) {
      cache.emplace(dir);
      if (cache->enabled()) opts.cache = &*cache;
    }
  }

  try {
    if (app.got_subcommand(table_cmd))
      return run_table(t_degree, t_mode, t_format, opts);
    if (app.got_subcommand(verify_cmd)) return run_verify_tables(v_max, opts);
    if (app.got_subcommand(conj_cmd)) {
      int tables_through = c_tables >= 0 ? c_tables : std::min(c_max, 5);
      if (tables_through > c_max) {
        std::cerr << "error: --tables-through must not exceed --max-d\n";
        return 2;
      }
      return run_check_conjectures(c_max, tables_through, opts);
    }
    if (app.got_subcommand(cross_cmd)) return run_cross_check(x_degree, opts);
    if (app.got_subcommand(degen_cmd)) return run_degeneration(g_degree, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
