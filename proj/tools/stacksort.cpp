#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "stacksort/bijections.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/partitions.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sequences.hpp"
#include "stacksort/trees.hpp"
#include "stacksort/verify.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;
using nlohmann::json;

namespace {

enum class Format { text, json, csv };

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Globals {
  Format format = Format::text;
  unsigned jobs = 0;
  bool quiet = false;

  SweepOptions sweep() const {
    SweepOptions options;
    options.jobs = jobs;
    // Progress overwrites one terminal line; redirected stderr stays clean.
    if (!quiet && isatty(STDERR_FILENO)) {
      options.progress = [](int done, int total) {
        std::cerr << "\r  sweep " << done << '/' << total << (done == total ? "\r\33[K" : "")
                  << std::flush;
      };
    }
    return options;
  }
};

std::string join(const std::vector<mpz_class>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].get_str();
  }
  return out;
}

json configuration_json(const ValidHookConfiguration& config) {
  json hooks = json::array();
  for (const Hook& h : config.hooks) hooks.push_back({{"sw", h.sw}, {"ne", h.ne}});
  return {{"host", to_string(config.host)}, {"hooks", hooks}};
}

json pair_json(const OrientedPartition& pair) {
  return {{"partition", to_string(pair.partition)},
          {"orientation", arc_strings(pair.orientation)}};
}

std::string hooks_text(const ValidHookConfiguration& config) {
  std::string out;
  for (const Hook& h : config.hooks) {
    if (!out.empty()) out += ' ';
    out += std::to_string(h.sw) + '>' + std::to_string(h.ne);
  }
  return out;
}

// ---- sort ----

int run_sort(const Globals& g, const std::string& text, int iterations) {
  const Permutation pi = parse_permutation(text);
  const Permutation out = iterate_sort(pi, iterations);
  switch (g.format) {
    case Format::text: std::cout << to_string(out) << '\n'; break;
    case Format::csv:
      std::cout << "input,iterations,output\n"
                << to_string(pi) << ',' << iterations << ',' << to_string(out) << '\n';
      break;
    case Format::json:
      std::cout << json{{"input", to_string(pi)}, {"iterations", iterations},
                        {"output", to_string(out)}}
                       .dump()
                << '\n';
      break;
  }
  return 0;
}

// ---- fertility ----

mpz_class fertility_by(const std::string& method, const Permutation& pi, int bound) {
  if (method == "formula") return fertility(pi);
  if (method == "oracle") return static_cast<unsigned long>(preimages_bruteforce(pi, bound).size());
  return static_cast<unsigned long>(trees_with_postorder(pi, bound).size());
}

int run_fertility(const Globals& g, const std::string& text, const std::string& method,
                  bool all_methods, int bound) {
  const Permutation pi = normalize(parse_permutation(text));
  std::vector<std::string> methods{method};
  if (all_methods) methods = {"formula", "oracle", "trees"};
  std::vector<std::pair<std::string, mpz_class>> values;
  for (const auto& m : methods) values.emplace_back(m, fertility_by(m, pi, bound));
  bool agree = true;
  for (const auto& [m, v] : values) agree = agree && v == values.front().second;

  switch (g.format) {
    case Format::text:
      if (values.size() == 1) {
        std::cout << values.front().second.get_str() << '\n';
      } else {
        for (const auto& [m, v] : values) std::cout << m << ' ' << v.get_str() << '\n';
      }
      break;
    case Format::csv:
      std::cout << "method,fertility\n";
      for (const auto& [m, v] : values) std::cout << m << ',' << v.get_str() << '\n';
      break;
    case Format::json: {
      json out{{"permutation", to_string(pi)}};
      for (const auto& [m, v] : values) out[m] = v.get_str();
      out["agree"] = agree;
      std::cout << out.dump() << '\n';
      break;
    }
  }
  if (!agree) {
    std::cerr << "fertility methods disagree on " << to_string(pi) << '\n';
    return kExitVerification;
  }
  return 0;
}

// ---- enumerate ----

int run_enumerate(const Globals& g, const std::string& kind, int size, int bound) {
  std::vector<std::vector<std::string>> rows;  // csv/text columns
  json out = json::array();
  std::vector<std::string> header;

  if (kind == "vhc") {
    header = {"host", "hooks"};
    for (const auto& config : all_vhcs(size, bound > 0 ? bound : kDefaultOracleBound)) {
      rows.push_back({to_string(config.host), hooks_text(config)});
      out.push_back(configuration_json(config));
    }
  } else if (kind == "uniquely-sorted") {
    header = {"permutation"};
    if (size % 2 == 1) {
      const int k = (size - 1) / 2;
      const int limit = bound > 0 ? bound : kDefaultRefinedBound;
      if (k > limit) throw BoundExceeded("enumerate uniquely-sorted", k, limit);
      for (const auto& pi : enumerate_uniquely_sorted(k)) {
        rows.push_back({to_string(pi)});
        out.push_back(to_string(pi));
      }
    }
  } else {
    header = {"partition", "orientation"};
    const auto pairs = kind == "p-tilde"
                           ? enumerate_P_tilde(size, bound > 0 ? bound : kDefaultPartitionBound)
                           : enumerate_M_tilde(size, bound > 0 ? bound : kDefaultMatchingBound);
    for (const auto& pair : pairs) {
      rows.push_back({to_string(pair.partition), to_string(pair.orientation)});
      out.push_back(pair_json(pair));
    }
  }

  switch (g.format) {
    case Format::text:
      for (const auto& row : rows) {
        std::cout << row[0];
        if (row.size() > 1) std::cout << (row[1].empty() ? " ;" : " ; " + row[1]);
        std::cout << '\n';
      }
      break;
    case Format::csv:
      for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
      std::cout << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << '"' << row[i] << '"';
        std::cout << '\n';
      }
      break;
    case Format::json: std::cout << out.dump() << '\n'; break;
  }
  return 0;
}

// ---- table ----

struct Table {
  std::string provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string text;  // compact text rendering
};

Table count_table(const CountTable& t, int n_max, std::string provenance) {
  Table table{std::move(provenance), {"m", "n", "value"}, {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<mpz_class> row;
    for (int m = 0; m <= n; ++m) {
      table.rows.push_back({std::to_string(m), std::to_string(n), t.at(m, n).get_str()});
      row.push_back(t.at(m, n));
    }
    table.text += "n=" + std::to_string(n) + ": " + join(row) + " (total " +
                  t.at_least(0, n).get_str() + ")\n";
  }
  return table;
}

Table sequence_table(const std::vector<mpz_class>& values, std::string index,
                     std::string provenance) {
  Table table{std::move(provenance), {std::move(index), "value"}, {}, join(values) + "\n"};
  for (std::size_t i = 0; i < values.size(); ++i) {
    table.rows.push_back({std::to_string(i + 1), values[i].get_str()});
  }
  return table;
}

int run_table(const Globals& g, const std::string& name, int bound) {
  Table table;
  if (name == "lassalle") {
    table = sequence_table(lassalle(bound), "m", "Lassalle recurrence with A_1 = 1");
  } else if (name == "D") {
    table = count_table(d_table(bound), bound,
                        "hook configurations of S_n by tail length m, tail-length recurrence");
  } else if (name == "E") {
    table = count_table(e_table(bound), bound,
                        "uniquely sorted permutations of S_n by tail length m, tail-length "
                        "recurrence");
  } else if (name == "refined-first") {
    table = sequence_table(refined_lassalle_first_entry(bound), "l",
                           "uniquely sorted permutations of S_{2k+1} by first entry l, k = " +
                               std::to_string(bound));
  } else {
    table = sequence_table(refined_lassalle_eye(bound), "l",
                           "uniquely sorted permutations of S_{2k+1} by eye l - 1, k = " +
                               std::to_string(bound));
  }

  switch (g.format) {
    case Format::text:
      std::cout << "# " << table.provenance << '\n' << table.text;
      break;
    case Format::csv:
      std::cout << "# " << table.provenance << '\n';
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        std::cout << (i ? "," : "") << table.columns[i];
      }
      std::cout << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& row : table.rows) {
        json entry;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (table.columns[i] == "value") {
            entry[table.columns[i]] = row[i];
          } else {
            entry[table.columns[i]] = std::stoi(row[i]);
          }
        }
        rows.push_back(entry);
      }
      std::cout << json{{"table", name}, {"provenance", table.provenance}, {"rows", rows}}.dump()
                << '\n';
      break;
    }
  }
  return 0;
}

// ---- verify ----

int run_verify(const Globals& g, const std::string& suite_name, int bound) {
  const Suite suite = parse_suite(suite_name);
  const VerificationReport report = run_suite(suite, bound, g.sweep());

  switch (g.format) {
    case Format::text:
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.parameters
                  << "] expected=" << c.expected << " (" << c.provenance
                  << ") computed=" << c.computed;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << c.seconds;
        std::cout << " " << time.str() << "s\n";
        if (!c.counterexample.empty()) std::cout << "  counterexample: " << c.counterexample << '\n';
      }
      std::cout << (report.passed() ? "all " : "some ") << "checks "
                << (report.passed() ? "passed" : "FAILED") << " (" << report.checks.size()
                << " run)\n";
      break;
    case Format::csv:
      std::cout << "name,parameters,expected,provenance,computed,passed,seconds,counterexample\n";
      for (const auto& c : report.checks) {
        std::cout << '"' << c.name << "\",\"" << c.parameters << "\",\"" << c.expected << "\","
                  << c.provenance << ",\"" << c.computed << "\"," << (c.passed ? "true" : "false")
                  << ',' << c.seconds << ",\"" << c.counterexample << "\"\n";
      }
      break;
    case Format::json: {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"parameters", c.parameters},
                          {"expected", c.expected},
                          {"provenance", c.provenance},
                          {"computed", c.computed},
                          {"passed", c.passed},
                          {"seconds", c.seconds},
                          {"counterexample", c.counterexample}});
      }
      std::cout << json{{"suite", to_string(suite)}, {"passed", report.passed()}, {"checks", checks}}
                       .dump(2)
                << '\n';
      break;
    }
  }
  return report.passed() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack-sorting, valid hook configurations and Lassalle's sequence"};
  app.require_subcommand(1);

  Globals g;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps (0 = all cores)");
  app.add_flag("--quiet", g.quiet, "No progress on standard error");

  std::string perm_text;
  int iterations = 1;
  auto* sort_cmd = app.add_subcommand("sort", "Apply the stack-sorting map");
  sort_cmd->add_option("permutation", perm_text, "Entries separated by spaces")->required();
  sort_cmd->add_option("--iterations,-t", iterations, "Number of passes")
      ->check(CLI::NonNegativeNumber);

  std::string method = "formula";
  bool all_methods = false;
  int oracle_bound = kDefaultOracleBound;
  auto* fert_cmd = app.add_subcommand("fertility", "Number of stack-sorting preimages");
  fert_cmd->add_option("permutation", perm_text, "Entries separated by spaces")->required();
  fert_cmd->add_option("--method", method, "formula, oracle or trees")
      ->check(CLI::IsMember({"formula", "oracle", "trees"}));
  fert_cmd->add_flag("--all-methods", all_methods, "Run every method and compare");
  fert_cmd->add_option("--bound", oracle_bound, "Largest length the oracles accept");

  std::string kind;
  int size = 0;
  int enum_bound = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "List combinatorial objects in sorted order");
  enum_cmd->add_option("kind", kind, "vhc, uniquely-sorted, p-tilde or m-tilde")
      ->required()
      ->check(CLI::IsMember({"vhc", "uniquely-sorted", "p-tilde", "m-tilde"}));
  enum_cmd->add_option("size", size, "Number of points or ground set size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--bound", enum_bound, "Override the size bound");

  std::string table_name;
  int table_bound = 0;
  auto* table_cmd = app.add_subcommand("table", "Print a sequence or count table");
  table_cmd->add_option("name", table_name, "lassalle, D, E, refined-first or refined-eye")
      ->required()
      ->check(CLI::IsMember({"lassalle", "D", "E", "refined-first", "refined-eye"}));
  table_cmd->add_option("bound", table_bound, "Last index (k for the refined tables)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string suite_name;
  int verify_bound = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite_name, "all, bijection, identities, recurrences, conjecture")
      ->required()
      ->check(CLI::IsMember({"all", "bijection", "identities", "recurrences", "conjecture"}));
  verify_cmd->add_option("--bound", verify_bound, "Size bound (0 = suite default)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sort_cmd) return run_sort(g, perm_text, iterations);
    if (*fert_cmd) return run_fertility(g, perm_text, method, all_methods, oracle_bound);
    if (*enum_cmd) return run_enumerate(g, kind, size, enum_bound);
    if (*table_cmd) return run_table(g, table_name, table_bound);
    if (*verify_cmd) return run_verify(g, suite_name, verify_bound);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
