// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stacksort/bijections.hpp"
#include "stacksort/sequences.hpp"
#include "stacksort/sweep.hpp"
#include "stacksort/trees.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;

namespace {

// Empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

struct Criterion {
  int number;
  std::string title;
  double seconds_limit;
  Check run;
};

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

std::vector<mpz_class> Z(std::initializer_list<const char*> values) {
  std::vector<mpz_class> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

std::string mismatch(const std::string& what, const std::string& expected, const std::string& got) {
  return what + ": expected " + expected + ", got " + got;
}

std::vector<mpz_class> lassalle_values() {
  return Z({"1", "1", "5", "56", "1092", "32670", "1387815", "79389310", "5882844968",
            "548129834616"});
}

std::string lassalle_reproduction() {
  const auto a = lassalle(10);
  return a == lassalle_values() ? "" : mismatch("lassalle(10)", join(lassalle_values()), join(a));
}

std::string uniquely_sorted_counts() {
  const auto a = lassalle_values();
  for (int k = 0; k <= 5; ++k) {
    const auto found = enumerate_uniquely_sorted(k);
    if (found.size() != a[k]) {
      return mismatch("k=" + std::to_string(k), a[k].get_str(), std::to_string(found.size()));
    }
  }
  for (int k = 0; k <= 4; ++k) {
    std::vector<Permutation> filtered;
    for_each_permutation(2 * k + 1, [&](const Permutation& pi) {
      if (fertility(pi) == 1) filtered.push_back(pi);
    });
    if (filtered != construct_uniquely_sorted(k).permutations) {
      return "k=" + std::to_string(k) + ": fertility filter and construction differ";
    }
  }
  const auto built = construct_uniquely_sorted(5);
  if (built.permutations.size() != a[5] || built.emitted != built.permutations.size()) {
    return mismatch("construction k=5", a[5].get_str(),
                    std::to_string(built.permutations.size()) + " (" +
                        std::to_string(built.emitted) + " emitted)");
  }
  return "";
}

std::string fertility_agreement(const SweepOptions& options) {
  for (int n = 1; n <= 8; ++n) {
    const auto preimages = preimage_counts(n);
    const auto parts = sweep_by_first_entry<std::string>(n, options, [&](int first) {
      std::string failure;
      for_each_permutation_starting_with(n, first, [&](const Permutation& pi) {
        if (!failure.empty()) return;
        const auto it = preimages.find(pi);
        const std::uint64_t brute = it == preimages.end() ? 0 : it->second;
        const mpz_class formula = fertility(pi);
        const std::uint64_t trees = count_trees_with_postorder(pi);
        if (formula != static_cast<unsigned long>(brute) || trees != brute) {
          failure = to_string(pi) + ": formula " + formula.get_str() + ", preimages " +
                    std::to_string(brute) + ", trees " + std::to_string(trees);
        }
      });
      return failure;
    });
    for (const auto& failure : parts) {
      if (!failure.empty()) return failure;
    }
  }
  return "";
}

std::string bijection() {
  for (int n = 1; n <= 8; ++n) {
    const auto configs = all_vhcs(n - 1);
    std::set<OrientedPartition> images;
    for (const auto& config : configs) {
      const auto image = phi(config);
      if (phi_inverse(image) != config) return "round trip fails on " + to_string(config);
      images.insert(image.pair());
    }
    if (images.size() != configs.size()) return "phi is not injective at n=" + std::to_string(n);
    const auto expected = enumerate_P_tilde(n);
    if (std::vector<OrientedPartition>(images.begin(), images.end()) != expected) {
      return mismatch("image at n=" + std::to_string(n), std::to_string(expected.size()) + " pairs",
                      std::to_string(images.size()) + " different pairs");
    }
  }
  return "";
}

std::string cumulant_identity(const SweepOptions& options) {
  const auto k = classical_cumulants(9, -1);
  const auto m = free_poisson_moments(9, -1);
  const auto series = oracle::cumulants({m.coefficients().begin(), m.coefficients().end()});
  for (int n = 1; n <= 9; ++n) {
    if (k[n] != series[n - 1]) return "cumulant recursion and series log differ at n=" + std::to_string(n);
    const auto census = vhc_census(n - 1, options);
    if (mpz_class(static_cast<unsigned long>(census.configurations)) != -k[n]) {
      return mismatch("|VHC(S_" + std::to_string(n - 1) + ")|", mpq_class(-k[n]).get_str(),
                      std::to_string(census.configurations));
    }
  }
  return "";
}

std::string catalan_tutte_sum() {
  for (int n = 1; n <= 8; ++n) {
    mpz_class sum = 0;
    for (const auto& rho : connected_partitions(n)) {
      sum += catalan_weight(rho) * tutte_10(crossing_graph(rho)).value;
    }
    if (sum != factorial(n - 1)) {
      return mismatch("n=" + std::to_string(n), factorial(n - 1).get_str(), sum.get_str());
    }
  }
  return "";
}

std::string recurrences(const SweepOptions& options) {
  const auto d = d_table(8);
  for (int n = 0; n <= 8; ++n) {
    const auto census = vhc_census(n, options);
    for (int m = 0; m <= n; ++m) {
      const std::uint64_t count =
          m < static_cast<int>(census.by_tail_length.size()) ? census.by_tail_length[m] : 0;
      if (d.at(m, n) != static_cast<unsigned long>(count)) {
        return mismatch("D_" + std::to_string(m) + "(" + std::to_string(n) + ")",
                        std::to_string(count), d.at(m, n).get_str());
      }
    }
  }
  const auto e = e_table(17);
  const auto a = lassalle(9);
  for (int k = 0; k <= 8; ++k) {
    if (e.at_least(0, 2 * k + 1) != a[k]) {
      return mismatch("E row sum k=" + std::to_string(k), a[k].get_str(), e.at_least(0, 2 * k + 1).get_str());
    }
  }
  for (int n = 0; n <= 9; ++n) {
    const auto census = vhc_census(n, options);
    for (int m = 0; m <= n; ++m) {
      const auto& row = census.uniquely_sorted_by_tail_length;
      const std::uint64_t count = m < static_cast<int>(row.size()) ? row[m] : 0;
      if (e.at(m, n) != static_cast<unsigned long>(count)) {
        return mismatch("E_" + std::to_string(m) + "(" + std::to_string(n) + ")",
                        std::to_string(count), e.at(m, n).get_str());
      }
    }
  }
  return "";
}

std::string symmetry_and_eye() {
  for (int k = 0; k <= 4; ++k) {
    std::vector<mpz_class> first(2 * k + 2, 0), eyes(2 * k + 2, 0);
    for (const auto& pi : enumerate_uniquely_sorted(k)) {
      first[pi.entry(1)] += 1;
      if (k >= 1) eyes[eye(pi) + 1] += 1;
    }
    for (int l = 1; l <= 2 * k + 1; ++l) {
      const std::string at = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      if (first[l] != first[2 * k + 2 - l]) return "first-entry counts not symmetric at " + at;
      if (k >= 1 && eyes[l] != first[l]) {
        return mismatch("eye count at " + at, first[l].get_str(), eyes[l].get_str());
      }
    }
  }
  return "";
}

std::string log_concavity() {
  for (int k = 0; k <= 5; ++k) {
    const auto sequence = refined_lassalle_first_entry(k);
    if (!is_log_concave(sequence)) return "k=" + std::to_string(k) + ": " + join(sequence) + " is not log-concave";
  }
  return "";
}

std::string doubly_sorted(const SweepOptions& options) {
  const auto expected = Z({"1", "3", "31", "1186"});
  std::vector<mpz_class> computed;
  for (int m = 1; m <= 4; ++m) computed.push_back(doubly_sorted_count(m, 8, options));
  return computed == expected ? "" : mismatch("B_1..B_4", join(expected), join(computed));
}

std::string stack_sort_equivalence() {
  for (int n = 0; n <= 8; ++n) {
    std::string failure;
    for_each_permutation(n, [&](const Permutation& pi) {
      if (failure.empty() && stack_sort_via_trees(pi) != stack_sort(pi)) failure = to_string(pi);
    });
    if (!failure.empty()) return "stack_sort and P(I^-1) differ on " + failure;
  }
  for (int n = 1; n <= 7; ++n) {
    if (w_count(1, n) != catalan(n)) return mismatch("W_1(" + std::to_string(n) + ")", catalan(n).get_str(), w_count(1, n).get_str());
    const mpz_class closed = 2 * binomial(3 * n, n) / ((n + 1) * (2 * n + 1));
    if (w_count(2, n) != closed) return mismatch("W_2(" + std::to_string(n) + ")", closed.get_str(), w_count(2, n).get_str());
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  unsigned jobs = 1;
  int only = 0;
  app.add_option("--jobs", jobs, "Worker threads for sweeps (0 = all cores)");
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  SweepOptions options;
  options.jobs = jobs;

  const std::vector<Criterion> criteria = {
      {1, "Lassalle numbers A_1..A_10", 1, lassalle_reproduction},
      {2, "uniquely sorted counts for k = 0..5", 300, uniquely_sorted_counts},
      {3, "fertility formula, preimages and trees agree on S_n, n <= 8", 600,
       [&] { return fertility_agreement(options); }},
      {4, "phi is a bijection VHC(S_{n-1}) -> P-tilde(n), n <= 8", 600, bijection},
      {5, "|VHC(S_{n-1})| = -k_n(-1), n <= 9", 600, [&] { return cumulant_identity(options); }},
      {6, "Catalan-weighted Tutte sum equals (n-1)!, n <= 8", 60, catalan_tutte_sum},
      {7, "D and E recurrences against censuses", 600, [&] { return recurrences(options); }},
      {8, "first-entry symmetry and eye equidistribution, k <= 4", 600, symmetry_and_eye},
      {9, "refined first-entry sequences log-concave, k <= 5", 600, log_concavity},
      {10, "fertility-2 counts B_1..B_4 = 1, 3, 31, 1186", 120,
       [&] { return doubly_sorted(options); }},
      {11, "stack sort = P(I^-1) on S_n, n <= 8; W_1 and W_2 for n <= 7", 600,
       stack_sort_equivalence},
  };

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = criterion.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > criterion.seconds_limit) {
      failure = "took " + std::to_string(seconds) + " s, limit " + std::to_string(criterion.seconds_limit) + " s";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds << " s";
    if (failure.empty()) {
      std::cout << "PASS criterion " << criterion.number << ": " << criterion.title << " (" << time.str() << ")\n";
    } else {
      all_passed = false;
      std::cout << "FAIL criterion " << criterion.number << ": " << criterion.title << ": " << failure
                << " (" << time.str() << ")\n";
    }
  }
  return all_passed ? 0 : 1;
}
