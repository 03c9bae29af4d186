#include "stacksort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "stacksort/bijections.hpp"
#include "stacksort/partitions.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sequences.hpp"
#include "stacksort/trees.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

namespace {

struct Outcome {
  std::string expected;
  std::string computed;
  std::string counterexample;
};

template <class Body>
void check(VerificationReport& report, std::string name, std::string parameters,
           std::string provenance, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{std::move(name), std::move(parameters), {}, std::move(provenance), {}, false,
                     0, {}};
  try {
    Outcome outcome = body();
    result.expected = std::move(outcome.expected);
    result.computed = std::move(outcome.computed);
    result.counterexample = std::move(outcome.counterexample);
    result.passed = result.counterexample.empty() && result.expected == result.computed;
  } catch (const std::exception& error) {
    result.computed = std::string("error: ") + error.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(result));
}

std::string str(const mpz_class& x) { return x.get_str(); }
std::string str(const mpq_class& x) { return x.get_str(); }

std::string join(const std::vector<mpz_class>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += v.get_str();
  }
  return out;
}

std::string n_param(int n) { return "n=" + std::to_string(n); }

// Tutte values of every connected partition of {1,...,n}.
std::vector<std::pair<SetPartition, mpz_class>> weighted_connected(int n) {
  std::vector<std::pair<SetPartition, mpz_class>> out;
  for (const auto& rho : connected_partitions(n)) {
    out.emplace_back(rho, tutte_10(crossing_graph(rho)).value);
  }
  return out;
}

void identities(VerificationReport& report, int bound, const SweepOptions& options) {
  const std::vector<mpq_class> lambdas{-1, 1, 2, mpq_class(-1, 2)};
  const BigRationalSeries k_minus_one = classical_cumulants(bound, -1);

  for (int n = 1; n <= bound; ++n) {
    check(report, "vhc count equals -k_n(-1)", n_param(n), "recomputed", [&]() -> Outcome {
      const auto census = vhc_census(n - 1, options, bound);
      return {str(-k_minus_one[n]), std::to_string(census.configurations), {}};
    });
  }

  for (int n = 1; n <= bound; ++n) {
    for (const auto& lambda : lambdas) {
      check(report, "cumulant from hook counts", n_param(n) + " lambda=" + str(lambda),
            "recomputed", [&]() -> Outcome {
              return {str(classical_cumulants(n, lambda)[n]),
                      str(cumulant_via_vhc(n, lambda, bound, options)), {}};
            });
    }
  }

  for (int n = 1; n <= bound; ++n) {
    const auto weighted = weighted_connected(n);
    check(report, "catalan-weighted tutte sum equals (n-1)!", n_param(n), "recomputed",
          [&]() -> Outcome {
            mpz_class sum = 0;
            for (const auto& [rho, t] : weighted) sum += catalan_weight(rho) * t;
            return {str(factorial(n - 1)), str(sum), {}};
          });
    for (const mpq_class& lambda : {mpq_class(-1), mpq_class(1), mpq_class(2)}) {
      check(report, "cumulant as tutte sum", n_param(n) + " lambda=" + str(lambda), "recomputed",
            [&]() -> Outcome {
              mpq_class sum = 0;
              for (const auto& [rho, t] : weighted) {
                mpq_class term = t;
                for (int b = 0; b < rho.block_count(); ++b) term *= -lambda;
                sum += term;
              }
              return {str(classical_cumulants(n, lambda)[n]), str(mpq_class(-sum)), {}};
            });
    }
  }

  const auto a = lassalle(10);
  for (int m = 1; 2 * m <= bound + 1; ++m) {
    check(report, "oriented connected matchings count Lassalle", "n=" + std::to_string(2 * m),
          "published", [&]() -> Outcome {
            return {str(a[m - 1]), std::to_string(enumerate_M_tilde(2 * m, 2 * m).size()), {}};
          });
  }

  for (int n = 1; n <= bound; ++n) {
    check(report, "fertility: formula, preimages, trees", n_param(n), "recomputed",
          [&]() -> Outcome {
            const auto preimages = preimage_counts(n, bound);
            std::uint64_t total = 0;
            std::string bad;
            for_each_permutation(n, [&](const Permutation& pi) {
              const auto it = preimages.find(pi);
              const std::uint64_t brute = it == preimages.end() ? 0 : it->second;
              total += brute;
              if (!bad.empty()) return;
              if (fertility(pi) != brute || count_trees_with_postorder(pi) != brute) {
                bad = to_string(pi);
              }
            });
            return {str(factorial(n)), std::to_string(total), bad};
          });
    check(report, "stack sort equals postorder of in-order tree", n_param(n), "recomputed",
          [&]() -> Outcome {
            std::string bad;
            for_each_permutation(n, [&](const Permutation& pi) {
              if (bad.empty() && stack_sort(pi) != stack_sort_via_trees(pi)) bad = to_string(pi);
            });
            return {"agree", bad.empty() ? "agree" : "differ", bad};
          });
    check(report, "one-pass sortable count is Catalan", n_param(n), "recomputed",
          [&]() -> Outcome {
            return {str(catalan(n)), str(w_count(1, n, bound, options)), {}};
          });
    check(report, "two-pass sortable closed form", n_param(n), "recomputed", [&]() -> Outcome {
      return {str(two_stack_sortable_closed_form(n)), str(w_count(2, n, bound, options)), {}};
    });
  }

  const std::vector<mpz_class> doubly{1, 3, 31, 1186};
  for (int m = 1; 2 * m <= bound && m <= 4; ++m) {
    check(report, "permutations with fertility 2", "n=" + std::to_string(2 * m), "published",
          [&]() -> Outcome {
            return {str(doubly[m - 1]), str(doubly_sorted_count(m, 2 * m, options)), {}};
          });
  }
}

void bijection(VerificationReport& report, int bound) {
  for (int n = 1; n <= bound; ++n) {
    check(report, "phi is a bijection onto oriented connected partitions", n_param(n),
          "recomputed", [&]() -> Outcome {
            std::vector<OrientedPartition> images;
            std::string bad;
            for (const auto& config : all_vhcs(n - 1, bound)) {
              const PhiImage image = phi(config);
              images.push_back(image.pair());
              if (bad.empty() && phi_inverse(image) != config) bad = to_string(config);
              if (bad.empty()) eta(config);
            }
            std::sort(images.begin(), images.end());
            const auto target = enumerate_P_tilde(n, bound);
            if (bad.empty() && std::adjacent_find(images.begin(), images.end()) != images.end()) {
              bad = "two configurations share an image";
            }
            if (bad.empty() && images != target) bad = "image differs from the enumeration";
            return {std::to_string(target.size()), std::to_string(images.size()), bad};
          });
  }
  for (int k = 0; 2 * k + 2 <= bound; ++k) {
    check(report, "restricted phi onto oriented connected matchings",
          "n=" + std::to_string(2 * k + 2), "recomputed", [&]() -> Outcome {
            std::vector<OrientedPartition> images;
            std::string bad;
            for (const auto& pi : enumerate_uniquely_sorted(k)) {
              images.push_back(phi_restricted(unique_configuration(pi)).pair());
              if (bad.empty() && !first_entry_block_property(pi)) bad = to_string(pi);
            }
            std::sort(images.begin(), images.end());
            const auto target = enumerate_M_tilde(2 * k + 2, 2 * k + 2);
            if (bad.empty() && images != target) bad = "image differs from the enumeration";
            return {std::to_string(target.size()), std::to_string(images.size()), bad};
          });
  }
}

void recurrences(VerificationReport& report, int bound, const SweepOptions& options) {
  const CountTable d = d_table(bound);
  const CountTable e = e_table(std::max(bound, 17));
  for (int n = 0; n <= bound; ++n) {
    check(report, "D table against tail-length census", n_param(n), "recomputed",
          [&]() -> Outcome {
            const auto census = vhc_census(n, options, bound);
            std::string expected, computed;
            for (int m = 0; m <= n; ++m) {
              expected += (m ? "," : "") + std::to_string(census.by_tail_length[m]);
              computed += (m ? "," : "") + str(d.at(m, n));
            }
            return {expected, computed, {}};
          });
    check(report, "E table against uniquely sorted census", n_param(n), "recomputed",
          [&]() -> Outcome {
            const auto census = vhc_census(n, options, bound);
            std::string expected, computed;
            for (int m = 0; m <= n; ++m) {
              const std::uint64_t unique = census.uniquely_sorted_by_tail_length[m];
              expected += (m ? "," : "") + std::to_string(unique);
              computed += (m ? "," : "") + str(e.at(m, n));
            }
            return {expected, computed, {}};
          });
  }
  const auto a = lassalle(9);
  for (int k = 0; k <= 8; ++k) {
    check(report, "E row sum equals Lassalle", "k=" + std::to_string(k), "published",
          [&]() -> Outcome { return {str(a[k]), str(e.at_least(0, 2 * k + 1)), {}}; });
  }
  for (int k = 0; 2 * k + 1 <= bound; ++k) {
    check(report, "E row sum equals construction count", "k=" + std::to_string(k), "recomputed",
          [&]() -> Outcome {
            return {std::to_string(enumerate_uniquely_sorted(k).size()),
                    str(e.at_least(0, 2 * k + 1)), {}};
          });
  }
}

void conjecture(VerificationReport& report, int bound) {
  const auto a = lassalle(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    const auto first = refined_lassalle_first_entry(k);
    const std::string param = "k=" + std::to_string(k);
    check(report, "first-entry counts sum to Lassalle", param, "published", [&]() -> Outcome {
      mpz_class sum = 0;
      for (const auto& x : first) sum += x;
      return {str(a[k]), str(sum), {}};
    });
    check(report, "first-entry counts are symmetric", param, "recomputed", [&]() -> Outcome {
      std::vector<mpz_class> reversed(first.rbegin(), first.rend());
      return {join(first), join(reversed), {}};
    });
    check(report, "first-entry counts are log-concave", param, "published", [&]() -> Outcome {
      return {"true", is_log_concave(first) ? "true" : "false",
              is_log_concave(first) ? "" : join(first)};
    });
    if (k >= 1) {
      check(report, "eye counts equal first-entry counts", param, "recomputed",
            [&]() -> Outcome { return {join(first), join(refined_lassalle_eye(k)), {}}; });
    }
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "bijection") return Suite::bijection;
  if (name == "identities") return Suite::identities;
  if (name == "recurrences") return Suite::recurrences;
  if (name == "conjecture") return Suite::conjecture;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::bijection: return "bijection";
    case Suite::identities: return "identities";
    case Suite::recurrences: return "recurrences";
    case Suite::conjecture: return "conjecture";
  }
  return "?";
}

int default_bound(Suite suite) {
  switch (suite) {
    case Suite::identities: return 7;
    case Suite::bijection: return 7;
    case Suite::recurrences: return 8;
    case Suite::conjecture: return 5;
    case Suite::all: return 0;
  }
  return 0;
}

VerificationReport run_suite(Suite suite, int bound, const SweepOptions& options) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  VerificationReport report;
  auto pick = [bound](Suite s) { return bound > 0 ? bound : default_bound(s); };
  if (suite == Suite::all || suite == Suite::identities) {
    identities(report, pick(Suite::identities), options);
  }
  if (suite == Suite::all || suite == Suite::bijection) bijection(report, pick(Suite::bijection));
  if (suite == Suite::all || suite == Suite::recurrences) {
    recurrences(report, pick(Suite::recurrences), options);
  }
  if (suite == Suite::all || suite == Suite::conjecture) {
    // k grows like 2k+1 points, so a size bound given to `all` does not carry over.
    conjecture(report, suite == Suite::all ? std::min(pick(Suite::conjecture),
                                                      default_bound(Suite::conjecture))
                                           : pick(Suite::conjecture));
  }
  return report;
}

}  // namespace stacksort
