#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stacksort/sweep.hpp"

namespace stacksort {

enum class Suite { all, bijection, identities, recurrences, conjecture };

Suite parse_suite(std::string_view name);
std::string to_string(Suite suite);
/// Size bound used when the caller passes 0.
int default_bound(Suite suite);

struct CheckResult {
  std::string name;
  std::string parameters;
  std::string expected;
  std::string provenance;  // "published" or "recomputed"
  std::string computed;
  bool passed = false;
  double seconds = 0;
  std::string counterexample;  // first failing instance, empty on success
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs the checks of `suite` up to `bound` (0 picks default_bound). For
/// `all`, each member suite uses its own default unless a bound is given.
VerificationReport run_suite(Suite suite, int bound = 0, const SweepOptions& options = {});

}  // namespace stacksort
