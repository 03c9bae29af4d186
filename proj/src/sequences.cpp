#include "stacksort/sequences.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "stacksort/errors.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

namespace {

mpq_class power(const mpq_class& base, int exponent) {
  mpq_class result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Fills T_m(n) row by row; every term on the right has size below n.
CountTable tail_length_table(int n_max, const std::function<mpz_class(int)>& diagonal) {
  if (n_max < 0) throw std::invalid_argument("table size must be nonnegative");
  CountTable table(n_max);
  for (int n = 0; n <= n_max; ++n) {
    table.at(n, n) = diagonal(n);
    for (int m = 0; m < n; ++m) {
      mpz_class sum = 0;
      for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n - m - 1; ++i) {
          sum += binomial(n - m - 1, i - 1) * table.at_least(j, i + j - 1) *
                 table.at_least(m - j, n - j - i);
        }
      }
      table.at(m, n) = sum;
    }
    table.refresh_cumulative(n);
  }
  return table;
}

}  // namespace

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial needs n >= 0");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

mpz_class catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

mpz_class narayana(long n, long k) {
  if (k < 1 || k > n) {
    throw std::out_of_range("narayana(" + std::to_string(n) + ", " + std::to_string(k) +
                            ") needs 1 <= k <= n");
  }
  return binomial(n, k) * binomial(n, k - 1) / n;
}

mpz_class catalan_weight(const SetPartition& partition) {
  mpz_class product = 1;
  for (const auto& block : partition.blocks()) product *= catalan(static_cast<long>(block.size()) - 1);
  return product;
}

std::vector<mpz_class> lassalle(int m_max) {
  if (m_max < 1) throw std::invalid_argument("lassalle needs m_max >= 1");
  std::vector<mpz_class> a(m_max + 1);
  a[1] = 1;
  for (int m = 2; m <= m_max; ++m) {
    mpz_class value = (m % 2 == 1 ? 1 : -1) * catalan(m);
    for (int j = 1; j < m; ++j) {
      const mpz_class term = binomial(2 * m - 1, 2 * m - 2 * j - 1) * a[m - j] * catalan(j);
      if (j % 2 == 1) {
        value += term;
      } else {
        value -= term;
      }
    }
    a[m] = value;
  }
  a.erase(a.begin());
  return a;
}

BigRationalSeries free_poisson_moments(int n_max, const mpq_class& lambda) {
  if (n_max < 1) throw std::invalid_argument("series order must be at least 1");
  std::vector<mpq_class> moments;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class sum = 0;
    mpq_class lambda_k = 1;
    for (int k = 1; k <= n; ++k) {
      lambda_k *= lambda;
      sum += lambda_k * mpq_class(narayana(n, k));
    }
    moments.push_back(sum);
  }
  return BigRationalSeries(std::move(moments));
}

BigRationalSeries classical_cumulants(int n_max, const mpq_class& lambda) {
  const BigRationalSeries moments = free_poisson_moments(n_max, lambda);
  // K'(1 + M) = M' read off coefficient by coefficient.
  std::vector<mpq_class> k(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    mpq_class value = moments[n];
    for (int j = 1; j < n; ++j) value -= mpq_class(binomial(n - 1, j - 1)) * k[j] * moments[n - j];
    k[n] = value;
  }
  k.erase(k.begin());
  return BigRationalSeries(std::move(k));
}

mpq_class cumulant_via_vhc(int n, const mpq_class& lambda, int bound, const SweepOptions& options) {
  if (n < 1) throw std::invalid_argument("cumulant index must be at least 1");
  if (n - 1 > bound) throw BoundExceeded("cumulant_via_vhc", n - 1, bound);
  const VhcCensus census = vhc_census(n - 1, options, bound);
  mpq_class sum = 0;
  for (std::size_t hooks = 0; hooks < census.by_hook_count.size(); ++hooks) {
    sum += mpq_class(static_cast<unsigned long>(census.by_hook_count[hooks])) *
           power(-lambda, static_cast<int>(hooks) + 1);
  }
  return -sum;
}

CountTable::CountTable(int n_max)
    : n_max_(n_max), exact_(n_max + 1), cumulative_(n_max + 1), zero_(0) {
  for (int n = 0; n <= n_max; ++n) {
    exact_[n].assign(n + 1, 0);
    cumulative_[n].assign(n + 1, 0);
  }
}

const mpz_class& CountTable::at(int m, int n) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) {
    throw std::out_of_range("table index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") out of range");
  }
  return exact_[n][m];
}

mpz_class& CountTable::at(int m, int n) {
  return const_cast<mpz_class&>(static_cast<const CountTable&>(*this).at(m, n));
}

const mpz_class& CountTable::at_least(int m, int n) const {
  if (n < 0 || n > n_max_ || m < 0) {
    throw std::out_of_range("table index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") out of range");
  }
  if (m > n) return zero_;
  return cumulative_[n][m];
}

void CountTable::refresh_cumulative(int n) {
  mpz_class running = 0;
  for (int m = n; m >= 0; --m) {
    running += exact_.at(n)[m];
    cumulative_[n][m] = running;
  }
}

CountTable d_table(int n_max) {
  CountTable table = tail_length_table(n_max, [](int) { return mpz_class(1); });
  const BigRationalSeries k = classical_cumulants(n_max + 1, -1);
  for (int n = 0; n <= n_max; ++n) {
    if (mpq_class(table.at_least(0, n)) != -k[n + 1]) {
      throw std::logic_error("D table disagrees with -k_{n+1}(-1) at n = " + std::to_string(n));
    }
  }
  return table;
}

CountTable e_table(int n_max) {
  CountTable table = tail_length_table(n_max, [](int n) { return mpz_class(n == 1 ? 1 : 0); });
  const auto a = lassalle(n_max / 2 + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n % 2 == 0 && table.at_least(0, n) != 0) {
      throw std::logic_error("E table nonzero at even n = " + std::to_string(n));
    }
    if (n % 2 == 1 && table.at_least(0, n) != a[n / 2]) {
      throw std::logic_error("E table disagrees with Lassalle at n = " + std::to_string(n));
    }
  }
  return table;
}

std::vector<mpz_class> refined_lassalle_first_entry(int k, int bound) {
  if (k < 0) throw std::invalid_argument("refined sequences need k >= 0");
  if (k > bound) throw BoundExceeded("refined_lassalle_first_entry", k, bound);
  std::vector<mpz_class> counts(2 * k + 1, 0);
  for (const Permutation& pi : enumerate_uniquely_sorted(k)) ++counts[pi.entry(1) - 1];
  return counts;
}

std::vector<mpz_class> refined_lassalle_eye(int k, int bound) {
  if (k < 1) throw std::invalid_argument("the eye needs k >= 1");
  if (k > bound) throw BoundExceeded("refined_lassalle_eye", k, bound);
  std::vector<mpz_class> counts(2 * k + 1, 0);
  for (const Permutation& pi : enumerate_uniquely_sorted(k)) ++counts.at(eye(pi));
  return counts;
}

bool is_log_concave(std::span<const mpz_class> sequence) {
  for (std::size_t j = 1; j + 1 < sequence.size(); ++j) {
    if (sequence[j] * sequence[j] < sequence[j - 1] * sequence[j + 1]) return false;
  }
  return true;
}

namespace {

std::uint64_t count_with_fertility(int n, const mpz_class& target, const SweepOptions& options) {
  const auto parts = sweep_by_first_entry<std::uint64_t>(n, options, [&](int first) {
    std::uint64_t count = 0;
    for_each_permutation_starting_with(n, first, [&](const Permutation& pi) {
      if (fertility(pi) == target) ++count;
    });
    return count;
  });
  std::uint64_t total = 0;
  for (auto part : parts) total += part;
  return total;
}

}  // namespace

mpz_class doubly_sorted_count(int m, int bound, const SweepOptions& options) {
  if (m < 1) throw std::invalid_argument("doubly sorted counts start at m = 1");
  if (2 * m > bound) throw BoundExceeded("doubly_sorted_count", 2 * m, bound);
  for (int n = 1; n < 2 * m; n += 2) {
    if (count_with_fertility(n, 2, options) != 0) {
      throw std::logic_error("odd length " + std::to_string(n) + " has fertility 2");
    }
  }
  return count_with_fertility(2 * m, 2, options);
}

mpz_class w_count(int t, int n, int bound, const SweepOptions& options) {
  if (t < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (n < 1) throw std::invalid_argument("w_count needs n >= 1");
  if (n > bound) throw BoundExceeded("w_count", n, bound);
  const Permutation id = Permutation::identity(n);
  const auto parts = sweep_by_first_entry<std::uint64_t>(n, options, [&](int first) {
    std::uint64_t count = 0;
    for_each_permutation_starting_with(n, first, [&](const Permutation& pi) {
      if (iterate_sort(pi, t) == id) ++count;
    });
    return count;
  });
  std::uint64_t total = 0;
  for (auto part : parts) total += part;
  return total;
}

mpz_class two_stack_sortable_closed_form(long n) {
  if (n < 1) throw std::invalid_argument("closed form starts at n = 1");
  return 2 * binomial(3 * n, n) / ((n + 1) * (2 * n + 1));
}

}  // namespace stacksort
