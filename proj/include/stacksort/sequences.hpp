#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "stacksort/partitions.hpp"
#include "stacksort/sweep.hpp"

namespace stacksort {

inline constexpr int kDefaultCumulantBound = 8;
inline constexpr int kDefaultRefinedBound = 5;
inline constexpr int kDefaultDoublySortedBound = 8;

mpz_class binomial(long n, long k);
mpz_class factorial(long n);
mpz_class catalan(long n);
/// N(n, k) = binom(n, k) binom(n, k - 1) / n. Throws std::out_of_range unless
/// 1 <= k <= n.
mpz_class narayana(long n, long k);

/// Product over blocks B of C_{|B| - 1}.
mpz_class catalan_weight(const SetPartition& partition);

/// A_1, ..., A_{m_max} from Lassalle's signed recurrence with A_1 = 1.
std::vector<mpz_class> lassalle(int m_max);

/// Truncated exponential generating function sum_{n=1}^{N} c_n z^n / n!,
/// stored as the exact coefficients c_1, ..., c_N.
class BigRationalSeries {
 public:
  BigRationalSeries() = default;
  explicit BigRationalSeries(std::vector<mpq_class> coefficients)
      : coefficients_(std::move(coefficients)) {}

  int order() const noexcept { return static_cast<int>(coefficients_.size()); }
  /// c_n for 1 <= n <= order().
  const mpq_class& operator[](int n) const { return coefficients_.at(n - 1); }
  std::span<const mpq_class> coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<mpq_class> coefficients_;
};

/// m_n(lambda) = sum_k lambda^k N(n, k), the free Poisson moments.
BigRationalSeries free_poisson_moments(int n_max, const mpq_class& lambda);

/// k_n(lambda), the EGF coefficients of log(1 + M(z)).
BigRationalSeries classical_cumulants(int n_max, const mpq_class& lambda);

/// -sum over VHC(S_{n-1}) of (-lambda)^(#hooks + 1). Throws BoundExceeded when
/// n - 1 > bound.
mpq_class cumulant_via_vhc(int n, const mpq_class& lambda, int bound = kDefaultCumulantBound,
                           const SweepOptions& options = {});

/// Triangular table T_m(n) for 0 <= m <= n <= n_max with cumulative sums
/// T_{>=m}(n) = sum_{l >= m} T_l(n).
class CountTable {
 public:
  explicit CountTable(int n_max);

  int n_max() const noexcept { return n_max_; }
  const mpz_class& at(int m, int n) const;
  mpz_class& at(int m, int n);
  /// Zero when m > n.
  const mpz_class& at_least(int m, int n) const;
  void refresh_cumulative(int n);

 private:
  int n_max_;
  std::vector<std::vector<mpz_class>> exact_;
  std::vector<std::vector<mpz_class>> cumulative_;
  mpz_class zero_;
};

/// D_m(n): valid hook configurations on permutations of S_n with tail
/// length m, filled by the tail-length recurrence. Checks that
/// D_{>=0}(n) = -k_{n+1}(-1) and throws std::logic_error otherwise.
CountTable d_table(int n_max);

/// E_m(n): uniquely sorted permutations of S_n with tail length m, by the same
/// recurrence. Checks E vanishes for even n and E_{>=0}(2k+1) = A_{k+1}.
CountTable e_table(int n_max);

/// (A_{k+1}(l))_{l=1}^{2k+1}: uniquely sorted permutations of S_{2k+1} with
/// first entry l.
std::vector<mpz_class> refined_lassalle_first_entry(int k, int bound = kDefaultRefinedBound);
/// Same length, counting uniquely sorted permutations with eye l - 1. Needs
/// k >= 1.
std::vector<mpz_class> refined_lassalle_eye(int k, int bound = kDefaultRefinedBound);

/// a_j^2 >= a_{j-1} a_{j+1} at every interior index.
bool is_log_concave(std::span<const mpz_class> sequence);

/// B_m, the permutations of S_{2m} with fertility 2. Also checks that lengths
/// 1..min(2m+1, bound-1) of odd size have none, throwing std::logic_error if
/// one turns up.
mpz_class doubly_sorted_count(int m, int bound = kDefaultDoublySortedBound,
                              const SweepOptions& options = {});

/// W_t(n): permutations of S_n sorted by t passes of the stack-sorting map.
mpz_class w_count(int t, int n, int bound = kDefaultOracleBound, const SweepOptions& options = {});

/// 2 binom(3n, n) / ((n + 1)(2n + 1)).
mpz_class two_stack_sortable_closed_form(long n);

}  // namespace stacksort
