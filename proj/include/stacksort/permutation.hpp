#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

inline constexpr int kDefaultOracleBound = 9;

/// A word of distinct positive integers. It need not use exactly {1,...,n};
/// `is_normalized` tells whether it does. Every public function that takes
/// or returns a position uses 1-indexed positions.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument on repeated or non-positive entries.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entry at a 1-indexed position.
  int entry(int position) const;
  std::span<const int> entries() const noexcept { return entries_; }

  bool is_normalized() const noexcept;
  int max_entry() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Increasing list of descent positions i, i.e. entry(i) > entry(i + 1).
using DescentSet = std::vector<int>;

/// The unique element of S_n order-isomorphic to `pi`.
Permutation normalize(const Permutation& pi);

DescentSet descents(const Permutation& pi);

/// One pass of West's stack-sorting procedure.
Permutation stack_sort(const Permutation& pi);

Permutation iterate_sort(const Permutation& pi, int iterations);

/// All sigma in S_n with stack_sort(sigma) == pi, by sweeping S_n. `pi` must
/// be normalized. Throws BoundExceeded when n > bound.
std::vector<Permutation> preimages_bruteforce(const Permutation& pi,
                                              int bound = kDefaultOracleBound);

/// Brute-force fertility of every permutation of S_n: one sweep of S_n,
/// counting images of the stack-sorting map. Unsorted permutations are absent.
std::map<Permutation, std::uint64_t> preimage_counts(int n, int bound = kDefaultOracleBound);

/// Length of the fixed-point suffix n-i+1 ... n of normalize(pi); n for the
/// identity.
int tail_length(const Permutation& pi);

/// Space-separated decimal entries, e.g. "3 1 4 2".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& pi);

}  // namespace stacksort
