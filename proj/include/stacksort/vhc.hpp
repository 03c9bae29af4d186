#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stacksort/permutation.hpp"
#include "stacksort/sweep.hpp"
#include "stacksort/trees.hpp"

namespace stacksort {

/// Sideways L from the point (sw, pi_sw) up to height pi_ne and right to
/// (ne, pi_ne). Positions are 1-indexed into the host permutation.
struct Hook {
  int sw = 0;
  int ne = 0;

  friend auto operator<=>(const Hook&, const Hook&) = default;
};

/// A host permutation with one hook per descent; hooks[t - 1] starts at the
/// t-th descent. Produced by enumerate_vhcs or make_configuration, both of
/// which guarantee validity.
struct ValidHookConfiguration {
  Permutation host;
  std::vector<Hook> hooks;

  int hook_count() const noexcept { return static_cast<int>(hooks.size()); }

  friend auto operator<=>(const ValidHookConfiguration&,
                          const ValidHookConfiguration&) = default;
};

inline constexpr int kSky = 0;
inline constexpr int kUncolored = -1;

enum class ColoringVariant {
  base,      // northeast endpoints stay uncolored
  extended,  // northeast endpoints take their own hook's color
};

/// color_of[position - 1] is kSky, a hook number t in 1..k, or kUncolored.
struct ColorAssignment {
  std::vector<int> color_of;
  int color_count = 1;
};

/// (q_0, q_1, ..., q_k): sky class first, then hooks in descent order.
using Composition = std::vector<int>;

/// Checks the three conditions on hooks: one per descent starting at it, no
/// plot point above a hook, no two hooks meeting except where one's northeast
/// endpoint is the other's southwest endpoint. Throws std::invalid_argument if
/// an endpoint lies outside 1..n.
bool is_valid(const Permutation& pi, std::span<const Hook> hooks);

/// Throws std::invalid_argument unless is_valid(pi, hooks).
ValidHookConfiguration make_configuration(Permutation pi, std::vector<Hook> hooks);

/// Calls `visit` with the hooks of each valid configuration of pi, in
/// lexicographic order of the northeast endpoints.
void for_each_vhc(const Permutation& pi, const std::function<void(std::span<const Hook>)>& visit);

std::vector<ValidHookConfiguration> enumerate_vhcs(const Permutation& pi);
std::uint64_t count_vhcs(const Permutation& pi);

/// A point that is not a northeast endpoint takes the color of the lowest
/// hook spanning it from strictly to its left (sw < a <= ne) with its
/// horizontal part above it; if there is none, it sees the sky.
ColorAssignment induced_coloring(const ValidHookConfiguration& config,
                                 ColoringVariant variant = ColoringVariant::base);

Composition valid_composition(const ValidHookConfiguration& config);

/// |s^{-1}(pi)| as the sum over valid compositions of prod C_{q_t}.
mpz_class fertility(const Permutation& pi);

bool is_sorted(const Permutation& pi);
/// Sorted with n = 2k + 1, where k is the number of descents.
bool is_uniquely_sorted(const Permutation& pi);

/// Pieces on either side of the hook whose northeast endpoint is highest.
/// Hosts of the pieces are subwords of the original host and are generally
/// not normalized.
struct TopHookDecomposition {
  Hook top;
  ValidHookConfiguration sheltered;
  ValidHookConfiguration unsheltered;
  std::vector<int> sheltered_values;    // sorted
  std::vector<int> unsheltered_values;  // sorted
};

/// Throws std::domain_error when the configuration has no hooks.
TopHookDecomposition top_hook_decomposition(const ValidHookConfiguration& config);

/// Uniquely sorted permutations of S_{2k+1} built recursively from smaller
/// ones as tau mu (2k+1), sorted.
std::vector<Permutation> enumerate_uniquely_sorted(int k);

struct UniquelySortedConstruction {
  std::vector<Permutation> permutations;
  std::size_t emitted = 0;  // before removing duplicates
};
UniquelySortedConstruction construct_uniquely_sorted(int k);

/// The configuration of a uniquely sorted permutation. Throws
/// std::domain_error if pi is not uniquely sorted.
ValidHookConfiguration unique_configuration(const Permutation& pi);

/// Hooks become left edges and each northeast endpoint gets its left
/// neighbour as right child. The host must be uniquely sorted.
DecreasingBinaryTree tree_from_vhc(const ValidHookConfiguration& config);

/// Entry of the leftmost point sheltered by the top hook. Throws
/// std::domain_error unless pi is uniquely sorted of length at least 3.
int eye(const Permutation& pi);
/// The same statistic read off the tree: the leftmost cousin of the root's
/// left child.
int eye_via_tree(const Permutation& pi);

/// Aggregate counts over all valid hook configurations of S_n.
struct VhcCensus {
  int n = 0;
  std::uint64_t configurations = 0;
  std::uint64_t sorted_permutations = 0;
  std::vector<std::uint64_t> by_hook_count;                 // index = hooks
  std::vector<std::uint64_t> by_tail_length;                // index = tail length
  std::vector<std::uint64_t> uniquely_sorted_by_tail_length;  // fertility 1, odd n
};

/// Throws BoundExceeded when n > bound.
VhcCensus vhc_census(int n, const SweepOptions& options = {}, int bound = kDefaultOracleBound);

/// Every valid configuration of every permutation of S_n, sorted.
std::vector<ValidHookConfiguration> all_vhcs(int n, int bound = kDefaultOracleBound);

/// `2 1 3 ; 1>3`: host, a semicolon, then sw>ne pairs.
std::string to_string(const ValidHookConfiguration& config);
ValidHookConfiguration parse_configuration(std::string_view text);

}  // namespace stacksort
