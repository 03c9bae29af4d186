#pragma once

#include <vector>

#include "stacksort/partitions.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

/// (rho, alpha) together with the position sets B-hat = {i : pi_i in B},
/// indexed like rho's canonical blocks.
struct PhiImage {
  SetPartition partition;
  Orientation orientation;
  std::vector<std::vector<int>> hatted_blocks;

  OrientedPartition pair() const { return {partition, orientation}; }
};

/// Colors every point (northeast endpoints included), groups the values by
/// color with n = |host| + 1 joining the sky class, and orients each crossing
/// from the block whose leftmost position comes first. The host must be
/// normalized.
PhiImage phi(const ValidHookConfiguration& config);

/// Rebuilds the configuration through repeated top hook decompositions.
/// Throws std::invalid_argument unless (partition, orientation) is a connected
/// partition with an acyclic orientation whose only source holds n.
ValidHookConfiguration phi_inverse(const SetPartition& partition, const Orientation& orientation);
ValidHookConfiguration phi_inverse(const OrientedPartition& pair);
ValidHookConfiguration phi_inverse(const PhiImage& image);

/// phi on configurations with k hooks on 2k+1 points, whose images are
/// matchings. Throws std::invalid_argument for any other hook count.
PhiImage phi_restricted(const ValidHookConfiguration& config);

/// Whether {pi_1, 2k+2} is a block of the matching attached to pi. Throws
/// std::domain_error unless pi is uniquely sorted.
bool first_entry_block_property(const Permutation& pi);

/// Positions grouped by color (northeast endpoints included). Throws
/// std::logic_error if the result crosses.
SetPartition eta(const ValidHookConfiguration& config);

}  // namespace stacksort
