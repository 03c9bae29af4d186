#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stacksort {

inline constexpr int kDefaultPartitionBound = 10;
inline constexpr int kDefaultMatchingBound = 14;
// Above this many edges tutte_10 switches from enumeration to deletion-contraction.
inline constexpr int kEnumerationEdgeLimit = 20;

/// Partition of {1,...,n}, kept canonical: blocks ascending internally and
/// ordered by their minima.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint and
  /// cover {1,...,n}.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// From a restricted growth string r_1 ... r_n with r_1 = 0.
  static SetPartition from_restricted_growth(std::span<const int> rgs);

  int ground_size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& block(int index) const { return blocks_.at(index); }
  /// Canonical index of the block holding `element`.
  int block_of(int element) const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Blocks cross when their elements interleave as i < j < k < l with i, k in
/// one and j, l in the other. Throws std::invalid_argument on overlap.
bool blocks_cross(std::span<const int> first, std::span<const int> second);

/// Simple undirected graph; edges are stored once as (u, v) with u < v.
class Graph {
 public:
  explicit Graph(int vertex_count = 0);
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  static Graph complete(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<char>> matrix_;
};

/// One arc per graph edge: arcs[e] orients edges()[e].
struct Orientation {
  std::vector<std::pair<int, int>> arcs;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Vertices are block indices in canonical order.
Graph crossing_graph(const SetPartition& partition);

bool is_connected(const Graph& graph);
bool is_connected(const SetPartition& partition);
bool is_matching(const SetPartition& partition);
bool is_noncrossing(const SetPartition& partition);
std::vector<int> connected_component_labels(const Graph& graph);

/// True when every edge appears exactly once, in either direction.
bool orients(const Graph& graph, const Orientation& orientation);
bool is_acyclic(const Graph& graph, const Orientation& orientation);
std::vector<int> sources(const Graph& graph, const Orientation& orientation);

/// All acyclic orientations of `graph` whose only source is `source`, in
/// lexicographic order of the arc choices (low-to-high first).
std::vector<Orientation> acyclic_orientations_unique_source(const Graph& graph, int source);
mpz_class count_acyclic_orientations_unique_source(const Graph& graph, int source);

enum class TutteStatus { ok, disconnected };

struct TutteEvaluation {
  mpz_class value;
  TutteStatus status = TutteStatus::ok;
};

/// T_G(1, 0) as the number of acyclic orientations with vertex 0 as unique
/// source, or by deletion-contraction past kEnumerationEdgeLimit edges.
/// Disconnected graphs give 0 with status `disconnected`.
TutteEvaluation tutte_10(const Graph& graph);

/// T_G(1, 0) by deletion-contraction on the multigraph.
mpz_class tutte_10_deletion_contraction(const Graph& graph);

/// Every partition of {1,...,n}, in restricted growth string order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
/// Every perfect matching of {1,...,n}; nothing when n is odd.
void for_each_matching(int n, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> connected_partitions(int n);

struct OrientedPartition {
  SetPartition partition;
  Orientation orientation;

  friend auto operator<=>(const OrientedPartition&, const OrientedPartition&) = default;
};

/// Pairs (rho, alpha): rho a connected partition of {1,...,n}, alpha an
/// acyclic orientation of its crossing graph whose only source is the block
/// holding n. Sorted. Throws BoundExceeded past `bound`.
std::vector<OrientedPartition> enumerate_P_tilde(int n, int bound = kDefaultPartitionBound);
/// The pairs above whose partition is a matching.
std::vector<OrientedPartition> enumerate_M_tilde(int n, int bound = kDefaultMatchingBound);

/// A partition carried through an element relabelling, with block_map[i] the
/// image index of block i.
struct Relabeling {
  SetPartition image;
  std::vector<int> block_map;
};

Relabeling relabel(const SetPartition& partition, const std::function<int(int)>& element_map);
/// Carries an orientation across a block bijection; arcs follow the image
/// graph's edge order.
Orientation transfer_orientation(const Graph& image_graph, const Orientation& orientation,
                                 std::span<const int> block_map);

/// Reflects {1,...,2k+1} about k+1, keeping 2k+2 in place. Input must be a
/// matching of {1,...,2k+2}; throws std::invalid_argument otherwise.
Relabeling reflect_matching_with_map(const SetPartition& matching);
SetPartition reflect_matching(const SetPartition& matching);

/// The other element of i's block in a matching.
int partner(const SetPartition& matching, int i);

/// Swap 2k+2 to 0, reflect {0,...,2k+1} about (2k+1)/2, then 0 back to 2k+2.
Relabeling tilde_map_with_map(const SetPartition& matching);
SetPartition tilde_map(const SetPartition& matching);

/// `1,3|2,4`.
std::string to_string(const SetPartition& partition);
/// Ground set is {1,...,max element}.
SetPartition parse_partition(std::string_view text);
/// `0->1 0->2`, arcs in edge order.
std::string to_string(const Orientation& orientation);
std::vector<std::string> arc_strings(const Orientation& orientation);
Orientation parse_orientation(std::string_view text);

}  // namespace stacksort
