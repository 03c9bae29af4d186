#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// Binary plane tree with distinct positive labels, each smaller than its
/// parent's. An only child keeps its left/right side.
///
/// Nodes are stored in preorder with the root at index 0, so two trees are
/// equal exactly when they have the same shape, sides and labels.
class DecreasingBinaryTree {
 public:
  static constexpr int kNone = -1;

  struct Node {
    int label = 0;
    int left = kNone;
    int right = kNone;

    friend auto operator<=>(const Node&, const Node&) = default;
  };

  DecreasingBinaryTree() = default;

  static DecreasingBinaryTree leaf(int label);
  /// Root `label` over the given subtrees; an empty subtree is an absent
  /// child. Throws std::invalid_argument if the result is not decreasing or
  /// has repeated labels.
  static DecreasingBinaryTree join(int label, const DecreasingBinaryTree& left,
                                   const DecreasingBinaryTree& right);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  bool empty() const noexcept { return nodes_.empty(); }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(int index) const { return nodes_.at(index); }

  /// Index of the node carrying `label`, or kNone.
  int find(int label) const noexcept;
  int parent(int index) const noexcept;
  bool is_normalized() const noexcept;

  friend auto operator<=>(const DecreasingBinaryTree&, const DecreasingBinaryTree&) = default;

 private:
  std::vector<Node> nodes_;
};

/// I(T): left subtree, root, right subtree.
Permutation in_order(const DecreasingBinaryTree& tree);
/// P(T): left subtree, right subtree, root.
Permutation post_order(const DecreasingBinaryTree& tree);

/// The unique tree with in_order(tree) == pi: the maximum is the root and the
/// factors on either side of it give the subtrees.
DecreasingBinaryTree tree_from_inorder(const Permutation& pi);

/// stack_sort computed as P applied to the inverse of I.
Permutation stack_sort_via_trees(const Permutation& pi);

/// Every decreasing binary plane tree on the entries of pi whose postorder is
/// pi, sorted. Throws BoundExceeded past `bound` entries.
std::vector<DecreasingBinaryTree> trees_with_postorder(const Permutation& pi,
                                                       int bound = kDefaultOracleBound);

/// Number of such trees, by dynamic programming on factors of pi.
std::uint64_t count_trees_with_postorder(const Permutation& pi);

/// Label of the first vertex in in-order of the right subtree of the parent of
/// the vertex labelled `label`. That vertex must be a left child whose parent
/// also has a right child; otherwise throws std::domain_error.
int leftmost_cousin(const DecreasingBinaryTree& tree, int label);

bool is_full(const DecreasingBinaryTree& tree);
bool is_canonical(const DecreasingBinaryTree& tree);
/// Full and canonical, i.e. no other tree has the same postorder.
bool is_lonely(const DecreasingBinaryTree& tree);

/// `label(left,right)` with `.` for an absent child; leaves print as a bare
/// label. The empty tree prints as `.`.
std::string to_string(const DecreasingBinaryTree& tree);
DecreasingBinaryTree parse_tree(std::string_view text);

}  // namespace stacksort
