#include "stacksort/trees.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

#include "stacksort/errors.hpp"

namespace stacksort {

namespace {

using Tree = DecreasingBinaryTree;

void append_shifted(std::vector<Tree::Node>& out, std::span<const Tree::Node> nodes, int offset) {
  for (Tree::Node node : nodes) {
    if (node.left != Tree::kNone) node.left += offset;
    if (node.right != Tree::kNone) node.right += offset;
    out.push_back(node);
  }
}

void read_in_order(const Tree& tree, int index, std::vector<int>& out) {
  if (index == Tree::kNone) return;
  const auto& node = tree.node(index);
  read_in_order(tree, node.left, out);
  out.push_back(node.label);
  read_in_order(tree, node.right, out);
}

void read_post_order(const Tree& tree, int index, std::vector<int>& out) {
  if (index == Tree::kNone) return;
  const auto& node = tree.node(index);
  read_post_order(tree, node.left, out);
  read_post_order(tree, node.right, out);
  out.push_back(node.label);
}

Tree from_inorder_factor(std::span<const int> word) {
  if (word.empty()) return {};
  const auto top = std::max_element(word.begin(), word.end());
  const auto split = static_cast<std::size_t>(top - word.begin());
  return Tree::join(*top, from_inorder_factor(word.subspan(0, split)),
                    from_inorder_factor(word.subspan(split + 1)));
}

int leftmost_index(const Tree& tree, int index) {
  while (tree.node(index).left != Tree::kNone) index = tree.node(index).left;
  return index;
}

void write_subtree(const Tree& tree, int index, std::string& out) {
  if (index == Tree::kNone) {
    out += '.';
    return;
  }
  const auto& node = tree.node(index);
  out += std::to_string(node.label);
  if (node.left == Tree::kNone && node.right == Tree::kNone) return;
  out += '(';
  write_subtree(tree, node.left, out);
  out += ',';
  write_subtree(tree, node.right, out);
  out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Tree parse() {
    Tree tree = subtree();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return tree;
  }

 private:
  Tree subtree() {
    skip_space();
    if (peek() == '.') {
      ++pos_;
      return {};
    }
    int label = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), label);
    if (ec != std::errc{} || end == text_.data() + pos_) fail("expected a label");
    pos_ = static_cast<std::size_t>(end - text_.data());
    skip_space();
    if (peek() != '(') return Tree::leaf(label);
    ++pos_;
    Tree left = subtree();
    expect(',');
    Tree right = subtree();
    expect(')');
    return Tree::join(label, left, right);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed tree text at offset " + std::to_string(pos_) + ": " +
                                why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree Tree::leaf(int label) { return join(label, {}, {}); }

Tree Tree::join(int label, const Tree& left, const Tree& right) {
  if (label < 1) throw std::invalid_argument("tree labels must be positive");
  for (const Tree* child : {&left, &right}) {
    if (!child->empty() && child->nodes_.front().label >= label) {
      throw std::invalid_argument("child label " + std::to_string(child->nodes_.front().label) +
                                  " is not smaller than parent " + std::to_string(label));
    }
  }
  Tree tree;
  tree.nodes_.reserve(1 + left.size() + right.size());
  tree.nodes_.push_back({label, left.empty() ? kNone : 1,
                         right.empty() ? kNone : 1 + left.size()});
  append_shifted(tree.nodes_, left.nodes_, 1);
  append_shifted(tree.nodes_, right.nodes_, 1 + left.size());

  std::vector<int> labels;
  labels.reserve(tree.nodes_.size());
  for (const auto& node : tree.nodes_) labels.push_back(node.label);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("tree labels must be distinct");
  }
  return tree;
}

int Tree::find(int label) const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (nodes_[i].label == label) return i;
  }
  return kNone;
}

int Tree::parent(int index) const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (nodes_[i].left == index || nodes_[i].right == index) return i;
  }
  return kNone;
}

bool Tree::is_normalized() const noexcept {
  int max_label = 0;
  for (const auto& node : nodes_) max_label = std::max(max_label, node.label);
  return max_label == size();
}

Permutation in_order(const Tree& tree) {
  std::vector<int> word;
  word.reserve(tree.size());
  if (!tree.empty()) read_in_order(tree, 0, word);
  return Permutation(std::move(word));
}

Permutation post_order(const Tree& tree) {
  std::vector<int> word;
  word.reserve(tree.size());
  if (!tree.empty()) read_post_order(tree, 0, word);
  return Permutation(std::move(word));
}

Tree tree_from_inorder(const Permutation& pi) { return from_inorder_factor(pi.entries()); }

Permutation stack_sort_via_trees(const Permutation& pi) {
  return post_order(tree_from_inorder(pi));
}

std::vector<Tree> trees_with_postorder(const Permutation& pi, int bound) {
  if (pi.size() > bound) throw BoundExceeded("trees_with_postorder", pi.size(), bound);
  const auto word = pi.entries();
  // Trees whose postorder is the factor word[lo, hi), memoized on the bounds.
  std::map<std::pair<int, int>, std::vector<Tree>> memo;
  auto solve = [&](auto&& self, int lo, int hi) -> const std::vector<Tree>& {
    if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
    std::vector<Tree> found;
    if (lo == hi) {
      found.emplace_back();
    } else if (*std::max_element(word.begin() + lo, word.begin() + hi) == word[hi - 1]) {
      for (int split = lo; split < hi; ++split) {
        const auto& lefts = self(self, lo, split);
        const auto& rights = self(self, split, hi - 1);
        for (const auto& l : lefts) {
          for (const auto& r : rights) found.push_back(Tree::join(word[hi - 1], l, r));
        }
      }
    }
    return memo.emplace(std::pair{lo, hi}, std::move(found)).first->second;
  };
  std::vector<Tree> result = solve(solve, 0, pi.size());
  if (pi.empty()) return result;
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t count_trees_with_postorder(const Permutation& pi) {
  const auto word = pi.entries();
  const int n = pi.size();
  // count[lo][hi] for the factor word[lo, hi).
  std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int lo = 0; lo <= n; ++lo) count[lo][lo] = 1;
  for (int length = 1; length <= n; ++length) {
    for (int lo = 0; lo + length <= n; ++lo) {
      const int hi = lo + length;
      if (*std::max_element(word.begin() + lo, word.begin() + hi) != word[hi - 1]) continue;
      std::uint64_t total = 0;
      for (int split = lo; split < hi; ++split) total += count[lo][split] * count[split][hi - 1];
      count[lo][hi] = total;
    }
  }
  return count[0][n];
}

int leftmost_cousin(const Tree& tree, int label) {
  const int v = tree.find(label);
  if (v == Tree::kNone) throw std::domain_error("no vertex labelled " + std::to_string(label));
  const int p = tree.parent(v);
  if (p == Tree::kNone || tree.node(p).left != v || tree.node(p).right == Tree::kNone) {
    throw std::domain_error("no leftmost cousin: vertex " + std::to_string(label) +
                            " is not a left child with a right sibling");
  }
  return tree.node(leftmost_index(tree, tree.node(p).right)).label;
}

bool is_full(const Tree& tree) {
  return std::all_of(tree.nodes().begin(), tree.nodes().end(), [](const Tree::Node& node) {
    return (node.left == Tree::kNone) == (node.right == Tree::kNone);
  });
}

bool is_canonical(const Tree& tree) {
  for (const auto& node : tree.nodes()) {
    if (node.left == Tree::kNone) continue;
    if (node.right == Tree::kNone) return false;
    if (tree.node(node.left).label < tree.node(leftmost_index(tree, node.right)).label) {
      return false;
    }
  }
  return true;
}

bool is_lonely(const Tree& tree) { return is_full(tree) && is_canonical(tree); }

std::string to_string(const Tree& tree) {
  std::string out;
  write_subtree(tree, tree.empty() ? Tree::kNone : 0, out);
  return out;
}

Tree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace stacksort
