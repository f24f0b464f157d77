#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clonal {

/// A finite rooted binary tree, stored as its preorder node sequence.
///
/// Trees are immutable values: every surgery operation returns a new tree.
/// Leaves are numbered 1..leaf_count() from left to right. The text form is
/// the grammar `T ::= "L" | "(" T T ")"`.
class Tree {
 public:
  enum class Node : std::uint8_t { Leaf, Caret };

  /// The single-leaf tree.
  Tree() : nodes_{Node::Leaf} {}

  static Tree caret(const Tree& left, const Tree& right);

  /// Builds a tree from a preorder sequence; throws std::invalid_argument if
  /// the sequence does not describe exactly one tree.
  static Tree from_preorder(std::vector<Node> nodes);

  std::span<const Node> preorder() const noexcept { return nodes_; }
  std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }
  std::size_t caret_count() const noexcept { return nodes_.size() / 2; }
  bool is_leaf() const noexcept { return nodes_.size() == 1; }

  /// Subtrees of the root caret. Precondition: !is_leaf().
  Tree left() const;
  Tree right() const;

  /// Binary address of every leaf ('0' = left, '1' = right), in leaf order.
  /// The root leaf has the empty address.
  std::vector<std::string> leaf_addresses() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;

  friend Tree add_caret(const Tree&, std::size_t);
  friend std::optional<Tree> remove_caret(const Tree&, std::size_t);
  friend Tree tree_union(const Tree&, const Tree&);
};

Tree parse_tree(std::string_view text);
std::string print_tree(const Tree& t);

/// Replaces leaf k (1-based) by a caret; leaves k and k+1 of the result are
/// siblings. Throws std::out_of_range unless 1 <= k <= leaf_count.
Tree add_caret(const Tree& t, std::size_t k);

/// True when leaves k and k+1 hang from a common caret.
bool leaves_are_siblings(const Tree& t, std::size_t k);

/// Collapses the caret over leaves k, k+1, or returns nullopt when they are
/// not siblings (or k is out of range).
std::optional<Tree> remove_caret(const Tree& t, std::size_t k);

/// Smallest tree having both arguments as rooted prefixes.
Tree tree_union(const Tree& a, const Tree& b);

/// Whether `t` is a rooted prefix of `s` (s is an expansion of t).
bool is_prefix(const Tree& t, const Tree& s);

/// Leaf indices at which to add carets, in order, to turn `t` into `s`.
/// Throws std::invalid_argument when t is not a prefix of s.
std::vector<std::size_t> expansion_path(const Tree& t, const Tree& s);

/// Grows a tree with `leaves` leaves by adding carets at uniformly chosen
/// leaves, starting from the single leaf.
template <class URBG>
Tree random_tree(std::size_t leaves, URBG& rng) {
  Tree t;
  for (std::size_t n = 1; n < leaves; ++n) t = add_caret(t, std::uniform_int_distribution<std::size_t>(1, n)(rng));
  return t;
}

/// An ordered, nonempty sequence of trees. Leaves are numbered across all
/// trees left to right; roots are numbered 1..root_count(). Text form joins
/// the trees with '|', e.g. "L|(LL)|L".
class Forest {
 public:
  /// The trivial forest 1_n: n single-leaf trees.
  static Forest trivial(std::size_t n);

  explicit Forest(std::vector<Tree> trees);
  explicit Forest(Tree tree) : trees_{std::move(tree)} {}

  std::span<const Tree> trees() const noexcept { return trees_; }
  std::size_t root_count() const noexcept { return trees_.size(); }
  std::size_t leaf_count() const noexcept;

  /// 1-based root containing global leaf k, and k's index inside that tree.
  std::pair<std::size_t, std::size_t> locate_leaf(std::size_t k) const;

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

Forest parse_forest(std::string_view text);
std::string print_forest(const Forest& f);

Forest add_caret(const Forest& f, std::size_t k);
bool leaves_are_siblings(const Forest& f, std::size_t k);
std::optional<Forest> remove_caret(const Forest& f, std::size_t k);

/// Joins roots j and j+1 under a new caret (root count drops by one).
Forest merge_roots(const Forest& f, std::size_t j);

/// Expansion path between forests with equal root counts, as global leaf
/// indices. Throws std::invalid_argument when `f` is not a prefix of `g`.
std::vector<std::size_t> expansion_path(const Forest& f, const Forest& g);

}  // namespace clonal
