#include "clonal/tree.hpp"

#include <stdexcept>

#include "clonal/errors.hpp"

namespace clonal {

namespace {

using Node = Tree::Node;

// One past the end of the subtree rooted at preorder position `pos`.
std::size_t subtree_end(std::span<const Node> nodes, std::size_t pos) {
  std::size_t pending = 1;
  while (pending != 0) {
    if (pos >= nodes.size()) {
      throw std::invalid_argument("truncated preorder sequence");
    }
    if (nodes[pos] == Node::Caret) {
      ++pending;
    } else {
      --pending;
    }
    ++pos;
  }
  return pos;
}

// Preorder position of leaf k (1-based), or nodes.size() if absent.
std::size_t leaf_position(std::span<const Node> nodes, std::size_t k) {
  std::size_t seen = 0;
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    if (nodes[p] == Node::Leaf && ++seen == k) return p;
  }
  return nodes.size();
}

void union_into(std::span<const Node> a, std::size_t& i, std::span<const Node> b,
                std::size_t& j, std::vector<Node>& out) {
  if (a[i] == Node::Leaf) {
    std::size_t end = subtree_end(b, j);
    out.insert(out.end(), b.begin() + j, b.begin() + end);
    ++i;
    j = end;
    return;
  }
  if (b[j] == Node::Leaf) {
    std::size_t end = subtree_end(a, i);
    out.insert(out.end(), a.begin() + i, a.begin() + end);
    i = end;
    ++j;
    return;
  }
  out.push_back(Node::Caret);
  ++i;
  ++j;
  union_into(a, i, b, j, out);
  union_into(a, i, b, j, out);
}

// Emits the carets that grow a single leaf (currently leaf `index`) into the
// subtree of `s` starting at `pos`. Returns the subtree's leaf count.
std::size_t grow_leaf(std::span<const Node> s, std::size_t& pos, std::size_t index,
                      std::vector<std::size_t>& path) {
  if (s[pos++] == Node::Leaf) return 1;
  path.push_back(index);
  std::size_t left = grow_leaf(s, pos, index, path);
  std::size_t right = grow_leaf(s, pos, index + left, path);
  return left + right;
}

// Walks `t` and `s` in lockstep; `leaf` is the running leaf index of the
// partially expanded tree.
void walk_expansion(std::span<const Node> t, std::size_t& i, std::span<const Node> s,
                    std::size_t& j, std::size_t& leaf, std::vector<std::size_t>& path) {
  if (t[i] == Node::Caret && s[j] == Node::Leaf) {
    throw std::invalid_argument("expansion_path: source is not a prefix of target");
  }
  if (t[i] == Node::Leaf) {
    ++i;
    leaf += grow_leaf(s, j, leaf, path);
    return;
  }
  ++i;
  ++j;
  walk_expansion(t, i, s, j, leaf, path);
  walk_expansion(t, i, s, j, leaf, path);
}

bool prefix_walk(std::span<const Node> t, std::size_t& i, std::span<const Node> s,
                 std::size_t& j) {
  if (t[i] == Node::Leaf) {
    ++i;
    j = subtree_end(s, j);
    return true;
  }
  if (s[j] == Node::Leaf) return false;
  ++i;
  ++j;
  return prefix_walk(t, i, s, j) && prefix_walk(t, i, s, j);
}

class TreeParser {
 public:
  TreeParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  std::vector<Node> parse_one() {
    std::vector<Node> out;
    parse(out);
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  void parse(std::vector<Node>& out) {
    if (pos_ >= text_.size()) fail("unexpected end of tree");
    char c = text_[pos_];
    if (c == 'L') {
      out.push_back(Node::Leaf);
      ++pos_;
      return;
    }
    if (c != '(') fail(std::string("expected 'L' or '(' but found '") + c + "'");
    ++pos_;
    out.push_back(Node::Caret);
    parse(out);
    parse(out);
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree: " + what, base_ + pos_);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree Tree::caret(const Tree& left, const Tree& right) {
  std::vector<Node> nodes;
  nodes.reserve(1 + left.nodes_.size() + right.nodes_.size());
  nodes.push_back(Node::Caret);
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return Tree(std::move(nodes));
}

Tree Tree::from_preorder(std::vector<Node> nodes) {
  if (nodes.empty() || subtree_end(nodes, 0) != nodes.size()) {
    throw std::invalid_argument("preorder sequence is not a single tree");
  }
  return Tree(std::move(nodes));
}

Tree Tree::left() const {
  if (is_leaf()) throw std::logic_error("left() of a leaf");
  std::size_t end = subtree_end(nodes_, 1);
  return Tree(std::vector<Node>(nodes_.begin() + 1, nodes_.begin() + end));
}

Tree Tree::right() const {
  if (is_leaf()) throw std::logic_error("right() of a leaf");
  std::size_t end = subtree_end(nodes_, 1);
  return Tree(std::vector<Node>(nodes_.begin() + end, nodes_.end()));
}

std::vector<std::string> Tree::leaf_addresses() const {
  std::vector<std::string> out;
  out.reserve(leaf_count());
  // Each stack entry is the address of a pending subtree.
  std::vector<std::string> stack{""};
  for (Node n : nodes_) {
    std::string addr = std::move(stack.back());
    stack.pop_back();
    if (n == Node::Leaf) {
      out.push_back(std::move(addr));
    } else {
      stack.push_back(addr + '1');
      stack.push_back(addr + '0');
    }
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  TreeParser p(text, 0);
  auto nodes = p.parse_one();
  if (p.pos() != text.size()) throw ParseError("tree: trailing characters", p.pos());
  return Tree::from_preorder(std::move(nodes));
}

std::string print_tree(const Tree& t) {
  std::string out;
  // Count of children still to print for each open caret.
  std::vector<int> open;
  for (Node n : t.preorder()) {
    if (n == Node::Caret) {
      out += '(';
      open.push_back(2);
      continue;
    }
    out += 'L';
    while (!open.empty() && --open.back() == 0) {
      out += ')';
      open.pop_back();
    }
  }
  return out;
}

Tree add_caret(const Tree& t, std::size_t k) {
  if (k < 1 || k > t.leaf_count()) {
    throw std::out_of_range("add_caret: leaf index " + std::to_string(k) + " out of range 1.." +
                            std::to_string(t.leaf_count()));
  }
  std::size_t p = leaf_position(t.nodes_, k);
  std::vector<Node> nodes;
  nodes.reserve(t.nodes_.size() + 2);
  nodes.insert(nodes.end(), t.nodes_.begin(), t.nodes_.begin() + p);
  nodes.insert(nodes.end(), {Node::Caret, Node::Leaf, Node::Leaf});
  nodes.insert(nodes.end(), t.nodes_.begin() + p + 1, t.nodes_.end());
  return Tree(std::move(nodes));
}

bool leaves_are_siblings(const Tree& t, std::size_t k) {
  if (k < 1 || k >= t.leaf_count()) return false;
  auto nodes = t.preorder();
  std::size_t p = leaf_position(nodes, k);
  // A caret is immediately followed by its left child in preorder.
  return p >= 1 && nodes[p - 1] == Node::Caret && nodes[p + 1] == Node::Leaf;
}

std::optional<Tree> remove_caret(const Tree& t, std::size_t k) {
  if (!leaves_are_siblings(t, k)) return std::nullopt;
  std::size_t p = leaf_position(t.nodes_, k);
  std::vector<Node> nodes;
  nodes.reserve(t.nodes_.size() - 2);
  nodes.insert(nodes.end(), t.nodes_.begin(), t.nodes_.begin() + (p - 1));
  nodes.push_back(Node::Leaf);
  nodes.insert(nodes.end(), t.nodes_.begin() + p + 2, t.nodes_.end());
  return Tree(std::move(nodes));
}

Tree tree_union(const Tree& a, const Tree& b) {
  std::vector<Node> out;
  std::size_t i = 0, j = 0;
  union_into(a.nodes_, i, b.nodes_, j, out);
  return Tree(std::move(out));
}

bool is_prefix(const Tree& t, const Tree& s) {
  std::size_t i = 0, j = 0;
  return prefix_walk(t.preorder(), i, s.preorder(), j);
}

std::vector<std::size_t> expansion_path(const Tree& t, const Tree& s) {
  std::vector<std::size_t> path;
  std::size_t i = 0, j = 0, leaf = 1;
  walk_expansion(t.preorder(), i, s.preorder(), j, leaf, path);
  return path;
}

// Forest

Forest Forest::trivial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trivial forest needs at least one root");
  return Forest(std::vector<Tree>(n));
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw std::invalid_argument("a forest needs at least one root");
}

std::size_t Forest::leaf_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.leaf_count();
  return n;
}

std::pair<std::size_t, std::size_t> Forest::locate_leaf(std::size_t k) const {
  if (k < 1) throw std::out_of_range("forest leaf index must be >= 1");
  std::size_t local = k;
  for (std::size_t r = 0; r < trees_.size(); ++r) {
    if (local <= trees_[r].leaf_count()) return {r + 1, local};
    local -= trees_[r].leaf_count();
  }
  throw std::out_of_range("forest leaf index " + std::to_string(k) + " out of range 1.." +
                          std::to_string(leaf_count()));
}

Forest parse_forest(std::string_view text) {
  std::vector<Tree> trees;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::string_view piece = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
    TreeParser p(piece, start);
    auto nodes = p.parse_one();
    if (p.pos() != piece.size()) throw ParseError("forest: trailing characters", start + p.pos());
    trees.push_back(Tree::from_preorder(std::move(nodes)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Forest(std::move(trees));
}

std::string print_forest(const Forest& f) {
  std::string out;
  for (const auto& t : f.trees()) {
    if (!out.empty()) out += '|';
    out += print_tree(t);
  }
  return out;
}

Forest add_caret(const Forest& f, std::size_t k) {
  auto [root, local] = f.locate_leaf(k);
  std::vector<Tree> trees(f.trees().begin(), f.trees().end());
  trees[root - 1] = add_caret(trees[root - 1], local);
  return Forest(std::move(trees));
}

bool leaves_are_siblings(const Forest& f, std::size_t k) {
  if (k < 1 || k >= f.leaf_count()) return false;
  auto [root, local] = f.locate_leaf(k);
  return leaves_are_siblings(f.trees()[root - 1], local);
}

std::optional<Forest> remove_caret(const Forest& f, std::size_t k) {
  if (!leaves_are_siblings(f, k)) return std::nullopt;
  auto [root, local] = f.locate_leaf(k);
  std::vector<Tree> trees(f.trees().begin(), f.trees().end());
  trees[root - 1] = *remove_caret(trees[root - 1], local);
  return Forest(std::move(trees));
}

Forest merge_roots(const Forest& f, std::size_t j) {
  if (j < 1 || j >= f.root_count()) {
    throw std::out_of_range("merge_roots: root index " + std::to_string(j) + " needs a right neighbour");
  }
  std::vector<Tree> trees;
  trees.reserve(f.root_count() - 1);
  auto src = f.trees();
  for (std::size_t r = 0; r < src.size(); ++r) {
    if (r + 1 == j) {
      trees.push_back(Tree::caret(src[r], src[r + 1]));
      ++r;
    } else {
      trees.push_back(src[r]);
    }
  }
  return Forest(std::move(trees));
}

std::vector<std::size_t> expansion_path(const Forest& f, const Forest& g) {
  if (f.root_count() != g.root_count()) {
    throw std::invalid_argument("expansion_path: forests have different root counts");
  }
  std::vector<std::size_t> path;
  std::size_t offset = 0;
  for (std::size_t r = 0; r < f.root_count(); ++r) {
    for (std::size_t k : expansion_path(f.trees()[r], g.trees()[r])) path.push_back(offset + k);
    offset += g.trees()[r].leaf_count();
  }
  return path;
}

}  // namespace clonal
