#pragma once

// Representative-level structure of the Stein-Farley complex: vertices
// (T, g, E) with E a forest, the right action of G_f (f = number of feet)
// by cloning along E, edges and cubes obtained by merging adjacent roots, and
// a bounded probe for whether an element fixes a vertex.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clonal/cloning_system.hpp"
#include "clonal/thompson.hpp"
#include "clonal/tree.hpp"

namespace clonal {

template <CloningSystem S>
struct SteinVertex {
  Tree t;
  typename S::Element g;
  Forest e;

  friend bool operator==(const SteinVertex&, const SteinVertex&) = default;
};

template <CloningSystem S>
void validate_vertex(const S& sys, const SteinVertex<S>& v) {
  const std::size_t n = sys.rank(v.g);
  if (v.t.leaf_count() != n || v.e.leaf_count() != n) {
    throw std::invalid_argument("vertex: leaf counts " + std::to_string(v.t.leaf_count()) + ", " +
                                std::to_string(v.e.leaf_count()) + " do not match rank " + std::to_string(n));
  }
}

template <CloningSystem S>
std::size_t feet(const SteinVertex<S>& v) {
  return v.e.root_count();
}

template <CloningSystem S>
struct ClonedAlongForest {
  typename S::Element h_up;
  Forest e;
};

/// Pushes h ∈ G_f through the forest E (f roots): each caret that E adds at
/// leaf j is rewritten as a caret at j' = ρ(h)^{-1}(j) after cloning h at j'.
template <CloningSystem S>
ClonedAlongForest<S> clone_along_forest(const S& sys, typename S::Element h, const Forest& e) {
  const std::size_t f = e.root_count();
  if (sys.rank(h) != f) throw std::invalid_argument("clone_along_forest: rank of h differs from the root count");
  Forest moved = Forest::trivial(f);
  for (std::size_t j : expansion_path(Forest::trivial(f), e)) {
    const std::size_t k = rho_preimage(sys, h, j);
    h = sys.clone(h, k);
    moved = add_caret(moved, k);
  }
  return {std::move(h), std::move(moved)};
}

/// (T, g, E)·h = (T, g·h_up, E') with (h_up, E') = clone_along_forest(h, E).
template <CloningSystem S>
SteinVertex<S> right_action(const S& sys, const SteinVertex<S>& v, const typename S::Element& h) {
  if (sys.rank(h) != feet(v)) throw std::invalid_argument("right_action: rank of h differs from the number of feet");
  auto [h_up, e] = clone_along_forest(sys, h, v.e);
  return {v.t, sys.multiply(v.g, h_up), std::move(e)};
}

template <CloningSystem S>
SteinVertex<S> expand_vertex(const S& sys, const SteinVertex<S>& v, std::size_t k) {
  if (k < 1 || k > v.e.leaf_count()) throw std::out_of_range("expand_vertex: k outside 1..n");
  return {add_caret(v.t, sys.rho(v.g)(k)), sys.clone(v.g, k), add_caret(v.e, k)};
}

template <CloningSystem S>
std::optional<SteinVertex<S>> reduce_vertex_step(const S& sys, const SteinVertex<S>& v, std::size_t k) {
  if (!leaves_are_siblings(v.e, k)) return std::nullopt;
  auto g0 = sys.try_unclone(v.g, k);
  if (!g0) return std::nullopt;
  auto t = remove_caret(v.t, sys.rho(*g0)(k));
  if (!t) return std::nullopt;
  return SteinVertex<S>{std::move(*t), std::move(*g0), *remove_caret(v.e, k)};
}

/// Reduces at the smallest reducible index until none is left.
template <CloningSystem S>
SteinVertex<S> normalize_vertex(const S& sys, SteinVertex<S> v) {
  for (std::size_t k = 1; k < v.e.leaf_count();) {
    if (auto next = reduce_vertex_step(sys, v, k)) {
      v = std::move(*next);
      k = 1;
    } else {
      ++k;
    }
  }
  return v;
}

/// Expands v until its tree is `target` (v.t must be a prefix of it).
template <CloningSystem S>
SteinVertex<S> expand_vertex_to(const S& sys, SteinVertex<S> v, const Tree& target) {
  for (std::size_t j : expansion_path(v.t, target)) v = expand_vertex(sys, v, rho_preimage(sys, v.g, j));
  return v;
}

/// The action of a Thompson-like group element on a vertex representative.
template <CloningSystem S>
SteinVertex<S> act(const ThompsonElement<S>& x, const SteinVertex<S>& v) {
  const S& sys = x.system();
  Tree common = tree_union(x.plus(), v.t);
  Triple<S> xe = expand_plus_to(sys, x.rep(), common);
  SteinVertex<S> ve = expand_vertex_to(sys, v, common);
  return {std::move(xe.minus), sys.multiply(xe.g, ve.g), std::move(ve.e)};
}

/// Root positions j (a caret joining roots j and j+1) for every set of `dim`
/// pairwise disjoint merges, in lexicographic order.
template <CloningSystem S>
std::vector<std::vector<std::size_t>> cubes_from(const SteinVertex<S>& v, std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("cubes_from: dimension must be at least 1");
  const std::size_t f = feet(v);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == dim) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t j = next; j < f; ++j) {
      chosen.push_back(j);
      self(self, j + 2);
      chosen.pop_back();
    }
  };
  search(search, 1);
  return out;
}

/// Applies a set of disjoint merges to E (the far corner of a cube).
inline Forest apply_merges(Forest e, std::vector<std::size_t> merges) {
  std::sort(merges.begin(), merges.end(), std::greater<>());
  for (std::size_t j : merges) e = merge_roots(e, j);
  return e;
}

template <CloningSystem S>
bool filtration_member(const SteinVertex<S>& v, std::size_t n) {
  if (n < 1) throw std::invalid_argument("filtration_member: n must be at least 1");
  return feet(v) <= n;
}

namespace detail {

// Shadow of an E-subtree: `whole` when the entire subtree lands on one
// T-leaf address, else `text` is the canonical form "{a,b}" of the unordered
// pair of child shadows.
struct ShadowNode {
  bool whole = false;
  std::string text;

  std::string canonical() const { return whole ? "@" + text : text; }
};

inline bool sibling_addresses(const std::string& a, const std::string& b) {
  return a.size() == b.size() && !a.empty() && a.substr(0, a.size() - 1) == b.substr(0, b.size() - 1) && a != b;
}

inline ShadowNode shadow_of(std::span<const Tree::Node> nodes, std::size_t& pos, const std::vector<std::string>& target,
                            std::size_t& leaf) {
  if (nodes[pos++] == Tree::Node::Leaf) return ShadowNode{true, target[leaf++]};
  ShadowNode a = shadow_of(nodes, pos, target, leaf);
  ShadowNode b = shadow_of(nodes, pos, target, leaf);
  if (a.whole && b.whole && sibling_addresses(a.text, b.text)) return ShadowNode{true, a.text.substr(0, a.text.size() - 1)};
  std::string x = a.canonical(), y = b.canonical();
  if (y < x) std::swap(x, y);
  return ShadowNode{false, "{" + x + "," + y + "}"};
}

}  // namespace detail

/// An invariant of the vertex class: for each root of E, the images in T of
/// its leaves under ρ(g), merged wherever a caret lands on a caret (in either
/// order); collected as a sorted list over roots. Classes with different
/// shadows are different.
template <CloningSystem S>
std::vector<std::string> vertex_shadow(const S& sys, const SteinVertex<S>& v) {
  const auto t_addr = v.t.leaf_addresses();
  const Permutation p = sys.rho(v.g);
  std::vector<std::string> roots;
  std::size_t offset = 0;
  for (const Tree& root : v.e.trees()) {
    std::vector<std::string> target;
    for (std::size_t i = 1; i <= root.leaf_count(); ++i) target.push_back(t_addr[p(offset + i) - 1]);
    std::size_t pos = 0;
    std::size_t leaf = 0;
    roots.push_back(detail::shadow_of(root.preorder(), pos, target, leaf).canonical());
    offset += root.leaf_count();
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

enum class ProbeVerdict { Fixes, Moves, Unknown };

inline const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Fixes: return "fixes";
    case ProbeVerdict::Moves: return "moves";
    case ProbeVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

struct ProbeResult {
  ProbeVerdict verdict;
  std::string reason;
};

/// Decides x·v ~ v when a certificate is found cheaply:
///  - fixes: x is the identity, x·v reduces to the same representative, or
///    (depth >= 1) some h ∈ G_f carries v onto x·v over a common tree. The
///    candidates are the h solved from the middle entries when E is trivial,
///    and all of G_f when |G_f| <= enumeration_limit.
///  - moves: the vertex shadows differ.
///  - unknown otherwise.
template <CloningSystem S>
ProbeResult stabilizer_probe(const ThompsonElement<S>& x, const SteinVertex<S>& v, std::size_t depth,
                             std::uint64_t enumeration_limit = 10000) {
  const S& sys = x.system();
  validate_vertex(sys, v);
  if (x.is_identity()) return {ProbeVerdict::Fixes, "x is the identity"};
  SteinVertex<S> w = act(x, v);
  const SteinVertex<S> v_red = normalize_vertex(sys, v);
  const SteinVertex<S> w_red = normalize_vertex(sys, w);
  if (v_red == w_red) return {ProbeVerdict::Fixes, "x.v has the same reduced representative as v"};
  if (vertex_shadow(sys, v) != vertex_shadow(sys, w)) return {ProbeVerdict::Moves, "vertex shadows differ"};
  if (depth == 0) return {ProbeVerdict::Unknown, "no certificate at depth 0"};

  Tree common = tree_union(v_red.t, w_red.t);
  SteinVertex<S> a = expand_vertex_to(sys, v_red, common);
  SteinVertex<S> b = expand_vertex_to(sys, w_red, common);
  const std::size_t f = feet(a);
  if (feet(b) != f) return {ProbeVerdict::Moves, "feet differ"};

  auto carries = [&](const typename S::Element& h) {
    SteinVertex<S> moved = right_action(sys, a, h);
    return moved == b || normalize_vertex(sys, moved) == normalize_vertex(sys, b);
  };
  if (a.e == Forest::trivial(f) && b.e == a.e) {
    if (carries(sys.multiply(sys.invert(a.g), b.g))) return {ProbeVerdict::Fixes, "right action by g_v^-1 g_xv"};
  }
  if (auto order = sys.order(f); order && *order <= enumeration_limit) {
    for (const auto& h : sys.enumerate(f)) {
      if (carries(h)) return {ProbeVerdict::Fixes, "right action by an enumerated element of G_f"};
    }
  }
  return {ProbeVerdict::Unknown, "no right action found over the common tree"};
}

}  // namespace clonal
