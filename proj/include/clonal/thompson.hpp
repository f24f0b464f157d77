#pragma once

// The Thompson-like group of a cloning system: classes of triples
// [T-, g, T+] under expansion, with multiplication via common expansions.
//
// A triple sends leaf i of T+ to leaf ρ(g)(i) of T-. Expanding at k adds a
// caret to leaf k of T+, a caret to leaf ρ(g)(k) of T-, and clones g at k.

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clonal/cloning_system.hpp"
#include "clonal/errors.hpp"
#include "clonal/instances.hpp"
#include "clonal/tree.hpp"

namespace clonal {

template <CloningSystem S>
struct Triple {
  Tree minus;
  typename S::Element g;
  Tree plus;

  friend bool operator==(const Triple&, const Triple&) = default;
};

template <CloningSystem S>
void validate_triple(const S& sys, const Triple<S>& t) {
  const std::size_t n = sys.rank(t.g);
  if (t.minus.leaf_count() != n || t.plus.leaf_count() != n) {
    throw std::invalid_argument("triple: leaf counts " + std::to_string(t.minus.leaf_count()) + ", " +
                                std::to_string(t.plus.leaf_count()) + " do not match rank " + std::to_string(n));
  }
}

template <CloningSystem S>
Triple<S> expand(const S& sys, const Triple<S>& t, std::size_t k) {
  const std::size_t n = t.plus.leaf_count();
  if (k < 1 || k > n) throw std::out_of_range("expand: k outside 1..n");
  return {add_caret(t.minus, sys.rho(t.g)(k)), sys.clone(t.g, k), add_caret(t.plus, k)};
}

/// Undoes expand(·, k) when the triple has that shape.
template <CloningSystem S>
std::optional<Triple<S>> reduce_step(const S& sys, const Triple<S>& t, std::size_t k) {
  if (!leaves_are_siblings(t.plus, k)) return std::nullopt;
  auto g0 = sys.try_unclone(t.g, k);
  if (!g0) return std::nullopt;
  auto minus = remove_caret(t.minus, sys.rho(*g0)(k));
  if (!minus) return std::nullopt;
  return Triple<S>{std::move(*minus), std::move(*g0), *remove_caret(t.plus, k)};
}

template <CloningSystem S>
std::vector<std::size_t> reducible_indices(const S& sys, const Triple<S>& t) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < t.plus.leaf_count(); ++k) {
    if (reduce_step(sys, t, k)) out.push_back(k);
  }
  return out;
}

enum class ReductionOrder { SmallestFirst, LargestFirst, Random };

/// Reduces until no index is reducible. SmallestFirst gives the canonical
/// representative; the other orders exist to probe confluence.
template <CloningSystem S>
Triple<S> normal_form(const S& sys, Triple<S> t, ReductionOrder order = ReductionOrder::SmallestFirst,
                      Rng* rng = nullptr) {
  if (order == ReductionOrder::Random && rng == nullptr) throw std::invalid_argument("normal_form: random order needs an rng");
  while (true) {
    std::optional<Triple<S>> next;
    const std::size_t n = t.plus.leaf_count();
    if (order == ReductionOrder::SmallestFirst) {
      for (std::size_t k = 1; k < n && !next; ++k) next = reduce_step(sys, t, k);
    } else if (order == ReductionOrder::LargestFirst) {
      for (std::size_t k = n; k-- > 1 && !next;) next = reduce_step(sys, t, k);
    } else {
      auto ks = reducible_indices(sys, t);
      if (!ks.empty()) next = reduce_step(sys, t, ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(*rng)]);
    }
    if (!next) return t;
    t = std::move(*next);
  }
}

/// Expands t so that its T+ becomes `target` (T+ must be a prefix of it).
template <CloningSystem S>
Triple<S> expand_plus_to(const S& sys, Triple<S> t, const Tree& target) {
  for (std::size_t k : expansion_path(t.plus, target)) t = expand(sys, t, k);
  return t;
}

/// Expands t so that its T- becomes `target`; each caret wanted at leaf j of
/// T- is produced by expanding at the leaf of T+ whose arrow lands on j.
template <CloningSystem S>
Triple<S> expand_minus_to(const S& sys, Triple<S> t, const Tree& target) {
  for (std::size_t j : expansion_path(t.minus, target)) t = expand(sys, t, rho_preimage(sys, t.g, j));
  return t;
}

/// The product before reduction: both factors expanded to the union of the
/// inner trees, middle entries multiplied.
template <CloningSystem S>
Triple<S> multiply_unreduced(const S& sys, const Triple<S>& x, const Triple<S>& y) {
  Tree common = tree_union(x.plus, y.minus);
  Triple<S> xe = expand_plus_to(sys, x, common);
  Triple<S> ye = expand_minus_to(sys, y, common);
  return {std::move(xe.minus), sys.multiply(xe.g, ye.g), std::move(ye.plus)};
}

template <CloningSystem S>
Triple<S> identity_triple(const S& sys) {
  return {Tree(), sys.identity(1), Tree()};
}

/// An element of the Thompson-like group, held as its reduced triple
/// together with a shared handle on the cloning system.
template <CloningSystem S>
class ThompsonElement {
 public:
  using System = S;
  using Group = typename S::Element;

  /// Validates and reduces `raw`.
  ThompsonElement(std::shared_ptr<const S> sys, Triple<S> raw) : sys_(std::move(sys)) {
    if (!sys_) throw std::invalid_argument("ThompsonElement: null cloning system");
    validate_triple(*sys_, raw);
    rep_ = normal_form(*sys_, std::move(raw));
  }

  static ThompsonElement identity(std::shared_ptr<const S> sys) {
    auto t = identity_triple(*sys);
    return ThompsonElement(std::move(sys), std::move(t));
  }

  const S& system() const noexcept { return *sys_; }
  const std::shared_ptr<const S>& handle() const noexcept { return sys_; }
  const Triple<S>& rep() const noexcept { return rep_; }
  const Tree& minus() const noexcept { return rep_.minus; }
  const Group& g() const noexcept { return rep_.g; }
  const Tree& plus() const noexcept { return rep_.plus; }
  std::size_t leaf_count() const noexcept { return rep_.plus.leaf_count(); }

  bool is_identity() const { return rep_ == identity_triple(*sys_); }

  ThompsonElement operator*(const ThompsonElement& y) const {
    require_same(y);
    return ThompsonElement(sys_, multiply_unreduced(*sys_, rep_, y.rep_));
  }

  ThompsonElement inverse() const { return ThompsonElement(sys_, Triple<S>{rep_.plus, sys_->invert(rep_.g), rep_.minus}); }

  /// Equality of reduced representatives.
  bool equals_fast(const ThompsonElement& y) const {
    require_same(y);
    return rep_ == y.rep_;
  }

  /// Equality decided by x·y⁻¹ reducing to the identity triple.
  bool equals_by_inverse(const ThompsonElement& y) const { return ((*this) * y.inverse()).is_identity(); }

  /// With CLONAL_VERIFY_EQUALITY both decision paths run and must agree.
  friend bool operator==(const ThompsonElement& x, const ThompsonElement& y) {
    const bool fast = x.equals_fast(y);
#ifdef CLONAL_VERIFY_EQUALITY
    if (fast != x.equals_by_inverse(y)) {
      throw InvariantBreach("equality paths disagree: reduced representatives " +
                            std::string(fast ? "match" : "differ") + " but x*inv(y) says otherwise");
    }
#endif
    return fast;
  }

 private:
  void require_same(const ThompsonElement& y) const {
    if (sys_ != y.sys_ && sys_->name() != y.sys_->name()) {
      throw InstanceMismatch("elements belong to different cloning systems: " + sys_->name() + " vs " +
                             y.sys_->name());
    }
  }

  std::shared_ptr<const S> sys_;
  Triple<S> rep_;
};

/// g ↦ [T, g, T], a monomorphism G_n → Thomp for each fixed n-leaf tree T.
template <CloningSystem S>
ThompsonElement<S> embed_group(std::shared_ptr<const S> sys, const typename S::Element& g, const Tree& t) {
  if (sys->rank(g) != t.leaf_count()) throw std::invalid_argument("embed_group: rank does not match leaf count");
  return ThompsonElement<S>(std::move(sys), Triple<S>{t, g, t});
}

/// [T-, 1, T+], the copy of Thompson's group F.
template <CloningSystem S>
ThompsonElement<S> embed_F(std::shared_ptr<const S> sys, const Tree& minus, const Tree& plus) {
  if (minus.leaf_count() != plus.leaf_count()) throw std::invalid_argument("embed_F: leaf counts differ");
  auto id = sys->identity(plus.leaf_count());
  return ThompsonElement<S>(std::move(sys), Triple<S>{minus, std::move(id), plus});
}

inline const std::shared_ptr<const SymmetricSystem>& symmetric_system() {
  static const auto sys = std::make_shared<const SymmetricSystem>();
  return sys;
}

/// [T-, g, T+] ↦ [T-, ρ(g), T+] in Thompson's group V.
template <CloningSystem S>
ThompsonElement<SymmetricSystem> project_to_V(const ThompsonElement<S>& x) {
  return ThompsonElement<SymmetricSystem>(symmetric_system(),
                                          Triple<SymmetricSystem>{x.minus(), x.system().rho(x.g()), x.plus()});
}

/// Membership in the kernel of the projection to V.
template <CloningSystem S>
bool kernel_test(const ThompsonElement<S>& x) {
  return project_to_V(x).is_identity();
}

/// A reduced element whose raw triple has a uniformly chosen leaf count in
/// 1..max_leaves, two random trees and a sampled middle entry.
template <CloningSystem S>
ThompsonElement<S> random_element(std::shared_ptr<const S> sys, std::size_t max_leaves, Rng& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  Tree minus = random_tree(n, rng);
  Tree plus = random_tree(n, rng);
  auto g = sys->sample(n, rng);
  return ThompsonElement<S>(std::move(sys), Triple<S>{std::move(minus), std::move(g), std::move(plus)});
}

/// g ↦ [L, (g), L] into the Thompson-like group of the direct power.
template <BaseGroup B>
ThompsonElement<PowerSystem<B>> retract_inject(std::shared_ptr<const PowerSystem<B>> sys, const typename B::Element& g) {
  typename PowerSystem<B>::Element tuple{{g}};
  return ThompsonElement<PowerSystem<B>>(std::move(sys), Triple<PowerSystem<B>>{Tree(), std::move(tuple), Tree()});
}

/// [T-, (g_1, ..., g_n), T+] ↦ g_1. Read off the normal form; a homomorphism
/// when cloning keeps the first copy unchanged (twist a = 1).
template <BaseGroup B>
typename B::Element retract_eval(const ThompsonElement<PowerSystem<B>>& x) {
  return x.g().entries.front();
}

}  // namespace clonal
