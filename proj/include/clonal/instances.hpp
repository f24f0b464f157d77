#pragma once

// The built-in cloning systems: trivial groups (giving F), symmetric groups
// (giving V), signed symmetric groups, direct powers G^n and invertible
// upper-triangular rational matrices.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clonal/base_groups.hpp"
#include "clonal/cloning_system.hpp"
#include "clonal/errors.hpp"
#include "clonal/permutation.hpp"
#include "clonal/rational_matrix.hpp"
#include "clonal/signed_permutation.hpp"

namespace clonal {

namespace detail {

inline std::optional<std::uint64_t> checked_mul(std::optional<std::uint64_t> a, std::uint64_t b) {
  if (!a || (b != 0 && *a > std::numeric_limits<std::uint64_t>::max() / b)) return std::nullopt;
  return *a * b;
}

inline void require_rank(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    throw ParseError(std::string(what) + ": rank " + std::to_string(actual) + " does not match " +
                         std::to_string(expected) + " leaves",
                     0);
  }
}

/// Splits "(a,b,c)" at top-level commas; nested brackets are kept intact.
std::vector<std::string_view> split_tuple(std::string_view text);

}  // namespace detail

// ---------------------------------------------------------------------------

struct TrivialElement {
  std::size_t rank = 1;
  friend bool operator==(const TrivialElement&, const TrivialElement&) = default;
};

/// G_n = {1} for every n; the Thompson-like group is F.
class TrivialSystem {
 public:
  using Element = TrivialElement;

  std::string name() const { return "trivial"; }
  std::size_t rank(const Element& g) const { return g.rank; }
  Element identity(std::size_t n) const { return {n}; }
  Element multiply(const Element& g, const Element&) const { return g; }
  Element invert(const Element& g) const { return g; }
  Element iota(const Element&, std::size_t n) const { return {n}; }
  std::optional<Element> try_restrict(const Element& h) const {
    if (h.rank < 2) return std::nullopt;
    return Element{h.rank - 1};
  }
  Permutation rho(const Element& g) const { return Permutation::identity(g.rank); }
  Element clone(const Element& g, std::size_t k) const;
  std::optional<Element> try_unclone(const Element& h, std::size_t k) const {
    if (k < 1 || k >= h.rank) return std::nullopt;
    return Element{h.rank - 1};
  }
  std::optional<std::uint64_t> order(std::size_t) const { return 1; }
  std::vector<Element> enumerate(std::size_t n) const { return {Element{n}}; }
  Element sample(std::size_t n, Rng&) const { return {n}; }
  std::string format(const Element&) const { return "1"; }
  Element parse(std::string_view text, std::size_t n) const;
  Json to_json(const Element&) const { return 1; }
  Element from_json(const Json& j, std::size_t n) const;
};

// ---------------------------------------------------------------------------

/// G_n = S_n with ρ = id and the standard cloning maps ς_k^n.
class SymmetricSystem {
 public:
  using Element = Permutation;

  std::string name() const { return "symmetric"; }
  std::size_t rank(const Element& g) const { return g.degree(); }
  Element identity(std::size_t n) const { return Permutation::identity(n); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  Element iota(const Element& g, std::size_t n) const { return extend(g, n); }
  std::optional<Element> try_restrict(const Element& h) const { return restrict_top(h); }
  Permutation rho(const Element& g) const { return g; }
  Element clone(const Element& g, std::size_t k) const { return sigma_clone(k, g); }
  std::optional<Element> try_unclone(const Element& h, std::size_t k) const { return sigma_unclone(k, h); }
  std::optional<std::uint64_t> order(std::size_t n) const;
  std::vector<Element> enumerate(std::size_t n) const { return all_permutations(n); }
  Element sample(std::size_t n, Rng& rng) const;
  std::string format(const Element& g) const { return print_permutation(g); }
  Element parse(std::string_view text, std::size_t n) const;
  Json to_json(const Element& g) const;
  Element from_json(const Json& j, std::size_t n) const;
};

// ---------------------------------------------------------------------------

/// G_n = S_n^± with ρ = |·| and the generator-table cloning maps, evaluated
/// through the closed form signed_clone.
class SignedSystem {
 public:
  using Element = SignedPermutation;

  std::string name() const { return "signed"; }
  std::size_t rank(const Element& g) const { return g.degree(); }
  Element identity(std::size_t n) const { return SignedPermutation::identity(n); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  Element iota(const Element& g, std::size_t n) const { return extend(g, n); }
  std::optional<Element> try_restrict(const Element& h) const { return restrict_top(h); }
  Permutation rho(const Element& g) const { return signed_rho(g); }
  Element clone(const Element& g, std::size_t k) const { return signed_clone(k, g); }
  std::optional<Element> try_unclone(const Element& h, std::size_t k) const { return signed_unclone(k, h); }
  std::optional<std::uint64_t> order(std::size_t n) const;
  std::vector<Element> enumerate(std::size_t n) const { return all_signed_permutations(n); }
  Element sample(std::size_t n, Rng& rng) const;
  std::string format(const Element& g) const { return print_signed(g); }
  /// Accepts the one-line form "[1,-3,-2]" or a generator word "s3 s2 s3".
  Element parse(std::string_view text, std::size_t n) const;
  Json to_json(const Element& g) const;
  Element from_json(const Json& j, std::size_t n) const;
};

// ---------------------------------------------------------------------------

template <class E>
struct PowerElement {
  std::vector<E> entries;
  friend bool operator==(const PowerElement&, const PowerElement&) = default;
};

/// G_n = G^n with trivial ρ. Cloning at k replaces entry g_k by the pair
/// φ1(g_k), φ2(g_k); with φ1 = φ2 = id it copies the entry.
template <BaseGroup B>
class PowerSystem {
 public:
  using Base = B;
  using Element = PowerElement<typename B::Element>;

  explicit PowerSystem(B base) : base_(std::move(base)) {}

  const B& base() const noexcept { return base_; }

  std::string name() const { return "power:" + base_.name(); }
  std::size_t rank(const Element& g) const { return g.entries.size(); }

  Element identity(std::size_t n) const { return {std::vector<typename B::Element>(n, base_.identity())}; }

  Element multiply(const Element& g, const Element& h) const {
    if (g.entries.size() != h.entries.size()) throw std::invalid_argument("power: ranks differ");
    Element out;
    out.entries.reserve(g.entries.size());
    for (std::size_t i = 0; i < g.entries.size(); ++i) out.entries.push_back(base_.multiply(g.entries[i], h.entries[i]));
    return out;
  }

  Element invert(const Element& g) const {
    Element out;
    out.entries.reserve(g.entries.size());
    for (const auto& x : g.entries) out.entries.push_back(base_.invert(x));
    return out;
  }

  Element iota(const Element& g, std::size_t n) const {
    if (n < g.entries.size()) throw std::invalid_argument("iota: target rank below source rank");
    Element out = g;
    out.entries.resize(n, base_.identity());
    return out;
  }

  std::optional<Element> try_restrict(const Element& h) const {
    if (h.entries.size() < 2 || !(h.entries.back() == base_.identity())) return std::nullopt;
    Element out = h;
    out.entries.pop_back();
    return out;
  }

  Permutation rho(const Element& g) const { return Permutation::identity(g.entries.size()); }

  Element clone(const Element& g, std::size_t k) const {
    const std::size_t n = g.entries.size();
    if (k < 1 || k > n) throw std::out_of_range("power clone: k outside 1..n");
    Element out;
    out.entries.reserve(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == k) {
        out.entries.push_back(base_.phi1(g.entries[i - 1]));
        out.entries.push_back(base_.phi2(g.entries[i - 1]));
      } else {
        out.entries.push_back(g.entries[i - 1]);
      }
    }
    return out;
  }

  std::optional<Element> try_unclone(const Element& h, std::size_t k) const {
    const std::size_t n1 = h.entries.size();
    if (k < 1 || k + 1 > n1) return std::nullopt;
    auto x1 = base_.phi1_preimage(h.entries[k - 1]);
    auto x2 = base_.phi2_preimage(h.entries[k]);
    if (!x1 || !x2 || !(*x1 == *x2)) return std::nullopt;
    Element out;
    out.entries.reserve(n1 - 1);
    for (std::size_t i = 1; i <= n1; ++i) {
      if (i == k) {
        out.entries.push_back(*x1);
      } else if (i != k + 1) {
        out.entries.push_back(h.entries[i - 1]);
      }
    }
    return out;
  }

  std::optional<std::uint64_t> order(std::size_t n) const {
    const std::uint64_t base_order = base_.elements().size();
    if (base_order == 0) return std::nullopt;
    std::optional<std::uint64_t> total = 1;
    for (std::size_t i = 0; i < n; ++i) total = detail::checked_mul(total, base_order);
    return total;
  }

  /// Lexicographic in the entries, following the base group's element order.
  std::vector<Element> enumerate(std::size_t n) const {
    const auto elems = base_.elements();
    if (elems.empty()) throw std::logic_error("power: base group is not enumerable");
    std::vector<Element> out;
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      Element g;
      g.entries.reserve(n);
      for (std::size_t d : digits) g.entries.push_back(elems[d]);
      out.push_back(std::move(g));
      std::size_t pos = n;
      while (pos > 0 && ++digits[pos - 1] == elems.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
    return out;
  }

  Element sample(std::size_t n, Rng& rng) const {
    Element g;
    g.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.entries.push_back(base_.sample(rng));
    return g;
  }

  std::string format(const Element& g) const {
    std::string out = "(";
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
      if (i) out += ',';
      out += base_.format(g.entries[i]);
    }
    return out + ")";
  }

  Element parse(std::string_view text, std::size_t n) const {
    Element g;
    for (auto piece : detail::split_tuple(text)) g.entries.push_back(base_.parse(piece));
    detail::require_rank(g.entries.size(), n, "power element");
    return g;
  }

  Json to_json(const Element& g) const {
    Json out = Json::array();
    for (const auto& x : g.entries) out.push_back(base_.to_json(x));
    return out;
  }

  Element from_json(const Json& j, std::size_t n) const {
    if (j.is_string()) return parse(j.get<std::string>(), n);
    if (!j.is_array()) throw ParseError("power element must be an array or a tuple string", 0);
    Element g;
    for (const auto& x : j) g.entries.push_back(base_.from_json(x));
    detail::require_rank(g.entries.size(), n, "power element");
    return g;
  }

 private:
  B base_;
};

using CyclicPowerSystem = PowerSystem<CyclicGroup>;
using S3PowerSystem = PowerSystem<S3Group>;

// ---------------------------------------------------------------------------

/// G_n = B_n(Q), invertible upper-triangular rational matrices, with trivial
/// ρ and the block cloning maps.
class MatrixSystem {
 public:
  using Element = UTMatrix;

  std::string name() const { return "matrix"; }
  std::size_t rank(const Element& g) const { return g.size(); }
  Element identity(std::size_t n) const { return UTMatrix::identity(n); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  Element iota(const Element& g, std::size_t n) const { return extend(g, n); }
  std::optional<Element> try_restrict(const Element& h) const { return restrict_top(h); }
  Permutation rho(const Element& g) const { return Permutation::identity(g.size()); }
  Element clone(const Element& g, std::size_t k) const { return matrix_clone(k, g); }
  std::optional<Element> try_unclone(const Element& h, std::size_t k) const { return matrix_unclone(k, h); }
  std::optional<std::uint64_t> order(std::size_t) const { return std::nullopt; }
  std::vector<Element> enumerate(std::size_t) const {
    throw std::logic_error("matrix: B_n(Q) is infinite and cannot be enumerated");
  }
  /// Diagonal from {±1, ±2, ±1/2}, strict upper entries from {-2..2} ∪ {±1/2}.
  Element sample(std::size_t n, Rng& rng) const;
  /// Every matrix with diagonal in {±1, ±1/2, 2} and upper entries in
  /// {0, ±1, ±1/2, 2}; the finite search space for bounded checks.
  std::vector<Element> slice(std::size_t n) const;
  std::optional<std::uint64_t> slice_size(std::size_t n) const;
  std::string format(const Element& g) const { return print_matrix(g); }
  Element parse(std::string_view text, std::size_t n) const;
  Json to_json(const Element& g) const;
  Element from_json(const Json& j, std::size_t n) const;
};

}  // namespace clonal
