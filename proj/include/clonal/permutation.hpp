#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clonal {

/// A permutation of {1..n} in one-line notation: image(i) for i = 1..n.
///
/// Products compose right to left: (g * h)(i) = g(h(i)). This is the order
/// under which the standard cloning maps satisfy the "cloning a product"
/// rule (gh)ς_k = (g)ς_{h(k)} (h)ς_k, and under which a tree-pair triple
/// [T-, g, T+] sends leaf i of T+ to leaf g(i) of T-.
class Permutation {
 public:
  using Image = std::uint32_t;

  Permutation() = default;  // degree 0; only useful as a placeholder

  /// Throws std::invalid_argument unless `images` is a bijection of 1..n.
  explicit Permutation(std::vector<Image> images);

  static Permutation identity(std::size_t n);
  /// Adjacent transposition (i i+1) in S_n.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Image> images() const noexcept { return images_; }

  /// image of i, 1-based.
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Image> images_;
};

/// "[3,1,2]"
std::string print_permutation(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// Extension of g to degree n fixing degree(g)+1..n.
Permutation extend(const Permutation& g, std::size_t n);

/// Preimage under extension: the restriction of h to 1..n-1 when h fixes its
/// top point.
std::optional<Permutation> restrict_top(const Permutation& h);

/// The standard cloning map ς_k: bifurcates the arrow starting at k into two
/// parallel arrows. Throws std::out_of_range unless 1 <= k <= degree(g).
Permutation sigma_clone(std::size_t k, const Permutation& g);

/// Partial inverse of sigma_clone: succeeds iff h(k+1) = h(k) + 1.
std::optional<Permutation> sigma_unclone(std::size_t k, const Permutation& h);

/// All n! permutations of degree n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace clonal
