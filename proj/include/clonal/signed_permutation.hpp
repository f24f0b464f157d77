#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonal/permutation.hpp"

namespace clonal {

/// An element of the signed symmetric group S_n^± (Coxeter type B_n): a
/// permutation σ of {±1..±n} with σ(-i) = -σ(i), stored by its values on
/// 1..n. Products compose right to left like Permutation.
class SignedPermutation {
 public:
  using Image = std::int32_t;

  SignedPermutation() = default;
  /// Throws std::invalid_argument unless |images| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<Image> images);

  static SignedPermutation identity(std::size_t n);
  /// Coxeter generator s_i of S_n^±: (i i+1)(-i -(i+1)) for i < n, and the
  /// sign change (n -n) for i = n.
  static SignedPermutation generator(std::size_t n, std::size_t i);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Image> images() const noexcept { return images_; }

  /// Value at a signed point i ∈ {±1..±n}.
  Image operator()(Image i) const {
    return i > 0 ? images_.at(static_cast<std::size_t>(i) - 1) : -images_.at(static_cast<std::size_t>(-i) - 1);
  }

  bool is_identity() const noexcept;
  SignedPermutation inverse() const;

  friend SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<Image> images_;
};

/// A word in the Coxeter generators s_1..s_n of S_n^±, read as the product
/// s_{w_1} s_{w_2} ... s_{w_m}.
struct GeneratorWord {
  std::size_t degree = 0;
  std::vector<std::size_t> letters;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// "[1,-3,-2]"
std::string print_signed(const SignedPermutation& g);
SignedPermutation parse_signed(std::string_view text);

/// "s3 s2 s3"; the empty word prints as "".
std::string print_word(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text, std::size_t degree);

SignedPermutation evaluate(const GeneratorWord& w);

/// Absolute-value permutation |g|; this is the representation map to S_n
/// (s_i ↦ (i i+1) for i < n, s_n ↦ 1).
Permutation signed_rho(const SignedPermutation& g);

/// Extension fixing ±(degree+1)..±n, and its partial inverse.
SignedPermutation extend(const SignedPermutation& g, std::size_t n);
std::optional<SignedPermutation> restrict_top(const SignedPermutation& h);

/// Cloning of a single generator: the word (s_i)κ_k^n in S_{n+1}^±.
GeneratorWord signed_generator_clone(std::size_t i, std::size_t k, std::size_t n);

/// A generator word evaluating to g: sort |g| by adjacent transpositions,
/// then clear each remaining sign with the conjugate of s_n that reaches it.
/// Throws InvariantBreach if the word fails to evaluate back to g.
GeneratorWord signed_to_word(const SignedPermutation& g);

/// Extends the generator table to an arbitrary word by the product rule
/// (w_1 ... w_m)κ_k = (w_1)κ_{ρ(w_2...w_m)k} (w_2...w_m)κ_k.
SignedPermutation clone_word(const GeneratorWord& w, std::size_t k);

SignedPermutation signed_clone_via_word(std::size_t k, const SignedPermutation& g);

/// Closed-form cloning map. The absolute part is ς_k(|g|); when arrow k is
/// negative, the two new arrows cross (values at k and k+1 exchanged) and
/// both stay negative. Other arrows keep their signs.
SignedPermutation signed_clone(std::size_t k, const SignedPermutation& g);

/// Partial inverse of signed_clone.
std::optional<SignedPermutation> signed_unclone(std::size_t k, const SignedPermutation& h);

/// All 2^n n! elements of S_n^±, ordered by absolute part then sign pattern.
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);

}  // namespace clonal
