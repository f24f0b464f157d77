#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "clonal/permutation.hpp"

namespace clonal {

using Rng = std::mt19937_64;
using Json = nlohmann::json;

/// A cloning system: a family of groups G_n (n >= 1) with injective
/// inclusions ι_{m,n}, representation maps ρ_n : G_n -> S_n and cloning maps
/// κ_k^n : G_n -> G_{n+1}.
///
/// Elements carry their own rank. ι, κ and the product are written as plain
/// functions; "apply ι then κ" is clone(iota(g, n), k). Implementations must
/// be pure so one instance can be shared by many threads.
template <class S>
concept CloningSystem = requires(const S& s, const typename S::Element& g, std::size_t n, std::size_t k,
                                 Rng& rng, std::string_view text, const Json& j) {
  { s.name() } -> std::convertible_to<std::string>;
  { s.rank(g) } -> std::convertible_to<std::size_t>;
  { s.identity(n) } -> std::same_as<typename S::Element>;
  { s.multiply(g, g) } -> std::same_as<typename S::Element>;
  { s.invert(g) } -> std::same_as<typename S::Element>;
  { g == g } -> std::convertible_to<bool>;
  // (g)ι_{rank(g),n}
  { s.iota(g, n) } -> std::same_as<typename S::Element>;
  // preimage of h under ι_{rank(h)-1,rank(h)}
  { s.try_restrict(g) } -> std::same_as<std::optional<typename S::Element>>;
  { s.rho(g) } -> std::same_as<Permutation>;
  // (g)κ_k^{rank(g)}
  { s.clone(g, k) } -> std::same_as<typename S::Element>;
  // g0 with (g0)κ_k = h, rank(g0) = rank(h) - 1
  { s.try_unclone(g, k) } -> std::same_as<std::optional<typename S::Element>>;
  // |G_n| when it is finite and fits in 64 bits
  { s.order(n) } -> std::same_as<std::optional<std::uint64_t>>;
  { s.enumerate(n) } -> std::same_as<std::vector<typename S::Element>>;
  { s.sample(n, rng) } -> std::same_as<typename S::Element>;
  { s.format(g) } -> std::convertible_to<std::string>;
  { s.parse(text, n) } -> std::same_as<typename S::Element>;
  { s.to_json(g) } -> std::same_as<Json>;
  { s.from_json(j, n) } -> std::same_as<typename S::Element>;
};

/// Optional capability: a finite subset of G_n used for bounded searches
/// when G_n itself is infinite.
template <class S>
concept HasSlice = CloningSystem<S> && requires(const S& s, std::size_t n) {
  { s.slice(n) } -> std::same_as<std::vector<typename S::Element>>;
  { s.slice_size(n) } -> std::same_as<std::optional<std::uint64_t>>;
};

template <CloningSystem S>
bool in_iota_image(const S& sys, const typename S::Element& h) {
  return sys.try_restrict(h).has_value();
}

/// ρ_n(g)^{-1}(j): the leaf whose arrow lands on j.
template <CloningSystem S>
std::size_t rho_preimage(const S& sys, const typename S::Element& g, std::size_t j) {
  return sys.rho(g).inverse()(j);
}

}  // namespace clonal
