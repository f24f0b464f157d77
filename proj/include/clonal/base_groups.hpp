#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clonal/cloning_system.hpp"
#include "clonal/permutation.hpp"

namespace clonal {

/// A group G with two self-monomorphisms φ1, φ2, the input to the direct
/// power cloning system on (G^n).
template <class B>
concept BaseGroup = requires(const B& b, const typename B::Element& x, Rng& rng, std::string_view text,
                             const Json& j) {
  { b.name() } -> std::convertible_to<std::string>;
  { b.identity() } -> std::same_as<typename B::Element>;
  { b.multiply(x, x) } -> std::same_as<typename B::Element>;
  { b.invert(x) } -> std::same_as<typename B::Element>;
  { x == x } -> std::convertible_to<bool>;
  { b.phi1(x) } -> std::same_as<typename B::Element>;
  { b.phi2(x) } -> std::same_as<typename B::Element>;
  { b.phi1_preimage(x) } -> std::same_as<std::optional<typename B::Element>>;
  { b.phi2_preimage(x) } -> std::same_as<std::optional<typename B::Element>>;
  // all elements when G is finite, else empty
  { b.elements() } -> std::same_as<std::vector<typename B::Element>>;
  { b.sample(rng) } -> std::same_as<typename B::Element>;
  { b.format(x) } -> std::convertible_to<std::string>;
  { b.parse(text) } -> std::same_as<typename B::Element>;
  { b.to_json(x) } -> std::same_as<Json>;
  { b.from_json(j) } -> std::same_as<typename B::Element>;
};

/// Preimage by exhaustive search, the default for finite base groups.
template <class B, class Map>
std::optional<typename B::Element> preimage_by_search(const B& base, Map&& phi, const typename B::Element& h) {
  for (const auto& x : base.elements()) {
    if (phi(x) == h) return x;
  }
  return std::nullopt;
}

/// Z/m with φ1(x) = a·x and φ2(x) = b·x for units a, b.
class CyclicGroup {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless m >= 1 and a, b are units mod m.
  explicit CyclicGroup(std::uint32_t modulus, std::uint32_t a = 1, std::uint32_t b = 1);

  std::uint32_t modulus() const noexcept { return m_; }
  bool twisted() const noexcept { return a_ != 1 || b_ != 1; }

  std::string name() const;
  Element identity() const { return 0; }
  Element multiply(Element x, Element y) const { return (x + y) % m_; }
  Element invert(Element x) const { return (m_ - x) % m_; }
  Element phi1(Element x) const { return static_cast<Element>((std::uint64_t{a_} * x) % m_); }
  Element phi2(Element x) const { return static_cast<Element>((std::uint64_t{b_} * x) % m_); }
  std::optional<Element> phi1_preimage(Element h) const;
  std::optional<Element> phi2_preimage(Element h) const;
  std::vector<Element> elements() const;
  Element sample(Rng& rng) const { return std::uniform_int_distribution<Element>(0, m_ - 1)(rng); }
  std::string format(Element x) const { return std::to_string(x); }
  Element parse(std::string_view text) const;
  Json to_json(Element x) const { return x; }
  Element from_json(const Json& j) const;

 private:
  std::uint32_t m_, a_, b_, a_inv_, b_inv_;
};

/// S_3, optionally twisted by φ2 = conjugation by (1 2) (φ1 = id).
class S3Group {
 public:
  using Element = Permutation;

  explicit S3Group(bool twisted = false) : twisted_(twisted) {}

  bool twisted() const noexcept { return twisted_; }

  std::string name() const { return twisted_ ? "s3:twist" : "s3"; }
  Element identity() const { return Permutation::identity(3); }
  Element multiply(const Element& x, const Element& y) const { return x * y; }
  Element invert(const Element& x) const { return x.inverse(); }
  Element phi1(const Element& x) const { return x; }
  Element phi2(const Element& x) const;
  std::optional<Element> phi1_preimage(const Element& h) const {
    return preimage_by_search(*this, [this](const Element& x) { return phi1(x); }, h);
  }
  std::optional<Element> phi2_preimage(const Element& h) const {
    return preimage_by_search(*this, [this](const Element& x) { return phi2(x); }, h);
  }
  std::vector<Element> elements() const { return all_permutations(3); }
  Element sample(Rng& rng) const;
  std::string format(const Element& x) const { return print_permutation(x); }
  Element parse(std::string_view text) const;
  Json to_json(const Element& x) const;
  Element from_json(const Json& j) const;

 private:
  bool twisted_;
};

}  // namespace clonal
