#include "clonal/base_groups.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "clonal/errors.hpp"
#include "text_scan.hpp"

namespace clonal {

namespace {

// Inverse of a unit modulo m by extended Euclid.
std::uint32_t unit_inverse(std::uint32_t a, std::uint32_t m) {
  std::int64_t r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw std::invalid_argument(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return static_cast<std::uint32_t>(((t0 % m) + m) % m);
}

}  // namespace

CyclicGroup::CyclicGroup(std::uint32_t modulus, std::uint32_t a, std::uint32_t b) : m_(modulus), a_(a), b_(b) {
  if (m_ < 1) throw std::invalid_argument("cyclic group needs modulus >= 1");
  if (m_ == 1) {
    a_ = b_ = a_inv_ = b_inv_ = 1;
    return;
  }
  a_ %= m_;
  b_ %= m_;
  a_inv_ = unit_inverse(a_, m_);
  b_inv_ = unit_inverse(b_, m_);
}

std::string CyclicGroup::name() const {
  std::string out = "z" + std::to_string(m_);
  if (twisted()) out += ":twist=" + std::to_string(a_) + "," + std::to_string(b_);
  return out;
}

std::optional<CyclicGroup::Element> CyclicGroup::phi1_preimage(Element h) const {
  if (h >= m_) return std::nullopt;
  return static_cast<Element>((std::uint64_t{a_inv_} * h) % m_);
}

std::optional<CyclicGroup::Element> CyclicGroup::phi2_preimage(Element h) const {
  if (h >= m_) return std::nullopt;
  return static_cast<Element>((std::uint64_t{b_inv_} * h) % m_);
}

std::vector<CyclicGroup::Element> CyclicGroup::elements() const {
  std::vector<Element> out(m_);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

CyclicGroup::Element CyclicGroup::parse(std::string_view text) const {
  detail::Scanner s(text);
  long v = s.integer();
  s.expect_end();
  if (v < 0 || v >= static_cast<long>(m_)) {
    throw ParseError("residue " + std::to_string(v) + " outside 0.." + std::to_string(m_ - 1), 0);
  }
  return static_cast<Element>(v);
}

CyclicGroup::Element CyclicGroup::from_json(const Json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_number_integer()) throw ParseError("cyclic element must be an integer", 0);
  auto v = j.get<long>();
  if (v < 0 || v >= static_cast<long>(m_)) throw ParseError("residue outside 0.." + std::to_string(m_ - 1), 0);
  return static_cast<Element>(v);
}

Permutation S3Group::phi2(const Element& x) const {
  if (!twisted_) return x;
  const Permutation c = Permutation::transposition(3, 1, 2);
  return c * x * c;
}

Permutation S3Group::sample(Rng& rng) const {
  static const std::vector<Permutation> all = all_permutations(3);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

Permutation S3Group::parse(std::string_view text) const {
  Permutation p = parse_permutation(text);
  if (p.degree() != 3) throw ParseError("S3 element must have degree 3", 0);
  return p;
}

Json S3Group::to_json(const Element& x) const {
  return Json(std::vector<std::uint32_t>(x.images().begin(), x.images().end()));
}

Permutation S3Group::from_json(const Json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  try {
    Permutation p(j.get<std::vector<std::uint32_t>>());
    if (p.degree() != 3) throw ParseError("S3 element must have degree 3", 0);
    return p;
  } catch (const Json::exception&) {
    throw ParseError("S3 element must be an array of images", 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace clonal
