#include "clonal/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "clonal/errors.hpp"
#include "text_scan.hpp"

namespace clonal {

Permutation::Permutation(std::vector<Image> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Image v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Image> images(n);
  std::iota(images.begin(), images.end(), Image{1});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("transposition outside 1..n");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i] - 1] = static_cast<Image>(i + 1);
  return p;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("permutation degrees differ");
  Permutation p;
  p.images_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) p.images_[i] = g.images_[h.images_[i] - 1];
  return p;
}

std::string print_permutation(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.images()[i]);
  }
  return out + "]";
}

Permutation parse_permutation(std::string_view text) {
  detail::Scanner s(text);
  std::vector<Permutation::Image> images;
  for (long v : s.int_list('[', ']')) {
    if (v < 1) throw ParseError("permutation: images must be positive", 0);
    images.push_back(static_cast<Permutation::Image>(v));
  }
  s.expect_end();
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("permutation: ") + e.what(), 0);
  }
}

Permutation extend(const Permutation& g, std::size_t n) {
  if (n < g.degree()) throw std::invalid_argument("extend: target degree below source degree");
  std::vector<Permutation::Image> images(g.images().begin(), g.images().end());
  for (std::size_t i = g.degree() + 1; i <= n; ++i) images.push_back(static_cast<Permutation::Image>(i));
  return Permutation(std::move(images));
}

std::optional<Permutation> restrict_top(const Permutation& h) {
  std::size_t n = h.degree();
  if (n < 2 || h(n) != n) return std::nullopt;
  return Permutation(std::vector<Permutation::Image>(h.images().begin(), h.images().end() - 1));
}

Permutation sigma_clone(std::size_t k, const Permutation& g) {
  std::size_t n = g.degree();
  if (k < 1 || k > n) {
    throw std::out_of_range("sigma_clone: k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  const std::size_t gk = g(k);
  std::vector<Permutation::Image> images(n + 1);
  for (std::size_t m = 1; m <= n + 1; ++m) {
    std::size_t v;
    if (m <= k) {
      std::size_t gm = g(m);
      v = gm <= gk ? gm : gm + 1;
    } else {
      std::size_t gm = g(m - 1);
      v = gm < gk ? gm : gm + 1;
    }
    images[m - 1] = static_cast<Permutation::Image>(v);
  }
  return Permutation(std::move(images));
}

std::optional<Permutation> sigma_unclone(std::size_t k, const Permutation& h) {
  std::size_t n1 = h.degree();
  if (k < 1 || k + 1 > n1) return std::nullopt;
  if (h(k + 1) != h(k) + 1) return std::nullopt;
  const std::size_t top = h(k + 1);
  std::vector<Permutation::Image> images;
  images.reserve(n1 - 1);
  for (std::size_t m = 1; m <= n1; ++m) {
    if (m == k + 1) continue;
    std::size_t v = h(m);
    images.push_back(static_cast<Permutation::Image>(v >= top ? v - 1 : v));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation::Image> images(n);
  std::iota(images.begin(), images.end(), Permutation::Image{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace clonal
