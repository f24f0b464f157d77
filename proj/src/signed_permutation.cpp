#include "clonal/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "clonal/errors.hpp"
#include "text_scan.hpp"

namespace clonal {

namespace {

using Image = SignedPermutation::Image;

std::vector<Image> to_signed(const Permutation& p) {
  return std::vector<Image>(p.images().begin(), p.images().end());
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<Image> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Image v : images_) {
    auto a = static_cast<std::size_t>(std::abs(v));
    if (a < 1 || a > images_.size() || seen[a]) {
      throw std::invalid_argument("not a signed permutation of ±1..±" + std::to_string(images_.size()));
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation g;
  g.images_.resize(n);
  std::iota(g.images_.begin(), g.images_.end(), Image{1});
  return g;
}

SignedPermutation SignedPermutation::generator(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::out_of_range("generator s_" + std::to_string(i) + " not in S_" + std::to_string(n) + "^±");
  SignedPermutation g = identity(n);
  if (i < n) {
    std::swap(g.images_[i - 1], g.images_[i]);
  } else {
    g.images_[n - 1] = -g.images_[n - 1];
  }
  return g;
}

bool SignedPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Image>(i + 1)) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation g;
  g.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Image v = images_[i];
    Image src = static_cast<Image>(i + 1);
    if (v > 0) {
      g.images_[v - 1] = src;
    } else {
      g.images_[-v - 1] = -src;
    }
  }
  return g;
}

SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("signed permutation degrees differ");
  SignedPermutation p;
  p.images_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) p.images_[i] = g(h.images_[i]);
  return p;
}

std::string print_signed(const SignedPermutation& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.images()[i]);
  }
  return out + "]";
}

SignedPermutation parse_signed(std::string_view text) {
  detail::Scanner s(text);
  std::vector<Image> images;
  for (long v : s.int_list('[', ']')) images.push_back(static_cast<Image>(v));
  s.expect_end();
  try {
    return SignedPermutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("signed permutation: ") + e.what(), 0);
  }
}

std::string print_word(const GeneratorWord& w) {
  std::string out;
  for (std::size_t l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l);
  }
  return out;
}

GeneratorWord parse_word(std::string_view text, std::size_t degree) {
  GeneratorWord w{degree, {}};
  detail::Scanner s(text);
  while (!s.at_end()) {
    std::size_t at = s.pos();
    if (!s.consume('s')) s.fail("expected generator 's<i>'");
    long i = s.integer();
    if (i < 1 || static_cast<std::size_t>(i) > degree) {
      throw ParseError("generator index outside 1.." + std::to_string(degree), at);
    }
    w.letters.push_back(static_cast<std::size_t>(i));
  }
  return w;
}

SignedPermutation evaluate(const GeneratorWord& w) {
  SignedPermutation g = SignedPermutation::identity(w.degree);
  for (std::size_t l : w.letters) g = g * SignedPermutation::generator(w.degree, l);
  return g;
}

Permutation signed_rho(const SignedPermutation& g) {
  std::vector<Permutation::Image> images;
  images.reserve(g.degree());
  for (Image v : g.images()) images.push_back(static_cast<Permutation::Image>(std::abs(v)));
  return Permutation(std::move(images));
}

SignedPermutation extend(const SignedPermutation& g, std::size_t n) {
  if (n < g.degree()) throw std::invalid_argument("extend: target degree below source degree");
  std::vector<Image> images(g.images().begin(), g.images().end());
  for (std::size_t i = g.degree() + 1; i <= n; ++i) images.push_back(static_cast<Image>(i));
  return SignedPermutation(std::move(images));
}

std::optional<SignedPermutation> restrict_top(const SignedPermutation& h) {
  std::size_t n = h.degree();
  if (n < 2 || h.images()[n - 1] != static_cast<Image>(n)) return std::nullopt;
  return SignedPermutation(std::vector<Image>(h.images().begin(), h.images().end() - 1));
}

GeneratorWord signed_generator_clone(std::size_t i, std::size_t k, std::size_t n) {
  if (i < 1 || i > n || k < 1 || k > n) {
    throw std::out_of_range("signed_generator_clone: need 1 <= i, k <= n");
  }
  GeneratorWord w{n + 1, {}};
  if (i < n) {
    if (k < i) {
      w.letters = {i + 1};
    } else if (k == i) {
      w.letters = {i, i + 1};
    } else if (k == i + 1) {
      w.letters = {i + 1, i};
    } else {
      w.letters = {i};
    }
  } else if (k < n) {
    w.letters = {n + 1};
  } else {
    w.letters = {n + 1, n, n + 1};
  }
  return w;
}

GeneratorWord signed_to_word(const SignedPermutation& g) {
  const std::size_t n = g.degree();
  // Right multiplication x * s_i swaps positions i, i+1 (i < n) or negates
  // position n. Record the generators that reduce g to the identity.
  std::vector<Image> x(g.images().begin(), g.images().end());
  std::vector<std::size_t> record;
  auto apply = [&](std::size_t i) {
    if (i < n) {
      std::swap(x[i - 1], x[i]);
    } else {
      x[n - 1] = -x[n - 1];
    }
    record.push_back(i);
  };
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t j = 1; j < n; ++j) {
      if (std::abs(x[j - 1]) > std::abs(x[j])) apply(j);
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (x[j - 1] > 0) continue;
    for (std::size_t i = j; i < n; ++i) apply(i);
    apply(n);
    for (std::size_t i = n - 1; i >= j && i >= 1; --i) apply(i);
  }
  // g * s_{a_1} ... s_{a_r} = 1, so g = s_{a_r} ... s_{a_1}.
  GeneratorWord w{n, std::vector<std::size_t>(record.rbegin(), record.rend())};
  if (evaluate(w) != g) throw InvariantBreach("signed_to_word produced a word for a different element");
  return w;
}

SignedPermutation clone_word(const GeneratorWord& w, std::size_t k) {
  const std::size_t n = w.degree;
  if (k < 1 || k > n) throw std::out_of_range("clone_word: k outside 1..n");
  SignedPermutation result = SignedPermutation::identity(n + 1);
  SignedPermutation suffix = SignedPermutation::identity(n);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    auto shifted_k = static_cast<std::size_t>(std::abs(suffix(static_cast<Image>(k))));
    result = evaluate(signed_generator_clone(*it, shifted_k, n)) * result;
    suffix = SignedPermutation::generator(n, *it) * suffix;
  }
  return result;
}

SignedPermutation signed_clone_via_word(std::size_t k, const SignedPermutation& g) {
  return clone_word(signed_to_word(g), k);
}

SignedPermutation signed_clone(std::size_t k, const SignedPermutation& g) {
  const std::size_t n = g.degree();
  if (k < 1 || k > n) throw std::out_of_range("signed_clone: k outside 1..n");
  Permutation q = sigma_clone(k, signed_rho(g));
  std::vector<Image> images(n + 1);
  for (std::size_t m = 1; m <= n + 1; ++m) {
    std::size_t source = m <= k ? m : m - 1;
    Image v = static_cast<Image>(q(m));
    images[m - 1] = g.images()[source - 1] > 0 ? v : -v;
  }
  if (g.images()[k - 1] < 0) std::swap(images[k - 1], images[k]);
  return SignedPermutation(std::move(images));
}

std::optional<SignedPermutation> signed_unclone(std::size_t k, const SignedPermutation& h) {
  const std::size_t n1 = h.degree();
  if (k < 1 || k + 1 > n1) return std::nullopt;
  const Image a = h.images()[k - 1];
  const Image b = h.images()[k];
  if ((a > 0) != (b > 0)) return std::nullopt;
  std::vector<Permutation::Image> abs_images;
  abs_images.reserve(n1);
  for (Image v : h.images()) abs_images.push_back(static_cast<Permutation::Image>(std::abs(v)));
  if (a < 0) std::swap(abs_images[k - 1], abs_images[k]);
  auto base = sigma_unclone(k, Permutation(std::move(abs_images)));
  if (!base) return std::nullopt;
  std::vector<Image> images = to_signed(*base);
  for (std::size_t m = 1; m <= n1 - 1; ++m) {
    std::size_t source = m <= k ? m : m + 1;
    if (h.images()[source - 1] < 0) images[m - 1] = -images[m - 1];
  }
  SignedPermutation g(std::move(images));
  if (signed_clone(k, g) != h) return std::nullopt;
  return g;
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Image> images = to_signed(p);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << (n - 1 - i))) images[i] = -images[i];
      }
      out.emplace_back(std::move(images));
    }
  }
  return out;
}

}  // namespace clonal
