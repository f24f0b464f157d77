#include <doctest.h>

#include <set>

#include "clonal/errors.hpp"
#include "clonal/permutation.hpp"

using namespace clonal;

namespace {

Permutation perm(std::vector<Permutation::Image> v) { return Permutation(std::move(v)); }

// Cloning by drawing arrows: split source k into k, k+1 and target g(k)
// into g(k), g(k)+1, keep the two new arrows parallel and shift everything
// else past the split.
Permutation split_arrow(std::size_t k, const Permutation& g) {
  const std::size_t n = g.degree();
  const std::size_t t = g(k);
  std::vector<Permutation::Image> out(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t src = i <= k ? i : i + 1;
    const std::size_t dst = g(i) <= t ? g(i) : g(i) + 1;
    out[src - 1] = static_cast<Permutation::Image>(dst);
  }
  out[k] = static_cast<Permutation::Image>(t + 1);
  return perm(out);
}

}  // namespace

TEST_CASE("composition is right to left") {
  const Permutation g = perm({2, 3, 1});
  const Permutation h = perm({2, 1, 3});
  const Permutation gh = g * h;
  for (std::size_t i = 1; i <= 3; ++i) CHECK(gh(i) == g(h(i)));
  CHECK(g * g.inverse() == Permutation::identity(3));
  CHECK(Permutation::transposition(4, 2, 3) == perm({1, 3, 2, 4}));
}

TEST_CASE("invalid permutations") {
  CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,2"), ParseError);
  CHECK(parse_permutation("[3,1,2]") == perm({3, 1, 2}));
  CHECK(print_permutation(perm({3, 1, 2})) == "[3,1,2]");
}

TEST_CASE("cloning the transposition at its second arrow") {
  const Permutation c = sigma_clone(2, perm({2, 1}));
  CHECK(c == perm({3, 1, 2}));
  CHECK(c(1) == 3);
  CHECK(c(3) == 2);
}

TEST_CASE("cloning matches arrow splitting") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_permutations(n)) {
      for (std::size_t k = 1; k <= n; ++k) CHECK(sigma_clone(k, g) == split_arrow(k, g));
    }
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) CHECK(sigma_clone(k, Permutation::identity(n)) == Permutation::identity(n + 1));
  }
  CHECK_THROWS_AS(sigma_clone(3, perm({2, 1})), std::out_of_range);
}

TEST_CASE("cloning identities") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& g : all) {
      for (const auto& h : all) {
        for (std::size_t k = 1; k <= n; ++k) {
          CHECK(sigma_clone(k, g * h) == sigma_clone(h(k), g) * sigma_clone(k, h));
        }
      }
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
          CHECK(sigma_clone(k, sigma_clone(l, g)) == sigma_clone(l + 1, sigma_clone(k, g)));
        }
      }
    }
  }
}

TEST_CASE("cloning is injective") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<Permutation> images;
      const auto all = all_permutations(n);
      for (const auto& g : all) images.insert(sigma_clone(k, g));
      CHECK(images.size() == all.size());
    }
  }
}

TEST_CASE("uncloning against search") {
  CHECK(sigma_unclone(2, perm({3, 1, 2})) == perm({2, 1}));
  CHECK_FALSE(sigma_unclone(1, perm({3, 1, 2})));
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto lower = all_permutations(n - 1);
    for (const auto& h : all_permutations(n)) {
      for (std::size_t k = 1; k < n; ++k) {
        std::optional<Permutation> found;
        for (const auto& g : lower) {
          if (sigma_clone(k, g) == h) found = g;
        }
        CHECK(sigma_unclone(k, h) == found);
      }
    }
  }
}

TEST_CASE("extension and restriction") {
  CHECK(extend(perm({2, 1}), 4) == perm({2, 1, 3, 4}));
  CHECK(restrict_top(perm({2, 1, 3})) == perm({2, 1}));
  CHECK_FALSE(restrict_top(perm({1, 3, 2})));
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(3).front() == Permutation::identity(3));
}
