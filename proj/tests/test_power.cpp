#include <doctest.h>

#include "clonal/errors.hpp"
#include "clonal/instances.hpp"
#include "clonal/thompson.hpp"

using namespace clonal;

namespace {

using Z = CyclicPowerSystem;

Z::Element tup(std::vector<std::uint32_t> v) { return {std::move(v)}; }

}  // namespace

TEST_CASE("cyclic base groups") {
  CHECK(CyclicGroup(5).name() == "z5");
  CHECK(CyclicGroup(5, 1, 2).name() == "z5:twist=1,2");
  CHECK_THROWS_AS(CyclicGroup(6, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(CyclicGroup(0), std::invalid_argument);
  const CyclicGroup z(5, 1, 2);
  CHECK(z.phi2(3) == 1);
  CHECK(z.phi2_preimage(4) == 2u);
  CHECK(z.elements().size() == 5);
}

TEST_CASE("untwisted cloning copies the entry") {
  const Z sys{CyclicGroup(5)};
  CHECK(sys.clone(tup({2, 3}), 1) == tup({2, 2, 3}));
  CHECK(sys.clone(tup({2, 3}), 2) == tup({2, 3, 3}));
  CHECK(sys.try_unclone(tup({2, 2, 3}), 1) == tup({2, 3}));
  CHECK_FALSE(sys.try_unclone(tup({2, 4, 3}), 1));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(sys.clone(sys.identity(3), k) == sys.identity(4));
}

TEST_CASE("twisted cloning doubles the second copy") {
  const Z sys{CyclicGroup(5, 1, 2)};
  CHECK(sys.clone(tup({2, 3}), 1) == tup({2, 4, 3}));
  CHECK(sys.try_unclone(tup({2, 4, 3}), 1) == tup({2, 3}));
  CHECK_FALSE(sys.try_unclone(tup({2, 2, 3}), 1));
  CHECK(sys.clone(sys.identity(2), 2) == sys.identity(3));
}

TEST_CASE("s3 base") {
  const S3PowerSystem plain{S3Group(false)};
  const S3PowerSystem twisted{S3Group(true)};
  const Permutation c = parse_permutation("[2,3,1]");
  S3PowerSystem::Element g{{c}};
  CHECK(plain.clone(g, 1).entries == std::vector<Permutation>{c, c});
  const Permutation t = Permutation::transposition(3, 1, 2);
  CHECK(twisted.clone(g, 1).entries == std::vector<Permutation>{c, t * c * t});
  CHECK(twisted.try_unclone(twisted.clone(g, 1), 1) == g);
  CHECK(plain.order(2) == 36);
}

TEST_CASE("embedding and restriction") {
  const Z sys{CyclicGroup(6)};
  CHECK(sys.iota(tup({1, 5}), 4) == tup({1, 5, 0, 0}));
  CHECK(sys.try_restrict(tup({1, 5, 0})) == tup({1, 5}));
  CHECK_FALSE(sys.try_restrict(tup({1, 5})));
  CHECK(sys.rho(tup({1, 5})).is_identity());
}

TEST_CASE("enumeration and text") {
  const Z sys{CyclicGroup(3)};
  const auto all = sys.enumerate(2);
  CHECK(all.size() == 9);
  CHECK(all.front() == tup({0, 0}));
  CHECK(all[1] == tup({0, 1}));
  CHECK(all.back() == tup({2, 2}));
  CHECK(sys.format(tup({2, 1})) == "(2,1)");
  CHECK(sys.parse("(2, 1)", 2) == tup({2, 1}));
  CHECK_THROWS_AS(sys.parse("(2,1)", 3), ParseError);
  CHECK_THROWS_AS(sys.parse("(2,x)", 2), ParseError);
  CHECK(sys.from_json(Json::array({1, 2}), 2) == tup({1, 2}));
}

TEST_CASE("retract to the base group") {
  const auto sys = std::make_shared<const Z>(CyclicGroup(6));
  for (std::uint32_t g = 0; g < 6; ++g) CHECK(retract_eval(retract_inject(sys, g)) == g);

  const Tree t = parse_tree("(LL)");
  ThompsonElement<Z> x(sys, {t, tup({4, 1}), t});
  CHECK(retract_eval(x) == 4);

  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(sys, 6, rng);
    const auto b = random_element(sys, 6, rng);
    CHECK(retract_eval(a * b) == sys->base().multiply(retract_eval(a), retract_eval(b)));
  }
}

TEST_CASE("first entry survives expansion") {
  for (const auto& base : {CyclicGroup(6), CyclicGroup(5, 1, 2)}) {
    const Z sys{base};
    Rng rng(29);
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 1 + rng() % 5;
      Triple<Z> t{random_tree(n, rng), sys.sample(n, rng), random_tree(n, rng)};
      const auto first = t.g.entries.front();
      for (int step = 0; step < 4; ++step) t = expand(sys, t, 1 + rng() % t.plus.leaf_count());
      CHECK(t.g.entries.front() == first);
      CHECK(normal_form(sys, t).g.entries.front() == first);
    }
  }
}
