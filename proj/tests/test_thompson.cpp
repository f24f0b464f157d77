#include <doctest.h>

#include "clonal/errors.hpp"
#include "clonal/instances.hpp"
#include "clonal/thompson.hpp"

using namespace clonal;

namespace {

using V = ThompsonElement<SymmetricSystem>;

V velem(const char* minus, std::vector<Permutation::Image> g, const char* plus) {
  return V(symmetric_system(), {parse_tree(minus), Permutation(std::move(g)), parse_tree(plus)});
}

// Elements of V act on infinite binary sequences: find the leaf of T+ whose
// address starts w, replace that prefix by the address of its image leaf in
// T-. Sequences here are long enough for every tree that occurs.
std::string apply_v(const V& x, const std::string& w) {
  const auto plus = x.plus().leaf_addresses();
  const auto minus = x.minus().leaf_addresses();
  for (std::size_t i = 1; i <= plus.size(); ++i) {
    if (w.compare(0, plus[i - 1].size(), plus[i - 1]) == 0) {
      return minus[x.g()(i) - 1] + w.substr(plus[i - 1].size());
    }
  }
  FAIL("no leaf address is a prefix of the sequence");
  return {};
}

std::string random_bits(Rng& rng, std::size_t len = 96) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng() & 1 ? '1' : '0');
  return s;
}

template <CloningSystem S>
std::shared_ptr<const S> shared(S s) {
  return std::make_shared<const S>(std::move(s));
}

template <CloningSystem S>
void group_laws(std::shared_ptr<const S> sys, int cases, std::uint64_t seed) {
  CAPTURE(sys->name());
  Rng rng(seed);
  const auto one = ThompsonElement<S>::identity(sys);
  for (int i = 0; i < cases; ++i) {
    const auto a = random_element(sys, 6, rng);
    const auto b = random_element(sys, 6, rng);
    const auto c = random_element(sys, 6, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(a.equals_fast(b) == a.equals_by_inverse(b));
  }
}

template <CloningSystem S>
void expansion_and_confluence(std::shared_ptr<const S> sys, int cases, std::uint64_t seed) {
  CAPTURE(sys->name());
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const auto x = random_element(sys, 6, rng);
    const std::size_t k = 1 + rng() % x.leaf_count();
    const Triple<S> e = expand(*sys, x.rep(), k);
    CHECK(reduce_step(*sys, e, k) == x.rep());
    CHECK(normal_form(*sys, e) == x.rep());

    Triple<S> t = x.rep();
    const int steps = static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) t = expand(*sys, t, 1 + rng() % t.plus.leaf_count());
    const auto smallest = normal_form(*sys, t, ReductionOrder::SmallestFirst);
    CHECK(smallest == x.rep());
    CHECK(normal_form(*sys, t, ReductionOrder::LargestFirst) == smallest);
    CHECK(normal_form(*sys, t, ReductionOrder::Random, &rng) == smallest);
    CHECK(normal_form(*sys, smallest) == smallest);
  }
}

template <CloningSystem S>
bool projection_multiplicative(std::shared_ptr<const S> sys, int cases, std::uint64_t seed) {
  Rng rng(seed);
  bool all = true;
  for (int i = 0; i < cases; ++i) {
    const auto x = random_element(sys, 5, rng);
    const auto y = random_element(sys, 5, rng);
    all = all && project_to_V(x * y) == project_to_V(x) * project_to_V(y);
  }
  return all;
}

}  // namespace

TEST_CASE("multiplying two elements of V") {
  const V x = velem("(LL)", {2, 1}, "(LL)");
  const V y = velem("(L(LL))", {1, 2, 3}, "((LL)L)");
  const Triple<SymmetricSystem> xe = expand_plus_to(*symmetric_system(), x.rep(), parse_tree("(L(LL))"));
  CHECK(xe == Triple<SymmetricSystem>{parse_tree("((LL)L)"), Permutation({3, 1, 2}), parse_tree("(L(LL))")});
  CHECK(expand(*symmetric_system(), x.rep(), 2) == xe);
  const V xy = x * y;
  CHECK(xy.rep() == Triple<SymmetricSystem>{parse_tree("((LL)L)"), Permutation({3, 1, 2}), parse_tree("((LL)L)")});
  CHECK(xy == velem("((LL)L)", {3, 1, 2}, "((LL)L)"));
  CHECK((xy.inverse() * xy).is_identity());
  CHECK_FALSE(x == V::identity(symmetric_system()));
}

TEST_CASE("expanding a matrix triple") {
  const MatrixSystem sys;
  const Triple<MatrixSystem> t{parse_tree("((LL)L)"), parse_matrix("[[1,2,3],[0,4,5],[0,0,6]]"), parse_tree("(L(LL))")};
  const Triple<MatrixSystem> e{parse_tree("((L(LL))L)"), parse_matrix("[[1,2,2,3],[0,4,0,0],[0,0,4,5],[0,0,0,6]]"),
                               parse_tree("(L((LL)L))")};
  CHECK(expand(sys, t, 2) == e);
  CHECK(reduce_step(sys, e, 2) == t);
  CHECK(normal_form(sys, e) == t);
}

TEST_CASE("trivial instance") {
  const auto sys = shared(TrivialSystem{});
  const Triple<TrivialSystem> t{parse_tree("(LL)"), {2}, parse_tree("(LL)")};
  CHECK(normal_form(*sys, t) == identity_triple(*sys));
  CHECK(expand(*sys, t, 2) == Triple<TrivialSystem>{parse_tree("(L(LL))"), {3}, parse_tree("(L(LL))")});
  const auto x0 = embed_F(sys, parse_tree("((LL)L)"), parse_tree("(L(LL))"));
  CHECK_FALSE(x0.is_identity());
  CHECK(embed_F(sys, parse_tree("((LL)L)"), parse_tree("((LL)L)")).is_identity());
}

TEST_CASE("irreducible transposition") {
  const auto& sys = *symmetric_system();
  const Triple<SymmetricSystem> t{parse_tree("(LL)"), Permutation({2, 1}), parse_tree("(LL)")};
  CHECK(reducible_indices(sys, t).empty());
  CHECK(normal_form(sys, t) == t);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(V(symmetric_system(), {parse_tree("(LL)"), Permutation::identity(3), parse_tree("(LL)")}),
                  std::invalid_argument);
  const auto z = shared(CyclicPowerSystem(CyclicGroup(6)));
  const auto z6b = shared(CyclicPowerSystem(CyclicGroup(6)));
  Rng rng(1);
  const auto a = random_element(z, 3, rng);
  const auto b = ThompsonElement<CyclicPowerSystem>::identity(z6b);
  CHECK_NOTHROW(a * b);
  const auto z5 = shared(CyclicPowerSystem(CyclicGroup(5)));
  CHECK_THROWS_AS(a * ThompsonElement<CyclicPowerSystem>::identity(z5), InstanceMismatch);
}

TEST_CASE("products agree with the action on sequences") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const V x = random_element(symmetric_system(), 7, rng);
    const V y = random_element(symmetric_system(), 7, rng);
    const V xy = x * y;
    const V xi = x.inverse();
    for (int j = 0; j < 8; ++j) {
      const std::string w = random_bits(rng);
      CHECK(apply_v(xy, w) == apply_v(x, apply_v(y, w)));
      CHECK(apply_v(xi, apply_v(x, w)) == w);
    }
  }
}

TEST_CASE("equal actions mean equal elements") {
  // V acts faithfully, so equality of reduced forms must match equality of
  // the maps on a dense enough sample of sequences
  Rng rng(43);
  int equal_pairs = 0;
  for (int i = 0; i < 3000; ++i) {
    const V x = random_element(symmetric_system(), 3, rng);
    const V y = random_element(symmetric_system(), 3, rng);
    bool same_map = true;
    for (std::size_t bits = 0; bits < 64; ++bits) {
      std::string w;
      for (int b = 5; b >= 0; --b) w.push_back((bits >> b) & 1 ? '1' : '0');
      w += "0101010101";
      same_map = same_map && apply_v(x, w) == apply_v(y, w);
    }
    CHECK((x == y) == same_map);
    equal_pairs += x == y;
  }
  CHECK(equal_pairs > 0);
}

TEST_CASE("group laws") {
  group_laws(shared(TrivialSystem{}), 300, 1);
  group_laws(shared(SymmetricSystem{}), 300, 2);
  group_laws(shared(SignedSystem{}), 300, 3);
  group_laws(shared(CyclicPowerSystem(CyclicGroup(6))), 300, 4);
  group_laws(shared(CyclicPowerSystem(CyclicGroup(5, 1, 2))), 300, 5);
  group_laws(shared(S3PowerSystem(S3Group(true))), 300, 6);
  group_laws(shared(MatrixSystem{}), 200, 7);
}

TEST_CASE("expansion invariance and confluence") {
  expansion_and_confluence(shared(TrivialSystem{}), 1000, 11);
  expansion_and_confluence(shared(SymmetricSystem{}), 1000, 12);
  expansion_and_confluence(shared(SignedSystem{}), 1000, 13);
  expansion_and_confluence(shared(CyclicPowerSystem(CyclicGroup(6))), 1000, 14);
  expansion_and_confluence(shared(S3PowerSystem(S3Group(true))), 1000, 15);
  expansion_and_confluence(shared(MatrixSystem{}), 500, 16);
}

TEST_CASE("embedding the groups") {
  const auto sys = symmetric_system();
  const Tree t = parse_tree("((LL)L)");
  CHECK(embed_group(sys, Permutation::identity(3), t).is_identity());
  const auto all = all_permutations(3);
  for (const auto& g : all) {
    for (const auto& h : all) CHECK(embed_group(sys, g * h, t) == embed_group(sys, g, t) * embed_group(sys, h, t));
    CHECK(embed_group(sys, g, t).inverse() == embed_group(sys, g.inverse(), t));
  }
  CHECK_THROWS_AS(embed_group(sys, Permutation::identity(2), t), std::invalid_argument);

  const auto sgn = shared(SignedSystem{});
  const Tree two = parse_tree("(LL)");
  const auto s2 = all_signed_permutations(2);
  for (const auto& g : s2) {
    for (const auto& h : s2) CHECK((embed_group(sgn, g, two) == embed_group(sgn, h, two)) == (g == h));
  }
}

TEST_CASE("pure instances stay in F") {
  Rng rng(51);
  const auto mat = shared(MatrixSystem{});
  for (int i = 0; i < 200; ++i) {
    auto x = embed_F(mat, random_tree(4, rng), random_tree(4, rng));
    const auto y = embed_F(mat, random_tree(3, rng), random_tree(3, rng));
    x = x * y * x.inverse();
    CHECK(x.g() == UTMatrix::identity(x.leaf_count()));
    CHECK(project_to_V(random_element(mat, 5, rng)).g().is_identity());
  }
}

TEST_CASE("projection to V") {
  const auto sgn = shared(SignedSystem{});
  const Tree t = parse_tree("(L(LL))");
  CHECK(project_to_V(embed_group(sgn, SignedPermutation::generator(3, 3), t)).is_identity());
  CHECK(kernel_test(embed_group(sgn, SignedPermutation::generator(3, 3), t)));
  CHECK_FALSE(kernel_test(embed_F(sgn, parse_tree("((LL)L)"), t)));
  CHECK(kernel_test(ThompsonElement<SignedSystem>::identity(sgn)));

  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const V x = random_element(symmetric_system(), 6, rng);
    CHECK(project_to_V(x) == x);
  }
  CHECK(projection_multiplicative(shared(TrivialSystem{}), 1000, 61));
  CHECK(projection_multiplicative(shared(SymmetricSystem{}), 1000, 62));
  CHECK(projection_multiplicative(shared(CyclicPowerSystem(CyclicGroup(6))), 1000, 63));
  CHECK(projection_multiplicative(shared(MatrixSystem{}), 300, 64));
}

TEST_CASE("projection of the signed instance is not multiplicative") {
  // The crossed clones of a negative arrow are invisible to the reduced
  // triple but not to its projection: x projects to the identity while
  // x*y does not project to y.
  const auto sgn = shared(SignedSystem{});
  const ThompsonElement<SignedSystem> x(sgn, {Tree(), SignedPermutation::generator(1, 1), Tree()});
  const ThompsonElement<SignedSystem> y(sgn, {parse_tree("(L(LL))"), SignedPermutation::identity(3), parse_tree("((LL)L)")});
  CHECK(project_to_V(x).is_identity());
  const V pxy = project_to_V(x * y);
  CHECK(pxy == velem("((LL)L)", {3, 2, 1}, "((LL)L)"));
  CHECK_FALSE(pxy == project_to_V(y));
  CHECK_FALSE(projection_multiplicative(sgn, 1000, 65));
}
