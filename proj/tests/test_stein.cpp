#include <doctest.h>

#include "clonal/instances.hpp"
#include "clonal/stein.hpp"

using namespace clonal;

namespace {

template <CloningSystem S>
std::shared_ptr<const S> shared(S s) {
  return std::make_shared<const S>(std::move(s));
}

Forest random_forest(std::size_t roots, std::size_t leaves, Rng& rng) {
  std::vector<std::size_t> sizes(roots, 1);
  for (std::size_t extra = leaves - roots; extra > 0; --extra) ++sizes[rng() % roots];
  std::vector<Tree> trees;
  for (std::size_t s : sizes) trees.push_back(random_tree(s, rng));
  return Forest(std::move(trees));
}

template <CloningSystem S>
SteinVertex<S> random_vertex(const S& sys, std::size_t max_feet, std::size_t max_leaves, Rng& rng) {
  const std::size_t f = 1 + rng() % max_feet;
  const std::size_t n = f + rng() % (max_leaves - f + 1);
  return {random_tree(n, rng), sys.sample(n, rng), random_forest(f, n, rng)};
}

template <CloningSystem S>
void action_laws(std::shared_ptr<const S> sys, int cases, std::uint64_t seed) {
  CAPTURE(sys->name());
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const auto v = random_vertex(*sys, 3, 6, rng);
    const std::size_t f = feet(v);
    const auto h1 = sys->sample(f, rng);
    const auto h2 = sys->sample(f, rng);
    CHECK(right_action(*sys, v, sys->identity(f)) == v);
    const auto lhs = right_action(*sys, right_action(*sys, v, h1), h2);
    const auto rhs = right_action(*sys, v, sys->multiply(h1, h2));
    CHECK(normalize_vertex(*sys, lhs) == normalize_vertex(*sys, rhs));
    CHECK(feet(lhs) == f);

    const auto x = random_element(sys, 4, rng);
    const auto y = random_element(sys, 4, rng);
    const auto xv = act(x, v);
    CHECK(feet(xv) == f);
    CHECK(normalize_vertex(*sys, act(x, act(y, v))) == normalize_vertex(*sys, act(x * y, v)));
    CHECK(normalize_vertex(*sys, act(ThompsonElement<S>::identity(sys), v)) == normalize_vertex(*sys, v));
    // the two actions commute
    CHECK(normalize_vertex(*sys, act(x, right_action(*sys, v, h1))) ==
          normalize_vertex(*sys, right_action(*sys, xv, h1)));

    const std::size_t k = 1 + rng() % v.e.leaf_count();
    const auto ve = expand_vertex(*sys, v, k);
    CHECK(feet(ve) == f);
    CHECK(reduce_vertex_step(*sys, ve, k) == v);
    CHECK(normalize_vertex(*sys, ve) == normalize_vertex(*sys, v));
    CHECK(vertex_shadow(*sys, ve) == vertex_shadow(*sys, v));
    CHECK(filtration_member(right_action(*sys, v, h1), 2) == filtration_member(v, 2));
  }
}

Tree mirror(const Tree& t) { return t.is_leaf() ? t : Tree::caret(mirror(t.right()), mirror(t.left())); }

}  // namespace

TEST_CASE("feet") {
  const SymmetricSystem sys;
  const SteinVertex<SymmetricSystem> v{parse_tree("((LL)L)"), Permutation::identity(3), Forest::trivial(3)};
  CHECK(feet(v) == 3);
  CHECK(feet(SteinVertex<SymmetricSystem>{v.t, v.g, Forest(v.t)}) == 1);
  CHECK(filtration_member(v, 3));
  CHECK_FALSE(filtration_member(SteinVertex<SymmetricSystem>{parse_tree("((LL)(LL))"), Permutation::identity(4),
                                                             Forest::trivial(4)},
                                3));
  CHECK_THROWS_AS(validate_vertex(sys, SteinVertex<SymmetricSystem>{v.t, Permutation::identity(2), v.e}),
                  std::invalid_argument);
}

TEST_CASE("cloning along a forest") {
  const SymmetricSystem sys;
  const auto [h_up, e] = clone_along_forest(sys, Permutation({2, 1}), parse_forest("(LL)|L"));
  CHECK(h_up == Permutation({3, 1, 2}));
  CHECK(e == parse_forest("L|(LL)"));

  const auto same = clone_along_forest(sys, Permutation({2, 3, 1}), Forest::trivial(3));
  CHECK(same.h_up == Permutation({2, 3, 1}));
  CHECK(same.e == Forest::trivial(3));

  const TrivialSystem triv;
  const auto t = clone_along_forest(triv, TrivialElement{2}, parse_forest("(LL)|(L(LL))"));
  CHECK(t.e == parse_forest("(LL)|(L(LL))"));
  CHECK(t.h_up.rank == 5);
  CHECK_THROWS_AS(clone_along_forest(sys, Permutation::identity(3), parse_forest("(LL)|L")), std::invalid_argument);
}

TEST_CASE("right action on a trivial forest multiplies") {
  const SignedSystem sys;
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = sys.sample(3, rng), h = sys.sample(3, rng);
    const SteinVertex<SignedSystem> v{parse_tree("(L(LL))"), g, Forest::trivial(3)};
    CHECK(right_action(sys, v, h) == SteinVertex<SignedSystem>{v.t, g * h, Forest::trivial(3)});
  }
}

TEST_CASE("moved forests") {
  // position i of E' holds tree rho(h)(i) of E, mirrored when arrow i is negative
  const SignedSystem sgn;
  const SymmetricSystem sym;
  const MatrixSystem mat;
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::size_t f = 1 + rng() % 3;
    const Forest e = random_forest(f, f + rng() % 4, rng);
    const auto h = sgn.sample(f, rng);
    const Permutation p = signed_rho(h);
    std::vector<Tree> plain, signed_trees;
    for (std::size_t j = 1; j <= f; ++j) {
      const Tree& src = e.trees()[p(j) - 1];
      plain.push_back(src);
      signed_trees.push_back(h(static_cast<int>(j)) < 0 ? mirror(src) : src);
    }
    CAPTURE(print_signed(h));
    CAPTURE(print_forest(e));
    CHECK(clone_along_forest(sym, p, e).e == Forest(plain));
    CHECK(clone_along_forest(sgn, h, e).e == Forest(signed_trees));
    const auto m = mat.sample(f, rng);
    const auto mat_up = clone_along_forest(mat, m, e);
    CHECK(mat_up.e == e);
    CHECK(mat.rho(mat_up.h_up).is_identity());
  }
}

TEST_CASE("action laws") {
  action_laws(shared(TrivialSystem{}), 500, 1);
  action_laws(shared(SymmetricSystem{}), 500, 2);
  action_laws(shared(SignedSystem{}), 500, 3);
  action_laws(shared(CyclicPowerSystem(CyclicGroup(6))), 500, 4);
  action_laws(shared(S3PowerSystem(S3Group(true))), 500, 5);
  action_laws(shared(MatrixSystem{}), 300, 6);
}

TEST_CASE("cubes") {
  using Vx = SteinVertex<TrivialSystem>;
  Rng rng(0);
  const auto trivial_vertex = [&](std::size_t f) { return Vx{random_tree(f, rng), {f}, Forest::trivial(f)}; };
  using Cubes = std::vector<std::vector<std::size_t>>;
  CHECK(cubes_from(trivial_vertex(1), 1).empty());
  CHECK(cubes_from(trivial_vertex(3), 1) == Cubes{{1}, {2}});
  CHECK(cubes_from(trivial_vertex(3), 2).empty());
  CHECK(cubes_from(trivial_vertex(4), 2) == Cubes{{1, 3}});
  CHECK(cubes_from(trivial_vertex(5), 2) == Cubes{{1, 3}, {1, 4}, {2, 4}});
  CHECK(cubes_from(trivial_vertex(6), 3) == Cubes{{1, 3, 5}});
  CHECK_THROWS_AS(cubes_from(trivial_vertex(3), 0), std::invalid_argument);
  CHECK(apply_merges(Forest::trivial(4), {1, 3}) == parse_forest("(LL)|(LL)"));
  CHECK(apply_merges(Forest::trivial(3), {2}) == parse_forest("L|(LL)"));

  // counts are binomial(f - d, d)
  const std::size_t binom[9][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1},
                                   {1, 5, 10, 10, 5}, {1, 6, 15, 20, 15}, {1, 7, 21, 35, 35}, {1, 8, 28, 56, 70}};
  for (std::size_t f = 1; f <= 8; ++f) {
    for (std::size_t d = 1; 2 * d <= f + 1 && d <= 4; ++d) {
      CHECK(cubes_from(trivial_vertex(f), d).size() == (f >= d ? binom[f - d][d] : 0));
    }
  }
}

TEST_CASE("stabilizer probe over S_3") {
  const auto sys = shared(SymmetricSystem{});
  for (const char* text : {"((LL)L)", "(L(LL))"}) {
    const Tree t = parse_tree(text);
    for (const auto& g : all_permutations(3)) {
      const auto x = embed_group(sys, g, t);
      const SteinVertex<SymmetricSystem> v{t, Permutation::identity(3), Forest::trivial(3)};
      const auto r = stabilizer_probe(x, v, 1);
      CAPTURE(print_permutation(g));
      CHECK(r.verdict == ProbeVerdict::Fixes);
      CHECK(act(x, v) == right_action(*sys, v, g));
    }
  }
}

TEST_CASE("stabilizer probe over signed S_2") {
  const auto sys = shared(SignedSystem{});
  const Tree t = parse_tree("(LL)");
  for (const auto& g : all_signed_permutations(2)) {
    const auto x = embed_group(sys, g, t);
    const SteinVertex<SignedSystem> v{t, SignedPermutation::identity(2), Forest::trivial(2)};
    CHECK(stabilizer_probe(x, v, 1).verdict == ProbeVerdict::Fixes);
  }
}

TEST_CASE("stabilizer probe verdicts") {
  const auto sys = shared(TrivialSystem{});
  const SteinVertex<TrivialSystem> v{parse_tree("(L(LL))"), {3}, parse_forest("(L(LL))")};
  CHECK(stabilizer_probe(ThompsonElement<TrivialSystem>::identity(sys), v, 0).verdict == ProbeVerdict::Fixes);
  const auto x0 = embed_F(sys, parse_tree("((LL)L)"), parse_tree("(L(LL))"));
  CHECK(stabilizer_probe(x0, v, 2).verdict == ProbeVerdict::Moves);
  CHECK(std::string(to_string(ProbeVerdict::Unknown)) == "unknown");

  // "moves" is only reported with a differing shadow
  const auto sym = shared(SymmetricSystem{});
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_element(sym, 4, rng);
    const auto w = random_vertex(*sym, 3, 5, rng);
    const auto r = stabilizer_probe(x, w, 1);
    if (r.verdict == ProbeVerdict::Moves) CHECK(vertex_shadow(*sym, w) != vertex_shadow(*sym, act(x, w)));
    if (r.verdict == ProbeVerdict::Fixes) CHECK(vertex_shadow(*sym, w) == vertex_shadow(*sym, act(x, w)));
  }
}
