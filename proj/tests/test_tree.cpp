#include <random>

#include "doctest.h"
#include "leafsub/errors.hpp"
#include "leafsub/tree.hpp"
#include "oracles.hpp"

using namespace leafsub;
using oracle::cherry;
using oracle::leaf;
using oracle::node;

TEST_CASE("is_topological") {
  CHECK(is_topological(RootedTree{}));
  CHECK_FALSE(is_topological(node({cherry()})));
  CHECK(is_topological(complete_dary(2, 2)));
  CHECK_FALSE(is_topological(node({leaf(), node({cherry()})})));
}

TEST_CASE("canonical_code ignores child order and labels") {
  CHECK(canonical_code(node({leaf("a"), leaf("b")})) == canonical_code(node({leaf("b"), leaf("a")})));
  CHECK(canonical_code(node({leaf(), cherry()})) == canonical_code(node({cherry(), leaf()})));
  CHECK(canonical_code(star(3)) != canonical_code(binary_caterpillar(3)));

  const CanonicalCode c = canonical_code(node({leaf(), cherry()}));
  CHECK(c.code == "((()())())");
  CHECK(c.leaf_count == 3);
  CHECK(c.height == 2);
  CHECK(canonical_code(RootedTree{}) == single_vertex_code());
}

TEST_CASE("canonical_code agrees with backtracking isomorphism") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const RootedTree a = oracle::random_topological(rng, n);
    const RootedTree b = oracle::random_topological(rng, n);
    const RootedTree a2 = oracle::shuffled(a, rng);
    CHECK(canonical_code(a) == canonical_code(a2));
    CHECK((canonical_code(a) == canonical_code(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("tree_from_code round trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const RootedTree t = oracle::random_topological(rng, 1 + rng() % 12);
    const CanonicalCode c = canonical_code(t);
    CHECK(canonical_code(tree_from_code(c.code)) == c);
  }
  CHECK_THROWS_AS(tree_from_code("(()"), InvalidArgument);
  CHECK_THROWS_AS(tree_from_code("()()"), InvalidArgument);
  CHECK_THROWS_AS(tree_from_code(""), InvalidArgument);
}

TEST_CASE("star") {
  CHECK(star(1).is_leaf());
  CHECK(star(2).outdegree() == 2);
  const RootedTree s4 = star(4);
  CHECK(s4.outdegree() == 4);
  for (const auto& c : s4.children()) CHECK(c.is_leaf());
  CHECK_THROWS_AS(star(0), InvalidArgument);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(canonical_code(star(n)) == canonical_code(complete_dary(long(n), 1)));
}

TEST_CASE("binary_caterpillar") {
  CHECK(binary_caterpillar(1).is_leaf());
  CHECK(canonical_code(binary_caterpillar(2)) == canonical_code(cherry()));
  CHECK(canonical_code(binary_caterpillar(3)) == canonical_code(node({leaf(), cherry()})));
  const RootedTree f5 = binary_caterpillar(5);
  CHECK(height(f5) == 4);
  CHECK(leaf_count(f5) == 5);
  CHECK(is_topological(f5));
  CHECK_THROWS_AS(binary_caterpillar(0), InvalidArgument);
}

TEST_CASE("dary_caterpillar") {
  const RootedTree f = dary_caterpillar(3, 7);
  CHECK(height(f) == 3);
  CHECK(leaf_count(f) == 7);
  // Each level: two leaves then the internal child; the deepest has three leaves.
  const RootedTree* v = &f;
  for (int level = 0; level < 2; ++level) {
    REQUIRE(v->outdegree() == 3);
    CHECK(v->children()[0].is_leaf());
    CHECK(v->children()[1].is_leaf());
    v = &v->children()[2];
  }
  CHECK(canonical_code(*v) == canonical_code(star(3)));

  CHECK(canonical_code(dary_caterpillar(3, 3)) == canonical_code(star(3)));
  CHECK_THROWS_AS(dary_caterpillar(3, 6), InvalidArgument);
  CHECK_THROWS_AS(dary_caterpillar(1, 3), InvalidArgument);
  CHECK(dary_caterpillar(4, 1).is_leaf());

  for (long d = 2; d <= 5; ++d) {
    for (long h = 0; h <= 6; ++h) {
      const RootedTree t = dary_caterpillar(d, 1 + h * (d - 1));
      CHECK(leaf_count(t) == std::size_t(1 + h * (d - 1)));
      CHECK(height(t) == std::size_t(h));
      CHECK(is_topological(t));
    }
  }
}

TEST_CASE("complete_dary") {
  const RootedTree c = complete_dary(3, 2);
  CHECK(leaf_count(c) == 9);
  CHECK(c.outdegree() == 3);
  for (const auto& k : c.children()) CHECK(canonical_code(k) == canonical_code(star(3)));
  CHECK(complete_dary(2, 0).is_leaf());
  CHECK(leaf_count(complete_dary(2, 3)) == 8);
  CHECK(vertex_count(complete_dary(2, 3)) == 15);
  CHECK_THROWS_AS(complete_dary(1, 2), InvalidArgument);
  CHECK_THROWS_AS(complete_dary(2, 40), ResourceLimit);
  for (long d = 2; d <= 4; ++d)
    for (long h = 0; h <= 4; ++h) CHECK(is_topological(complete_dary(d, h)));
}

TEST_CASE("structural accessors") {
  CHECK(height(RootedTree{}) == 0);
  CHECK(leaf_count(RootedTree{}) == 1);
  const auto pos = leaves(node({cherry(), leaf()}));
  REQUIRE(pos.size() == 3);
  CHECK(pos[0] == LeafPosition{0, 0});
  CHECK(pos[1] == LeafPosition{0, 1});
  CHECK(pos[2] == LeafPosition{1});
  CHECK(leaves(RootedTree{}) == std::vector<LeafPosition>{LeafPosition{}});
  CHECK_THROWS_AS(subtree_at(cherry(), {5}), InvalidArgument);
}
