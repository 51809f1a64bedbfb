#include <random>
#include <set>

#include "doctest.h"
#include "leafsub/errors.hpp"
#include "leafsub/extremal.hpp"
#include "leafsub/newick.hpp"
#include "oracles.hpp"

using namespace leafsub;
using oracle::cherry;
using oracle::leaf;
using oracle::node;

namespace {

std::size_t syntax_offset(std::string_view text) {
  try {
    parse_newick(text);
  } catch (const NewickSyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

std::vector<std::string> leaf_labels(const RootedTree& t) {
  std::vector<std::string> out;
  for (const auto& p : leaves(t)) out.push_back(subtree_at(t, p).label().value_or(""));
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  const RootedTree t = parse_newick("((A,B),C);");
  REQUIRE(t.outdegree() == 2);
  CHECK(t.children()[0].outdegree() == 2);
  CHECK(t.children()[1].label() == std::optional<std::string>("C"));
  CHECK(leaf_labels(t) == std::vector<std::string>{"A", "B", "C"});

  CHECK(canonical_code(parse_newick("((A,B),(C,D));")) == canonical_code(complete_dary(2, 2)));
  CHECK(parse_newick("x;").label() == std::optional<std::string>("x"));
  CHECK(parse_newick(";").is_leaf());
  CHECK_FALSE(parse_newick(";").label());
  CHECK(canonical_code(parse_newick(" ( a , ( b ,c ) ) ;\n")) == canonical_code(binary_caterpillar(3)));
  CHECK(canonical_code(parse_newick("((,),);")) == canonical_code(binary_caterpillar(3)));
  CHECK(leaf_labels(parse_newick("(x_1.a-b,Y9);")) == std::vector<std::string>{"x_1.a-b", "Y9"});
  // a single-child group parses; it is simply not topological
  CHECK_FALSE(is_topological(parse_newick("(A);")));
}

TEST_CASE("syntax errors report byte offsets") {
  CHECK(syntax_offset("((A,B);") == 6);
  CHECK(syntax_offset("();") == 0);
  CHECK(syntax_offset("(A,());") == 3);
  CHECK(syntax_offset("(A,B)") == 5);
  CHECK(syntax_offset("(A,B);x") == 6);
  CHECK(syntax_offset("(A B);") == 3);
  CHECK(syntax_offset("(A,'B');") == 3);
  CHECK(syntax_offset("") == 0);
  try {
    parse_newick("((A,B);");
  } catch (const NewickSyntaxError& e) {
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
}

TEST_CASE("unsupported features") {
  CHECK_THROWS_AS(parse_newick("(:0.1);"), UnsupportedFeature);
  CHECK_THROWS_AS(parse_newick("(A:0.1,B);"), UnsupportedFeature);
  CHECK_THROWS_AS(parse_newick("((A,B)X,C);"), UnsupportedFeature);
  CHECK_THROWS_AS(parse_newick("(A,B):1;"), UnsupportedFeature);
}

TEST_CASE("to_newick") {
  CHECK(to_newick(parse_newick("((A,B),C);")) == "((A,B),C);");
  CHECK(to_newick(RootedTree{}) == ";");
  CHECK(to_newick(RootedTree{}, true) == ";");
  CHECK(to_newick(node({cherry(), leaf()}), true) == to_newick(node({leaf(), cherry()}), true));
  CHECK(to_newick(node({leaf("q"), cherry()}), true) == "((,),);");
}

TEST_CASE("round trip and canonical injectivity over the corpus") {
  std::set<std::string> seen;
  std::size_t classes = 0;
  for (const auto& corpus : generate_corpora(8)) {
    for (const auto& t : corpus.trees) {
      const RootedTree lab = oracle::labeled(t);
      const RootedTree back = parse_newick(to_newick(lab));
      CHECK(isomorphic(back, lab));
      CHECK(leaf_labels(back) == leaf_labels(lab));
      const std::string canon = to_newick(t, true);
      CHECK(isomorphic(parse_newick(canon), t));
      seen.insert(canon);
      ++classes;
    }
  }
  CHECK(seen.size() == classes);
  CHECK(classes == 1 + 1 + 2 + 5 + 12 + 33 + 90 + 261);
}

TEST_CASE("canonical form ignores child order") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const RootedTree t = oracle::random_topological(rng, 1 + rng() % 12);
    CHECK(to_newick(t, true) == to_newick(oracle::shuffled(t, rng), true));
  }
}
