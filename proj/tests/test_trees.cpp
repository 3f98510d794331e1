#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "parb/error.hpp"
#include "parb/trees.hpp"
#include "support.hpp"

using namespace parb;

namespace {

ParenWord pw(const char* s) { return parse_paren(s); }

std::vector<ParenWord> words_up_to(int n) {
  std::vector<ParenWord> out;
  for (int k = 1; k <= n; ++k) {
    auto w = all_paren_words(k);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// Leaf sequence of s with entry i replaced by the shifted block of t.
std::vector<int> substitute_sequence(const std::vector<int>& s, const std::vector<int>& t, int i) {
  std::vector<int> out;
  int m = static_cast<int>(t.size());
  for (int v : s) {
    if (v == i) {
      for (int u : t) out.push_back(u + i - 1);
    } else {
      out.push_back(v > i ? v + m - 1 : v);
    }
  }
  return out;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<ExtendedPermutation> all_extended(int n) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<ExtendedPermutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("paren word text") {
  CHECK(pw("((1 2) 3)").compact() == "(12)3");
  CHECK(pw("(3 (1 2))").compact() == "3(12)");
  CHECK(pw("((1 2) 3)").str() == "((1 2) 3)");
  CHECK(pw("1").is_leaf());
  for (const auto& p : words_up_to(4)) CHECK(parse_paren(p.str()) == p);
  CHECK_THROWS_AS(parse_paren("((1 2) 2)"), ParseError);
  CHECK_THROWS_AS(parse_paren("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_paren("(1 2) 3"), ParseError);
}

TEST_CASE("grafting") {
  CHECK(graft(pw("(1 2)"), pw("(1 2)"), 2) == pw("(1 (2 3))"));
  CHECK(graft(pw("(1 2)"), pw("(1 2)"), 1) == pw("((1 2) 3)"));
  for (const auto& t : words_up_to(3)) CHECK(graft(ParenWord::leaf(), t, 1) == t);
  for (const auto& s : words_up_to(3))
    for (int i = 1; i <= s.size(); ++i) CHECK(graft(s, ParenWord::leaf(), i) == s);
  CHECK_THROWS_AS(graft(pw("(1 2)"), pw("1"), 3), MalformedInput);
}

TEST_CASE("grafting is associative and equivariant") {
  auto small = words_up_to(3);
  for (const auto& s : words_up_to(4))
    for (const auto& t : small)
      for (const auto& u : small)
        for (int i = 1; i <= s.size(); ++i) {
          for (int j = 1; j <= t.size(); ++j)
            REQUIRE(graft(graft(s, t, i), u, i + j - 1) == graft(s, graft(t, u, j), i));
          for (int j = i + 1; j <= s.size(); ++j)
            REQUIRE(graft(graft(s, t, i), u, j + t.size() - 1) == graft(graft(s, u, j), t, i));
        }
  for (const auto& s : words_up_to(3))
    for (const auto& t : words_up_to(3))
      for (const auto& sigma : all_perms(s.size()))
        for (const auto& tau : all_perms(t.size()))
          for (int i = 1; i <= s.size(); ++i)
            REQUIRE(relabel(graft(s, t, i), block_relabelling(sigma, tau, i)) ==
                    graft(relabel(s, sigma), relabel(t, tau), sigma(i)));
}

TEST_CASE("forgetting parentheses") {
  CHECK(forget_parens(pw("(1 (2 3))")).one_line() == "123");
  CHECK(forget_parens(pw("(3 (1 2))")).one_line() == "312");
  std::mt19937_64 rng(4);
  auto words = words_up_to(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& s = words[rng() % words.size()];
    const auto& t = words[rng() % words.size()];
    int i = testing::draw(rng, 1, s.size());
    CHECK(forget_parens(graft(s, t, i)).images() == substitute_sequence(s.leaves(), t.leaves(), i));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  std::size_t fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= static_cast<std::size_t>(n);
    auto words = all_paren_words(n);
    CHECK(all_shapes(n).size() == catalan(n - 1));
    CHECK(words.size() == catalan(n - 1) * fact);
    CHECK(std::set<ParenWord>(words.begin(), words.end()).size() == words.size());
  }
}

TEST_CASE("unrooting and rerooting") {
  UnrootedTree t = unroot(pw("(1 2)"));
  CHECK(t.boundary_size() == 3);
  CHECK(t.vertex_count() == 1);
  CHECK(t.arity(1) == 3);
  CHECK(unroot(pw("((1 2) 3)")).internal_edge_count() == 1);
  CHECK(UnrootedTree::corolla(3).internal_edge_count() == 0);
  for (const auto& p : words_up_to(5)) CHECK(reroot(unroot(p)) == p);
  CHECK(parse_unrooted("(1 (2 3) 4)").str() == "(1 (2 3) 4)");
  CHECK_THROWS_AS(parse_unrooted("(1 1)"), ParseError);
}

TEST_CASE("extended symmetric group acts on the left") {
  CHECK(sigma_plus_act(ExtendedPermutation::identity(3), unroot(pw("((1 2) 3)"))) == unroot(pw("((1 2) 3)")));
  for (int n = 1; n <= 3; ++n) {
    auto group = all_extended(n);
    for (const auto& p : all_paren_words(n)) {
      UnrootedTree t = unroot(p);
      for (const auto& s : group)
        for (const auto& u : group) CHECK(sigma_plus_act(s * u, t) == sigma_plus_act(s, sigma_plus_act(u, t)));
      for (const auto& sigma : all_perms(n))
        CHECK(reroot(sigma_plus_act(ExtendedPermutation::fixing_zero(sigma), t)) == relabel(p, sigma));
    }
  }
}

TEST_CASE("rotation of the boundary") {
  ExtendedPermutation z3 = ExtendedPermutation::rotation(2);
  UnrootedTree t = unroot(pw("(1 2)"));
  CHECK(sigma_plus_act(z3, sigma_plus_act(z3, t)) == sigma_plus_act(z3.inverse(), t));
  CHECK(z3.pow(3) == ExtendedPermutation::identity(2));
  // rotating (12)3 moves the pair to the right
  ParenWord r = reroot(sigma_plus_act(ExtendedPermutation::rotation(3), unroot(pw("((1 2) 3)"))));
  CHECK(shape_of(r) == pw("(1 (2 3))"));
  CHECK(r.compact() == "1(23)");
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_paren_words(n)) {
      UnrootedTree t = unroot(p);
      UnrootedTree u = t;
      for (int k = 0; k <= n; ++k) u = sigma_plus_act(ExtendedPermutation::rotation(n), u);
      CHECK(u == t);
    }
}

TEST_CASE("boundary-labelled tree substitution") {
  // grafting a 4-ary corolla onto leaf 4 of a 5-ary corolla
  UnrootedTree grafted = unrooted_graft(UnrootedTree::corolla(5), 4, UnrootedTree::corolla(4));
  CHECK(grafted.str() == "(1 2 3 (4 5 6 7) 8)");
  UnrootedTree figure = parse_unrooted("(1 2 3 (4 5 6 7) 8)");
  CHECK(grafted == figure);
  // the same tree substituted into the vertex of an 8-ary corolla
  CHECK(tree_substitute(UnrootedTree::corolla(8), 1, figure) == figure);
  // substituting a corolla into the inner vertex changes nothing
  CHECK(tree_substitute(figure, 2, UnrootedTree::corolla(4)) == figure);
  // relabelled substitution permutes the glued branches
  UnrootedTree swapped = tree_substitute(parse_unrooted("((1 2) 3)"), 1, parse_unrooted("(2 1)"));
  CHECK(swapped.str() == "(3 (1 2))");
  // the single edge is a unit
  UnrootedTree with_bivalent = parse_unrooted("((1 2))");
  CHECK(tree_substitute(with_bivalent, 1, UnrootedTree::edge()) == parse_unrooted("(1 2)"));
  CHECK_THROWS_AS(tree_substitute(figure, 1, UnrootedTree::corolla(3)), MalformedInput);

  for (const char* outer : {"(1 (2 3 4))", "((1 2 3) 4)", "(1 2 3)", "((1 2 3) (4 5))"}) {
    UnrootedTree t = parse_unrooted(outer);
    for (int v = 1; v <= t.vertex_count(); ++v) {
      if (t.arity(v) != 4) continue;
      for (const char* mid : {"((1 2) 3)", "(1 (2 3))", "((3 1) 2)"})
        for (const char* inner : {"(1 2)", "(2 1)"}) {
          UnrootedTree s = parse_unrooted(mid), u = parse_unrooted(inner);
          for (int j = 1; j <= 2; ++j)
            CHECK(tree_substitute(tree_substitute(t, v, s), v + j - 1, u) ==
                  tree_substitute(t, v, tree_substitute(s, j, u)));
        }
    }
  }
}
