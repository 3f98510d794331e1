#include <random>

#include "doctest.h"
#include "parb/error.hpp"
#include "parb/parb.hpp"
#include "support.hpp"

using namespace parb;
using parb::testing::draw;
using parb::testing::random_morphism;
using parb::testing::random_morphism_from;
using parb::testing::random_perm;

namespace {

ParbMorphism ev(const char* text) { return eval_expr(parse_expr(text)); }
Permutation perm(const char* s) { return Permutation::from_one_line(s); }

RibbonBraid rbw(int n, std::vector<Letter> letters, std::vector<int> twists) {
  return RibbonBraid(BraidWord(n, std::move(letters)), std::move(twists));
}

}  // namespace

TEST_CASE("generators") {
  ParbMorphism a = ev("alpha");
  CHECK(a.source == parse_paren("((1 2) 3)"));
  CHECK(a.target == parse_paren("(1 (2 3))"));
  CHECK(rb_equals(a.rb, RibbonBraid::identity(3)));
  ParbMorphism b = ev("beta perm[21]*");
  CHECK(b.source == parse_paren("(2 1)"));
  CHECK(b.target == parse_paren("(1 2)"));
  CHECK(parb_equal(sigma_act(Permutation::identity(2), ev("beta")), ev("beta")));
  CHECK_THROWS_AS(ParbMorphism(parse_paren("(1 2)"), parse_paren("(1 2)"), RibbonBraid::crossing(2, 1)),
                  MalformedInput);
}

TEST_CASE("defining relations hold") {
  // (T): the twist on a pair is the pure braid with both strands twisted
  ParbMorphism t_lhs = ev("tau mu o1");
  CHECK(rb_equals(t_lhs.rb, rbw(2, {{1, 1}, {1, 1}}, {1, 1})));
  CHECK(parb_equal(t_lhs, ev("beta beta perm[21]* . mu tau o2 tau o1 .")));

  // hexagons
  CHECK(parb_equal(ev("mu beta o1 alpha perm[213]* . mu beta o2 perm[213]* ."),
                   ev("alpha beta mu o2 . alpha perm[231]* .")));
  CHECK(parb_equal(ev("mu beta o2 alpha^-1 perm[132]* . mu beta o1 perm[132]* ."),
                   ev("alpha^-1 beta mu o1 . alpha^-1 perm[312]* .")));

  // pentagon
  CHECK(parb_equal(ev("alpha mu o1 alpha mu o3 ."), ev("mu alpha o1 alpha mu o2 . mu alpha o2 .")));
}

TEST_CASE("wrongly typed expressions are rejected with a location") {
  CHECK_THROWS_AS(ev("beta beta ."), CompositionError);
  try {
    ev("mu beta beta . o1");
    FAIL("expected a composition error");
  } catch (const CompositionError& e) {
    CHECK(std::string(e.what()).find("root.1") != std::string::npos);
  }
  CHECK_THROWS_AS(ev("mu mu o3"), CompositionError);
  CHECK_THROWS_AS(parse_expr("mu ."), ParseError);
  CHECK_THROWS_AS(parse_expr("mu mu"), ParseError);
  CHECK_THROWS_AS(parse_expr("gamma"), ParseError);
  CHECK_THROWS_AS(parse_expr("mu perm[11]*"), ParseError);
}

TEST_CASE("operad axioms") {
  std::mt19937_64 rng(11);
  ParbMorphism unit = ParbMorphism::identity(ParenWord::leaf());
  for (int trial = 0; trial < 400; ++trial) {
    int n = draw(rng, 1, 4), m = draw(rng, 1, 4), k = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 8), g = random_morphism(rng, m, 8), h = random_morphism(rng, k, 8);
    int i = draw(rng, 1, n), j = draw(rng, 1, m);
    REQUIRE(parb_equal(operadic_compose(operadic_compose(f, g, i), h, i + j - 1),
                       operadic_compose(f, operadic_compose(g, h, j), i)));
    if (n >= 2) {
      int a = draw(rng, 1, n - 1), b = draw(rng, a + 1, n);
      REQUIRE(parb_equal(operadic_compose(operadic_compose(f, g, a), h, b + m - 1),
                         operadic_compose(operadic_compose(f, h, b), g, a)));
    }
    REQUIRE(parb_equal(operadic_compose(unit, f, 1), f));
    REQUIRE(parb_equal(operadic_compose(f, unit, i), f));

    Permutation sigma = random_perm(rng, n), tau = random_perm(rng, m);
    REQUIRE(parb_equal(sigma_act(block_relabelling(sigma, tau, i), operadic_compose(f, g, i)),
                       operadic_compose(sigma_act(sigma, f), sigma_act(tau, g), sigma(i))));
    Permutation rho = random_perm(rng, n);
    REQUIRE(parb_equal(sigma_act(rho, sigma_act(sigma, f)), sigma_act(sigma * rho, f)));

    // operadic composition is a functor in both variables
    ParbMorphism f2 = random_morphism_from(rng, f.target, 6), g2 = random_morphism_from(rng, g.target, 6);
    REQUIRE(parb_equal(operadic_compose(cat_compose(f, f2), cat_compose(g, g2), i),
                       cat_compose(operadic_compose(f, g, i), operadic_compose(f2, g2, i))));
    REQUIRE(parb_equal(cat_compose(f, parb_inverse(f)), ParbMorphism::identity(f.source)));
  }
}

TEST_CASE("brackets can be forgotten") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = draw(rng, 1, 4), m = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 6), g = random_morphism(rng, m, 6);
    int i = draw(rng, 1, n);
    REQUIRE(corb_equal(forget_brackets(operadic_compose(f, g, i)),
                       operadic_compose(forget_brackets(f), forget_brackets(g), i)));
    REQUIRE(parb_equal(lift(forget_brackets(f), f.source, f.target), f));
    Permutation sigma = random_perm(rng, n);
    REQUIRE(corb_equal(forget_brackets(sigma_act(sigma, f)), sigma_act(sigma, forget_brackets(f))));
  }
}

TEST_CASE("express is a section of evaluation") {
  ParbMorphism id3 = ParbMorphism::identity(parse_paren("((2 3) 1)"));
  CHECK(parb_equal(eval_expr(express(id3)), id3));
  ParbMorphism sq(parse_paren("(1 2)"), parse_paren("(1 2)"), rbw(2, {{1, 1}, {1, 1}}, {0, 0}));
  CHECK(parb_equal(eval_expr(express(sq)), sq));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 6);
    for (Waypoint w : {Waypoint::left_comb, Waypoint::right_comb}) {
      OperadExpr e = express(f, w);
      REQUIRE(parb_equal(eval_expr(e), f));
      REQUIRE(parb_equal(eval_expr(expr_inverse(e)), parb_inverse(f)));
    }
  }
}

TEST_CASE("expression text round trip") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    OperadExpr e = express(random_morphism(rng, draw(rng, 1, 4), 4));
    std::string text = to_string(e);
    REQUIRE(to_string(parse_expr(text)) == text);
  }
  CHECK(to_string(parse_expr("mu  beta o1 perm[213]*")) == "mu beta o1 perm[213]*");
  OperadExpr big = OperadExpr::relabel(perm("[2 1 3 4 5 6 7 8 9 10]"), identity_expr(ParenWord::left_comb(Permutation::identity(10))));
  CHECK(to_string(parse_expr(to_string(big))) == to_string(big));
}
