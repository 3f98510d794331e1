#include <random>

#include "doctest.h"
#include "parb/cyclic.hpp"
#include "support.hpp"

using namespace parb;
using parb::testing::draw;
using parb::testing::random_morphism;

namespace {

ParbMorphism ev(const char* text) { return eval_expr(parse_expr(text)); }

}  // namespace

TEST_CASE("rotation on objects") {
  CHECK(z_on_object(ParenWord::leaf()) == ParenWord::leaf());
  CHECK(z_on_object(parse_paren("(1 2)")) == parse_paren("(1 2)"));
  CHECK(z_on_object(parse_paren("(2 1)")) == parse_paren("(2 1)"));
  CHECK(z_on_object(parse_paren("((1 2) 3)")) == parse_paren("(1 (2 3))"));
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_paren_words(n)) {
      ParenWord q = p;
      for (int k = 0; k <= n; ++k) q = z_on_object(q);
      CHECK(q == p);
      CHECK(z_on_object(p, 2) == z_on_object(z_on_object(p)));
    }
}

TEST_CASE("rotation on generators") {
  CHECK(to_string(z_on_generator(Generator::tau)) == "tau");
  ParbMorphism zb = eval_expr(z_on_generator(Generator::beta));
  CHECK(zb.source == parse_paren("(1 2)"));
  CHECK(zb.target == parse_paren("(2 1)"));
  CHECK(rb_equals(zb.rb, RibbonBraid(BraidWord(2, {{1, -1}}), {-1, 0})));
  ParbMorphism za = eval_expr(z_on_generator(Generator::alpha));
  CHECK(parb_equal(za, ev("alpha^-1")));
  for (Generator g : {Generator::mu, Generator::id, Generator::beta, Generator::beta_inv, Generator::tau,
                      Generator::tau_inv, Generator::alpha, Generator::alpha_inv}) {
    ParbMorphism f = generator_value(g);
    ParbMorphism image = f;
    for (int k = 0; k <= f.arity(); ++k) image = z_on_morphism(image);
    CHECK(parb_equal(image, f));
    ParbMorphism direct = eval_expr(z_on_generator(g));
    CHECK(direct.source == z_on_object(f.source));
    CHECK(direct.target == z_on_object(f.target));
    CHECK(parb_equal(z_on_morphism(f), direct));
  }
}

TEST_CASE("rotation is a functor of finite order") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    int n = draw(rng, 1, 4);
    ParbMorphism f = random_morphism(rng, n, 6);
    ParbMorphism g = parb::testing::random_morphism_from(rng, f.target, 6);
    ParbMorphism zf = z_on_morphism(f);
    REQUIRE(zf.source == z_on_object(f.source));
    REQUIRE(parb_equal(z_on_morphism(cat_compose(f, g)), cat_compose(zf, z_on_morphism(g))));
    REQUIRE(parb_equal(zf, z_on_morphism(f, 1, Waypoint::right_comb)));
    REQUIRE(parb_equal(zf, z_fast(f)));
    ParbMorphism it = f;
    for (int k = 0; k <= n; ++k) it = z_fast(it);
    REQUIRE(parb_equal(it, f));
  }
}

TEST_CASE("rotation is compatible with insertion") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    int n = draw(rng, 1, 3), m = draw(rng, 1, 3);
    ParbMorphism x = random_morphism(rng, n, 5), y = random_morphism(rng, m, 5);
    int i = draw(rng, 1, n);
    ParbMorphism lhs = z_fast(operadic_compose(x, y, i));
    ParbMorphism rhs = i >= 2 ? operadic_compose(z_fast(x), y, i - 1) : operadic_compose(z_fast(y), z_fast(x), m);
    REQUIRE(parb_equal(lhs, rhs));
  }
}

namespace {

ParbMorphism on_object(const char* object, RibbonBraid rb) {
  ParenWord s = parse_paren(object);
  return ParbMorphism(s, transported_target(s, rb.braid, s), std::move(rb));
}

ParbMorphism chain(std::initializer_list<ParbMorphism> parts) {
  auto it = parts.begin();
  ParbMorphism out = *it;
  for (++it; it != parts.end(); ++it) out = cat_compose(out, *it);
  return out;
}

}  // namespace

TEST_CASE("rotation of the pure braid generators") {
  Permutation c = display_relabelling(3);
  CHECK(c.one_line() == "231");
  ParbMorphism a = ev("alpha"), ai = ev("alpha^-1");
  ParbMorphism x12 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s1 s1"));
  ParbMorphism x23 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s2 s2"));
  RibbonBraid w(full_twist(3), {0, 0, 0});
  ParbMorphism core = on_object("((1 2) 3)", RibbonBraid::twist(3, 1, -2) * x23.rb * rb_inverse(w));
  CHECK(parb_equal(z_displayed(x12), sigma_act(c, chain({ai, core, a}))));
  CHECK(parb_equal(z_displayed(x23), sigma_act(c, chain({ai, x12, a}))));
  CHECK(parb_equal(z_displayed(a), sigma_act(c, ai)));
  CHECK(parb_equal(z_displayed(ai), sigma_act(c, a)));
  CHECK(parb_equal(z_on_morphism(a, 2), a));
}

TEST_CASE("rotation of the associator composites") {
  Permutation c = display_relabelling(4);
  CHECK(c.one_line() == "2341");
  ParbMorphism mu = ev("mu"), a = ev("alpha");
  CHECK(parb_equal(z_displayed(ev("alpha mu o3")), sigma_act(c, ev("alpha^-1 mu o2"))));
  CHECK(parb_equal(z_displayed(ev("mu alpha o1")), sigma_act(c, ev("alpha^-1 mu o3"))));
  CHECK(parb_equal(z_displayed(ev("alpha mu o2")), sigma_act(c, ev("alpha^-1 mu o1"))));
  CHECK(parb_equal(z_displayed(ev("mu alpha o2")), sigma_act(c, ev("mu alpha o1"))));
  // the same composites through the insertion rule
  CHECK(parb_equal(z_on_morphism(ev("alpha mu o3")), operadic_compose(z_on_morphism(a), mu, 2)));
  CHECK(parb_equal(z_on_morphism(ev("mu alpha o1")), operadic_compose(z_on_morphism(a), z_on_morphism(mu), 3)));
  CHECK(parb_equal(z_on_morphism(ev("alpha mu o2")), operadic_compose(z_on_morphism(a), mu, 1)));
  CHECK(parb_equal(z_on_morphism(ev("mu alpha o2")), operadic_compose(z_on_morphism(mu), a, 1)));
}

TEST_CASE("rotation of the hexagons") {
  ParbMorphism h1 = ev("alpha beta mu o2 . alpha perm[231]* .");
  ParbMorphism h1_image = z_displayed(h1);
  CHECK(h1_image.source == parse_paren("(2 (3 1))"));
  CHECK(rb_equals(h1_image.rb, parse_rbraid("rbraid n=3: s2^-1 s1^-1 s2^-1 s2^-1 t2^-1 t3^-1")));
  CHECK(parb_equal(h1_image, z_displayed(ev("mu beta o1 alpha perm[213]* . mu beta o2 perm[213]* ."))));

  ParbMorphism h2_image = z_displayed(ev("alpha^-1 beta mu o1 . alpha^-1 perm[312]* ."));
  CHECK(h2_image.source == parse_paren("((2 3) 1)"));
  CHECK(h2_image.target == parse_paren("((2 1) 3)"));
  CHECK(rb_equals(h2_image.rb, parse_rbraid("rbraid n=3: t2^-1 s2^-1")));
  CHECK(parb_equal(h2_image, z_displayed(ev("mu beta o2 alpha^-1 perm[132]* . mu beta o1 perm[132]* ."))));
}

TEST_CASE("rotation preserves the defining relations") {
  const char* relations[][2] = {
      {"tau mu o1", "beta beta perm[21]* . mu tau o2 tau o1 ."},
      {"mu beta o1 alpha perm[213]* . mu beta o2 perm[213]* .", "alpha beta mu o2 . alpha perm[231]* ."},
      {"mu beta o2 alpha^-1 perm[132]* . mu beta o1 perm[132]* .", "alpha^-1 beta mu o1 . alpha^-1 perm[312]* ."},
      {"alpha mu o1 alpha mu o3 .", "mu alpha o1 alpha mu o2 . mu alpha o2 ."},
  };
  for (auto& rel : relations) {
    OperadExpr lhs = parse_expr(rel[0]), rhs = parse_expr(rel[1]);
    for (int k = 1; k <= expr_arity(lhs); ++k)
      CHECK(parb_equal(eval_expr(z_on_expr(lhs, k)), eval_expr(z_on_expr(rhs, k))));
  }
}

TEST_CASE("the rotation and the transposition generate an action of S4 on the associator") {
  ParbMorphism a = ev("alpha");
  Permutation s = Permutation::from_one_line("213");
  auto z = [](const ParbMorphism& f) { return z_on_morphism(f); };
  auto t = [&](const ParbMorphism& f) { return sigma_act(s, f); };
  CHECK(parb_equal(z(z(z(z(a)))), a));
  CHECK(parb_equal(z(t(z(t(a)))), t(z(z(z(a))))));
  CHECK(parb_equal(t(z(z(t(z(z(a)))))), z(z(t(z(z(t(a))))))));
}
