#include <random>

#include "doctest.h"
#include "parb/cyclic.hpp"
#include "parb/error.hpp"
#include "parb/tl.hpp"
#include "support.hpp"

using namespace parb;
using parb::testing::draw;
using parb::testing::random_morphism;

namespace {

const TLModel& model() {
  static const TLModel m;
  return m;
}

TLMorphism random_tl(std::mt19937_64& rng, int m, int n) {
  std::vector<Matching> basis = tl_basis(m, n);
  TLMorphism out(m, n);
  for (int k = draw(rng, 1, 3); k > 0; --k) {
    const Matching& b = basis[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(basis.size()) - 1))];
    out = out + TLMorphism::matching(m, n, b, A_pow(draw(rng, -3, 3)) * LaurentA(draw(rng, -2, 2)));
  }
  return out;
}

const LaurentA delta_value = -A_pow(2) - A_pow(-2);

}  // namespace

TEST_CASE("planar matchings are counted by Catalan numbers") {
  const std::size_t catalan_numbers[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) {
    CHECK(tl_basis(n, n).size() == catalan_numbers[n]);
    CHECK(tl_basis(0, 2 * n).size() == catalan_numbers[n]);
    for (const Matching& b : tl_basis(n, n)) CHECK(is_planar(b, n, n));
  }
  CHECK(tl_basis(1, 2).empty());
  CHECK(is_planar({2, 3, 0, 1}, 2, 2));
  CHECK_FALSE(is_planar({3, 2, 1, 0}, 2, 2));
  CHECK_THROWS_AS(TLMorphism::matching(2, 2, {3, 2, 1, 0}), MalformedInput);
}

TEST_CASE("the loop value and the twist are forced") {
  // c c^-1 = id + (A^2 + A^-2 + delta) hook, so only one loop value works
  CHECK(model().loop_value() == delta_value);
  TLMorphism c = model().crossing(1), ci = model().crossing(-1);
  CHECK(tl_compose(c, ci, delta_value) == TLMorphism::identity(2));
  CHECK_FALSE(tl_compose(c, ci, delta_value + 1) == TLMorphism::identity(2));
  CHECK(tl_compose(TLMorphism::cup(), TLMorphism::cap(), delta_value) == TLMorphism::scalar(delta_value));

  CHECK(model().twist_scalar() == -A_pow(3));
  CHECK(model().balancing_holds());
  TLModel flipped(true);
  CHECK(flipped.loop_value() == delta_value);
  CHECK(flipped.twist_scalar() == -A_pow(-3));
  CHECK(flipped.balancing_holds());
  CHECK(to_string(model().loop_value()) == "-A^2 - A^-2");
}

TEST_CASE("composition and tensor") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int m = draw(rng, 0, 3), n = draw(rng, 0, 3), p = draw(rng, 0, 3);
    if ((m + n) % 2) ++n;
    if ((n + p) % 2) ++p;
    TLMorphism a = random_tl(rng, m, n), b = random_tl(rng, n, p);
    REQUIRE(model().compose(TLMorphism::identity(m), a) == a);
    REQUIRE(model().compose(a, TLMorphism::identity(n)) == a);
    int q = draw(rng, 0, 3);
    if ((p + q) % 2) ++q;
    TLMorphism c = random_tl(rng, p, q);
    REQUIRE(model().compose(model().compose(a, b), c) == model().compose(a, model().compose(b, c)));
    int m2 = draw(rng, 0, 2), n2 = m2 + 2 * draw(rng, 0, 1), p2 = n2;
    TLMorphism a2 = random_tl(rng, m2, n2), b2 = random_tl(rng, n2, p2);
    REQUIRE(model().compose(tl_tensor(a, a2), tl_tensor(b, b2)) ==
            tl_tensor(model().compose(a, b), model().compose(a2, b2)));
    REQUIRE(parse_tl(to_string(a)) == a);
  }
  CHECK_THROWS_AS(model().compose(TLMorphism::identity(1), TLMorphism::identity(2)), CompositionError);
  CHECK_THROWS_AS(parse_tl("tl m=1"), ParseError);
}

TEST_CASE("pairing and skein identities") {
  TLMorphism id1 = TLMorphism::identity(1);
  CHECK(model().compose(tl_tensor(TLMorphism::cup(), id1), tl_tensor(id1, TLMorphism::cap())) == id1);
  CHECK(model().compose(tl_tensor(id1, TLMorphism::cup()), tl_tensor(TLMorphism::cap(), id1)) == id1);
  for (int w = 1; w <= 3; ++w) {
    TLMorphism idw = TLMorphism::identity(w);
    CHECK(model().compose(tl_tensor(nested_cup(w), idw), tl_tensor(idw, nested_cap(w))) == idw);
  }

  // a framed unknot: a cup, one positive twist, a cap
  RibbonBraid kink(BraidWord(2), {1, 0});
  TLMorphism unknot =
      model().compose(model().compose(TLMorphism::cup(), model().eval(kink)), TLMorphism::cap());
  CHECK(unknot == TLMorphism::scalar(-A_pow(3) * delta_value));

  CHECK(model().eval(parse_braid("braid n=3: s1 s2 s1")) == model().eval(parse_braid("braid n=3: s2 s1 s2")));
  CHECK(model().eval(parse_braid("braid n=4: s1 s3")) == model().eval(parse_braid("braid n=4: s3 s1")));
  CHECK_FALSE(model().eval(parse_braid("braid n=2: s1")) == model().eval(parse_braid("braid n=2: s1^-1")));

  // the crossing of a strand with a pair of strands is two crossings
  TLMorphism c = model().crossing(), id = TLMorphism::identity(1);
  CHECK(model().cabled_crossing(1, 2) == model().compose(tl_tensor(c, id), tl_tensor(id, c)));
  CHECK(model().cabled_crossing(2, 1) == model().compose(tl_tensor(id, c), tl_tensor(c, id)));
}

TEST_CASE("evaluation of parenthesised ribbon braids") {
  for (Generator g : {Generator::mu, Generator::id, Generator::alpha, Generator::alpha_inv}) {
    ParbMorphism f = generator_value(g);
    CHECK(model().eval(f) == TLMorphism::identity(f.arity()));
  }
  CHECK(model().eval(generator_value(Generator::beta)) == model().crossing());
  CHECK(model().eval(generator_value(Generator::tau)) == TLMorphism::identity(1).scaled(-A_pow(3)));
  for (const Relation& rel : defining_relations())
    CHECK_MESSAGE(model().eval(parse_expr(rel.lhs)) == model().eval(parse_expr(rel.rhs)), rel.name);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 6);
    ParbMorphism g = parb::testing::random_morphism_from(rng, f.target, 6);
    REQUIRE(model().eval(cat_compose(f, g)) == model().compose(model().eval(f), model().eval(g)));
    REQUIRE(model().eval(express(f)) == model().eval(f));
    int m = draw(rng, 1, 3), i = draw(rng, 1, n);
    ParbMorphism h = random_morphism(rng, m, 4);
    // insertion: the inner morphism followed by the outer one on a bundle
    REQUIRE(model().eval(OperadExpr::operadic(express(f), express(h), i)) ==
            model().eval(operadic_compose(f, h, i)));
    Permutation sigma = parb::testing::random_perm(rng, n);
    REQUIRE(model().eval(sigma_act(sigma, f)) == model().eval(f));
  }
}

TEST_CASE("leg rotation") {
  TLMorphism psi = TLMorphism::matching(4, 0, {1, 0, 3, 2});
  CHECK(rotate_legs(psi, 1) == TLMorphism::matching(4, 0, {3, 2, 1, 0}));
  CHECK(rotate_legs(rotate_legs(psi, 1), 3) == psi);
  CHECK_THROWS_AS(rotate_legs(TLMorphism::identity(1), 1), MalformedInput);
}

TEST_CASE("the rotation acts by rotating the legs of invariants") {
  for (bool flip : {false, true}) {
    TLModel m(flip);
    for (Generator g : {Generator::mu, Generator::id, Generator::beta, Generator::beta_inv, Generator::tau,
                        Generator::tau_inv, Generator::alpha, Generator::alpha_inv}) {
      ParbMorphism f = generator_value(g);
      CHECK_MESSAGE(m.invariant_action(z_on_morphism(f), 2) == m.rotated_action(f, 2), generator_name(g));
      if (f.arity() % 2) CHECK(m.invariant_action(z_on_morphism(f), 1) == m.rotated_action(f, 1));
    }
  }
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    int n = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 5);
    REQUIRE(model().invariant_action(z_on_morphism(f), 2) == model().rotated_action(f, 2));
    if (n % 2) REQUIRE(model().invariant_action(z_on_morphism(f), 1) == model().rotated_action(f, 1));
  }
}
