#include <random>

#include "doctest.h"
#include "parb/cyclic.hpp"
#include "parb/error.hpp"
#include "parb/tangle.hpp"
#include "support.hpp"

using namespace parb;
using parb::testing::draw;
using parb::testing::random_env;
using parb::testing::random_metric;
using parb::testing::random_morphism;
using parb::testing::snake_left;
using parb::testing::snake_right;

namespace {

const TLModel& model() {
  static const TLModel m;
  return m;
}

ParbMorphism ev(const char* text) { return eval_expr(parse_expr(text)); }

}  // namespace

TEST_CASE("envelope prop axioms") {
  CHECK(env_equal(env_tensor(EnvMorphism::identity(2), EnvMorphism::identity(3)), EnvMorphism::identity(5)));
  CHECK(EnvMorphism::identity(0).source() == 0);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    EnvMorphism b = random_env(rng, draw(rng, 1, 3), 2);
    EnvMorphism a = random_env(rng, b.source(), 2);
    REQUIRE(env_equal(env_compose(EnvMorphism::identity(a.source()), a), a));
    REQUIRE(env_equal(env_compose(a, EnvMorphism::identity(a.target())), a));
    EnvMorphism c = random_env(rng, 1, b.target());
    if (c.source() == b.target())
      REQUIRE(env_equal(env_compose(env_compose(a, b), c), env_compose(a, env_compose(b, c))));

    // interchange: (a x a2) then (b x b2) = (a then b) x (a2 then b2)
    EnvMorphism b2 = random_env(rng, draw(rng, 1, 2), 2);
    EnvMorphism a2 = random_env(rng, b2.source(), 2);
    REQUIRE(env_equal(env_compose(env_tensor(a, a2), env_tensor(b, b2)),
                      env_tensor(env_compose(a, b), env_compose(a2, b2))));
    EnvMorphism d = random_env(rng, 2, 2);
    REQUIRE(env_equal(env_tensor(env_tensor(a, b2), d), env_tensor(a, env_tensor(b2, d))));
  }
  CHECK_THROWS_AS(env_compose(EnvMorphism::identity(2), EnvMorphism::identity(3)), CompositionError);
  CHECK_THROWS_AS(EnvMorphism::make({ev("mu")}, {{0, 1}}), MalformedInput);
}

TEST_CASE("operations embed as morphisms into one output") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    int n = draw(rng, 1, 3), m = draw(rng, 1, 3), i = draw(rng, 1, n);
    ParbMorphism f = random_morphism(rng, n, 5), g = random_morphism(rng, m, 5);
    EnvMorphism left = env_tensor(env_tensor(EnvMorphism::identity(i - 1), EnvMorphism::embed(g)),
                                  EnvMorphism::identity(n - i));
    REQUIRE(env_equal(env_compose(left, EnvMorphism::embed(f)), EnvMorphism::embed(operadic_compose(f, g, i))));
    Permutation p = parb::testing::random_perm(rng, n);
    REQUIRE(env_equal(env_compose(EnvMorphism::permutation(p), EnvMorphism::embed(f)),
                      EnvMorphism::embed(sigma_act(p.inverse(), f))));
  }
  Permutation p = Permutation::from_one_line("231"), q = Permutation::from_one_line("213");
  CHECK(env_equal(env_compose(EnvMorphism::permutation(p), EnvMorphism::permutation(q)),
                  EnvMorphism::permutation(p * q)));
}

TEST_CASE("zig-zags normalize to the identity") {
  CHECK(metric_equal(zigzag_normalize(snake_left()), MetricPropMorphism(1)));
  CHECK(metric_equal(zigzag_normalize(snake_right()), MetricPropMorphism(1)));
  CHECK(eval_metric(model(), snake_left()) == TLMorphism::identity(1));
  CHECK(eval_metric(model(), snake_right()) == TLMorphism::identity(1));

  // a cap far away slides below the ribbon layer, then the snake cancels
  MetricPropMorphism m = MetricPropMorphism::create(3, 0);
  m = metric_compose(m, MetricPropMorphism::ribbon(5, 3, ev("beta")));
  m = metric_compose(m, MetricPropMorphism::annihilate(5, 1));
  MetricPropMorphism expected = MetricPropMorphism::ribbon(3, 1, ev("beta"));
  CHECK(metric_equal(zigzag_normalize(m), expected));

  // a closed loop is left alone
  MetricPropMorphism loop = metric_compose(MetricPropMorphism::create(0, 0), MetricPropMorphism::annihilate(2, 0));
  CHECK(metric_equal(zigzag_normalize(loop), loop));
  CHECK(eval_metric(model(), loop) == TLMorphism::scalar(model().loop_value()));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    MetricPropMorphism r = random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 8), 5);
    MetricPropMorphism once = zigzag_normalize(r);
    REQUIRE(metric_equal(zigzag_normalize(once), once));
    REQUIRE(once.layers().size() <= r.layers().size());
    REQUIRE(eval_metric(model(), once) == eval_metric(model(), r));
  }
}

TEST_CASE("bending an invariant rotates its legs") {
  for (int w = 1; w <= 2; ++w)
    for (int blocks = 2; blocks <= 4; ++blocks) {
      const int n = blocks * w;
      for (const Matching& b : tl_basis(n, 0)) {
        MetricPropMorphism psi = invariant_from_matching(n, b);
        TLMorphism value = TLMorphism::matching(n, 0, b);
        REQUIRE(eval_metric(model(), psi) == value);
        REQUIRE(eval_metric(model(), rotate_invariant(psi, 1, w)) == rotate_legs(value, -w));
        REQUIRE(metric_equal(zigzag_normalize(rotate_invariant(psi, blocks, w)), psi));
      }
    }
  CHECK_THROWS_AS(invariant_from_matching(4, {2, 3, 0, 1}), MalformedInput);
}

TEST_CASE("the transpose agrees with the rotation") {
  auto agrees = [](const ParbMorphism& f, int w) {
    const int n = (f.arity() + 1) * w;
    ParbMorphism zf = z_on_morphism(f);
    for (const Matching& b : tl_basis(n, 0)) {
      MetricPropMorphism psi = invariant_from_matching(n, b);
      if (!(eval_metric(model(), transpose(f, psi, w)) == eval_metric(model(), act_on_invariant(zf, psi, w))))
        return false;
    }
    return true;
  };
  for (Generator g : {Generator::mu, Generator::id, Generator::beta, Generator::beta_inv, Generator::tau,
                      Generator::tau_inv, Generator::alpha, Generator::alpha_inv}) {
    ParbMorphism f = generator_value(g);
    CHECK_MESSAGE(agrees(f, 2), generator_name(g));
    if (f.arity() % 2) CHECK_MESSAGE(agrees(f, 1), generator_name(g));
  }
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    int n = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 5);
    REQUIRE(agrees(f, 2));
    if (n % 2) REQUIRE(agrees(f, 1));
  }

  // the transpose of an identity is a full turn, which straightens out
  ParbMorphism id = ParbMorphism::identity(ParenWord::leaf());
  for (const Matching& b : tl_basis(4, 0)) {
    MetricPropMorphism psi = invariant_from_matching(4, b);
    CHECK(metric_equal(zigzag_normalize(transpose(id, psi, 2)), psi));
  }
}

TEST_CASE("tangle text format") {
  const char* text =
      "tangle m=1 n=1\n"
      "objects: 1 -> 1\n"
      "cup 1 0\n"
      "rbraid n=3: t2 s1\n"
      "cap 1 0";
  TangleDiagram t = parse_tangle(text);
  CHECK(t.slices.size() == 3);
  CHECK(to_string(t) == text);
  CHECK(parse_tangle(to_string(t)) == t);
  CHECK(parse_tangle("tangle m=1 n=1; cup 1 0; cap 1 0") == parse_tangle("tangle m=1 n=1\ncup 1 0\ncap 1 0\n"));
  CHECK_THROWS_AS(parse_tangle("tangle m=1 n=1\ncap 0 0"), MalformedInput);
  CHECK_THROWS_AS(parse_tangle("tangle m=1 n=3\ncup 1 0\nloop"), ParseError);
  CHECK_THROWS_AS(parse_tangle("tangle m=1 n=2\ncup 1 0"), MalformedInput);
  CHECK_THROWS_AS(parse_tangle("cup 1 0"), ParseError);
  try {
    parse_tangle("tangle m=1 n=3\ncup 1 x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 21);
  }

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    TangleDiagram d = turaev_functor(random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 6), 5));
    REQUIRE(parse_tangle(to_string(d)) == d);
  }
}

TEST_CASE("Turaev relations in the Temperley-Lieb model") {
  auto ev_t = [](const char* text) { return eval_tangle(model(), parse_tangle(text)); };
  // snakes
  CHECK(ev_t("tangle m=1 n=1; cup 0 1; cap 1 0") == TLMorphism::identity(1));
  CHECK(ev_t("tangle m=1 n=1; cup 1 0; cap 0 1") == TLMorphism::identity(1));
  // a strand slides past a cup and a cap, over or under
  CHECK(ev_t("tangle m=1 n=3; cup 0 1; rbraid n=3: s2 s1") == ev_t("tangle m=1 n=3; cup 1 0"));
  CHECK(ev_t("tangle m=1 n=3; cup 0 1; rbraid n=3: s2^-1 s1^-1") == ev_t("tangle m=1 n=3; cup 1 0"));
  CHECK(ev_t("tangle m=3 n=1; rbraid n=3: s1 s2; cap 0 1") == ev_t("tangle m=3 n=1; cap 1 0"));
  CHECK(ev_t("tangle m=3 n=1; rbraid n=3: s1^-1 s2^-1; cap 0 1") == ev_t("tangle m=3 n=1; cap 1 0"));
  // hexagons for the crossing of one strand with two
  CHECK(ev_t("tangle m=3 n=3; rbraid n=3: s1 s2") == model().cabled_crossing(1, 2));
  CHECK(ev_t("tangle m=3 n=3; rbraid n=3: s2 s1") == model().cabled_crossing(2, 1));
  // balancing: the twist of a pair of strands is the closure of the cabled crossing
  CHECK(ev_t("tangle m=2 n=2; cup 2 0; cup 3 1; rbraid n=6: s2 s1 s3 s2; cap 3 1; cap 2 0") ==
        ev_t("tangle m=2 n=2; rbraid n=2: t1 t2 s1 s1"));
  CHECK(ev_t("tangle m=2 n=2; rbraid n=2: t1 t2 s1 s1") == model().bundle_twist(2));
  // twist and braiding, and a kink is a twist
  CHECK(ev_t("tangle m=2 n=2; rbraid n=2: s1; rbraid n=2: t2") == ev_t("tangle m=2 n=2; rbraid n=2: t1; rbraid n=2: s1"));
  CHECK(ev_t("tangle m=1 n=1; cup 1 0; rbraid n=3: s1; cap 1 0") == ev_t("tangle m=1 n=1; rbraid n=1: t1"));
  CHECK(ev_t("tangle m=1 n=1; cup 1 0; rbraid n=3: s1^-1; cap 1 0") == ev_t("tangle m=1 n=1; rbraid n=1: t1^-1"));
  CHECK(ev_t("tangle m=2 n=0; rbraid n=2: s1; cap 0 0") == ev_t("tangle m=2 n=0; rbraid n=2: t1^-1; cap 0 0"));
  // the twist passes through a cup
  CHECK(ev_t("tangle m=0 n=2; cup 0 0; rbraid n=2: t1") == ev_t("tangle m=0 n=2; cup 0 0; rbraid n=2: t2"));
  CHECK_FALSE(ev_t("tangle m=0 n=2; cup 0 0; rbraid n=2: t1") == ev_t("tangle m=0 n=2; cup 0 0"));
}

TEST_CASE("the slice functor") {
  MetricPropMorphism b = MetricPropMorphism::create(0, 0), d = MetricPropMorphism::annihilate(2, 0);
  CHECK(to_string(turaev_functor(b)) == "tangle m=0 n=2\ncup 0 0");
  CHECK(to_string(turaev_functor(d)) == "tangle m=2 n=0\ncap 0 0");
  CHECK(to_string(turaev_functor(MetricPropMorphism::ribbon(2, 0, ev("beta")))) == "tangle m=2 n=2\nrbraid n=2: s1");
  CHECK(to_string(turaev_functor(MetricPropMorphism::ribbon(1, 0, ev("tau")))) == "tangle m=1 n=1\nrbraid n=1: t1");
  CHECK_THROWS_AS(turaev_functor(MetricPropMorphism::inverse(1, 0, snake_left())), MalformedInput);

  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    MetricPropMorphism x = random_metric(rng, draw(rng, 0, 2), draw(rng, 1, 4), 4);
    MetricPropMorphism y = random_metric(rng, x.target(), draw(rng, 1, 4), 4);
    MetricPropMorphism z = random_metric(rng, draw(rng, 0, 2), draw(rng, 1, 3), 4);
    REQUIRE(turaev_functor(metric_compose(x, y)) == tangle_stack(turaev_functor(x), turaev_functor(y)));
    REQUIRE(turaev_functor(metric_tensor(x, z)) == tangle_juxtapose(turaev_functor(x), turaev_functor(z)));
    REQUIRE(eval_tangle(model(), turaev_functor(x)) == eval_metric(model(), x));
  }
  // bundles: the framed cable evaluates like the bundle model
  for (int trial = 0; trial < 40; ++trial) {
    int n = draw(rng, 1, 2);
    ParbMorphism f = random_morphism(rng, n, 4);
    MetricPropMorphism m = MetricPropMorphism::ribbon(2 * n, 0, f, 2);
    REQUIRE(eval_tangle(model(), turaev_functor(m)) == eval_metric(model(), m));
  }
}

TEST_CASE("GT on the duality") {
  GtElement one = GtElement::identity();
  CHECK(metric_equal(zigzag_normalize(nu_inverse(one)), MetricPropMorphism(1)));
  CHECK(metric_equal(zigzag_normalize(rho_inverse(one)), MetricPropMorphism(1)));
  for (DualityRule rule : {DualityRule::nu, DualityRule::rho}) {
    CHECK(metric_equal(zigzag_normalize(gt_act_on_tangles(one, snake_left(), rule)), MetricPropMorphism(1)));
    CHECK(metric_equal(zigzag_normalize(gt_act_on_tangles(one, snake_right(), rule)), MetricPropMorphism(1)));
  }

  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 60; ++trial) {
    MetricPropMorphism m = random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 6), 5);
    REQUIRE(metric_equal(zigzag_normalize(gt_act_on_tangles(one, m)), zigzag_normalize(m)));
  }

  // the mirror element keeps the zig-zags under either rule
  GtElement mirror = GtElement::discrete(-1, FreeWord(2));
  for (DualityRule rule : {DualityRule::nu, DualityRule::rho}) {
    CHECK(eval_metric(model(), gt_act_on_tangles(mirror, snake_left(), rule)) == TLMorphism::identity(1));
    CHECK(eval_metric(model(), gt_act_on_tangles(mirror, snake_right(), rule)) == TLMorphism::identity(1));
  }
  CHECK(eval_metric(model(), nu_inverse(mirror)) == eval_metric(model(), rho_inverse(mirror)));
  // outside GT the two corrections differ
  GtElement off = parse_gt("gt lambda=3 f=x");
  CHECK_FALSE(eval_metric(model(), nu_inverse(off)) == eval_metric(model(), rho_inverse(off)));
  CHECK_THROWS_AS(gt_act_on_tangles(GtElement::identity(3), snake_left()), MalformedInput);
}
