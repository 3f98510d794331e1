#pragma once

// Seeded samplers shared by the tests and the verification suites.  All draw
// from std::mt19937_64.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "parb/braid.hpp"

namespace parb::sampling {

inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
  int len = draw(rng, 0, max_len);
  std::vector<Letter> letters;
  if (strands < 2) return BraidWord(strands);
  for (int k = 0; k < len; ++k) letters.push_back({draw(rng, 1, strands - 1), draw(rng, 0, 1) ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

// Pairwise signed crossing counts between strands, indexed by bottom position.
inline std::vector<std::vector<int>> crossing_counts(const BraidWord& w) {
  int n = w.strands();
  std::vector<int> at(n);  // at[pos] = strand id (bottom position)
  for (int k = 0; k < n; ++k) at[k] = k;
  std::vector<std::vector<int>> lk(n, std::vector<int>(n, 0));
  for (const Letter& l : w.letters()) {
    int a = at[l.gen - 1], b = at[l.gen];
    lk[a][b] += l.sign;
    lk[b][a] += l.sign;
    std::swap(at[l.gen - 1], at[l.gen]);
  }
  return lk;
}

}  // namespace parb::sampling

namespace parb::sampling {

// Applies random defining-relation moves, so the result is equal to w in Br_n.
inline BraidWord scramble(std::mt19937_64& rng, const BraidWord& w, int moves) {
  int n = w.strands();
  std::vector<Letter> l = w.letters();
  if (n < 2) return w;
  for (int m = 0; m < moves; ++m) {
    int kind = draw(rng, 0, 3);
    int pos = draw(rng, 0, static_cast<int>(l.size()));
    if (kind == 0) {
      int g = draw(rng, 1, n - 1);
      int s = draw(rng, 0, 1) ? 1 : -1;
      l.insert(l.begin() + pos, {{g, s}, {g, -s}});
    } else if (kind == 1 && pos + 1 < static_cast<int>(l.size())) {
      if (l[pos].gen == l[pos + 1].gen && l[pos].sign == -l[pos + 1].sign) l.erase(l.begin() + pos, l.begin() + pos + 2);
    } else if (kind == 2 && pos + 1 < static_cast<int>(l.size())) {
      if (std::abs(l[pos].gen - l[pos + 1].gen) >= 2) std::swap(l[pos], l[pos + 1]);
    } else if (kind == 3 && pos + 2 < static_cast<int>(l.size())) {
      Letter a = l[pos], b = l[pos + 1], c = l[pos + 2];
      if (a == c && a.sign == b.sign && std::abs(a.gen - b.gen) == 1) {
        l[pos] = b;
        l[pos + 1] = a;
        l[pos + 2] = b;
      }
    }
  }
  return BraidWord(n, std::move(l));
}

}  // namespace parb::sampling

#include "parb/ribbon_braid.hpp"

namespace parb::sampling {

// Ribbon braid as a braid on doubled strands: each ribbon becomes two parallel
// strands and each twist a full twist of its pair.
inline BraidWord doubled(const RibbonBraid& r) {
  int n = r.strands();
  std::vector<Letter> letters;
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < 2 * std::abs(r.twists[p]); ++k) letters.push_back({2 * p + 1, r.twists[p] > 0 ? 1 : -1});
  return BraidWord(2 * n, std::move(letters)) * cable(r.braid, std::vector<int>(n, 2));
}

inline RibbonBraid random_rb(std::mt19937_64& rng, int strands, int max_len) {
  RibbonBraid r = RibbonBraid::identity(strands);
  int len = draw(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    int sign = draw(rng, 0, 1) ? 1 : -1;
    if (strands > 1 && draw(rng, 0, 2)) r = r * RibbonBraid::crossing(strands, draw(rng, 1, strands - 1), sign);
    else r = r * RibbonBraid::twist(strands, draw(rng, 1, strands), sign);
  }
  return r;
}

}  // namespace parb::sampling

#include "parb/parb.hpp"
#include "parb/trees.hpp"

namespace parb::sampling {

inline Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int k = n - 1; k > 0; --k) std::swap(p[k], p[draw(rng, 0, k)]);
  return Permutation(std::move(p));
}

inline ParenWord random_shape(std::mt19937_64& rng, int n) {
  if (n == 1) return ParenWord::leaf();
  int a = draw(rng, 1, n - 1);
  ParenWord l = random_shape(rng, a), r = random_shape(rng, n - a);
  return graft(graft(parse_paren("(1 2)"), r, 2), l, 1);
}

inline ParenWord random_object(std::mt19937_64& rng, int n) {
  return relabel(random_shape(rng, n), random_perm(rng, n));
}

inline ParbMorphism random_morphism_from(std::mt19937_64& rng, const ParenWord& source, int max_len) {
  RibbonBraid rb = random_rb(rng, source.size(), max_len);
  ParenWord target = transported_target(source, rb.braid, random_shape(rng, source.size()));
  return ParbMorphism(source, target, rb);
}

inline ParbMorphism random_morphism(std::mt19937_64& rng, int n, int max_len) {
  return random_morphism_from(rng, random_object(rng, n), max_len);
}

}  // namespace parb::sampling

#include "parb/gt.hpp"

namespace parb::sampling {

inline FreeWord random_free_word(std::mt19937_64& rng, int max_len) {
  std::vector<FreeLetter> letters;
  int len = draw(rng, 0, max_len);
  for (int k = 0; k < len; ++k) letters.push_back({draw(rng, 0, 1), draw(rng, 0, 1) ? 1 : -1});
  return FreeWord(2, std::move(letters));
}

inline long random_odd(std::mt19937_64& rng) { return 2 * draw(rng, -3, 2) + 1; }

inline Series random_group_like(std::mt19937_64& rng, int degree) {
  Series out = Series::one(free_xy_algebra(degree));
  for (int k = draw(rng, 1, 3); k > 0; --k) {
    mpq_class q(draw(rng, -3, 3), draw(rng, 1, 3));
    q.canonicalize();
    out = out * magnus_xy(random_free_word(rng, 4), degree).power(q);
  }
  return out;
}

inline GtElement random_truncated(std::mt19937_64& rng, int degree) {
  mpq_class lambda(draw(rng, 1, 5) * (draw(rng, 0, 1) ? 1 : -1), draw(rng, 1, 4));
  lambda.canonicalize();
  return GtElement::truncated(lambda, random_group_like(rng, degree));
}

}  // namespace parb::sampling

#include <algorithm>

#include "parb/tangle.hpp"

namespace parb::sampling {

inline EnvMorphism random_env(std::mt19937_64& rng, int n, int max_arity) {
  std::vector<ParbMorphism> parts;
  std::vector<EnvMorphism::Wire> wiring;
  for (int k = 0; k < n; ++k) {
    int a = draw(rng, 1, max_arity);
    parts.push_back(random_morphism(rng, a, 4));
    for (int l = 1; l <= a; ++l) wiring.push_back({k, l});
  }
  std::shuffle(wiring.begin(), wiring.end(), rng);
  return EnvMorphism::make(std::move(parts), wiring);
}

// b on the right of the strand, then the associator, then d on the left.
inline MetricPropMorphism snake_left() {
  MetricPropMorphism m = MetricPropMorphism::create(1, 0);
  m = metric_compose(m, MetricPropMorphism::ribbon(3, 0, generator_value(Generator::alpha)));
  return metric_compose(m, MetricPropMorphism::annihilate(3, 1));
}

inline MetricPropMorphism snake_right() {
  MetricPropMorphism m = MetricPropMorphism::create(1, 1);
  m = metric_compose(m, MetricPropMorphism::ribbon(3, 0, generator_value(Generator::alpha_inv)));
  return metric_compose(m, MetricPropMorphism::annihilate(3, 0));
}

inline MetricPropMorphism random_metric(std::mt19937_64& rng, int source, int layers, int max_width) {
  MetricPropMorphism m(source);
  for (int k = 0; k < layers; ++k) {
    const int w = m.target();
    MetricLayer l;
    int kind = draw(rng, 0, 5);
    if (kind == 0 && w >= 2) {
      l.kind = MetricLayer::Kind::annihilate;
      l.offset = draw(rng, 0, w - 2);
    } else if (kind == 1 && w + 2 <= max_width) {
      l.kind = MetricLayer::Kind::create;
      l.offset = draw(rng, 0, w);
    } else if (kind == 2 && w >= 1 && w + 2 <= max_width + 1) {
      int at = draw(rng, 0, w - 1);
      MetricPropMorphism s = draw(rng, 0, 1) ? snake_left() : snake_right();
      for (MetricLayer x : s.layers()) {
        x.offset += at;
        m.push(std::move(x));
      }
      continue;
    } else if (w >= 1) {
      int a = draw(rng, 1, std::min(3, w));
      l.offset = draw(rng, 0, w - a);
      l.op = kind == 3 && a == 3 ? generator_value(draw(rng, 0, 1) ? Generator::alpha : Generator::alpha_inv)
                                 : random_morphism(rng, a, 3);
    } else {
      l.kind = MetricLayer::Kind::create;
    }
    m.push(std::move(l));
  }
  return m;
}

}  // namespace parb::sampling
