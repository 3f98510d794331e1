#include "parb/suites.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>

#include "json.hpp"
#include "parb/cyclic.hpp"
#include "parb/error.hpp"
#include "parb/lawrence_krammer.hpp"
#include "parb/sampling.hpp"
#include "parb/tangle.hpp"
#include "parb/tl.hpp"

namespace parb {

using namespace sampling;

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [&](const Record& r) { return r.status == s; }));
}

const Record* Report::find(const std::string& id) const {
  for (const Record& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Empty string on success, otherwise a description of the failing sample.
using Outcome = std::string;
using Sample = std::function<Outcome(std::mt19937_64&, long)>;

class Run {
 public:
  explicit Run(const SuiteOptions& o) : opt(o) {}

  const SuiteOptions& opt;
  std::vector<Record> records;

  long samples(long full) const { return opt.budget ? std::min(full, *opt.budget) : full; }

  std::mt19937_64 rng_for(const std::string& id) const { return std::mt19937_64(opt.seed ^ fnv1a(id)); }

  void fact(std::string id, std::string anchor, const std::function<Outcome()>& check) {
    Record r{std::move(id), std::move(anchor), Status::pass, "exact", ""};
    try {
      r.witness = check();
    } catch (const std::exception& e) {
      r.witness = fmt::format("exception: {}", e.what());
    }
    if (!r.witness.empty()) r.status = Status::fail;
    records.push_back(std::move(r));
  }

  void sweep(std::string id, std::string anchor, long full, const Sample& sample) {
    const long n = samples(full);
    std::mt19937_64 rng = rng_for(id);
    Record r{std::move(id), std::move(anchor), Status::pass, "", ""};
    long failures = 0;
    for (long k = 0; k < n; ++k) {
      Outcome o;
      try {
        o = sample(rng, k);
      } catch (const std::exception& e) {
        o = fmt::format("exception: {}", e.what());
      }
      if (o.empty()) continue;
      if (failures++ == 0) r.witness = fmt::format("sample {}: {}", k, o);
    }
    r.detail = fmt::format("{}/{} samples pass", n - failures, n);
    if (failures) r.status = Status::fail;
    records.push_back(std::move(r));
  }

  void info(std::string id, std::string anchor, std::string detail) {
    records.push_back({std::move(id), std::move(anchor), Status::info, std::move(detail), ""});
  }
};

Outcome unless(bool ok, const std::function<std::string()>& witness) { return ok ? Outcome() : witness(); }
Outcome unless(bool ok, std::string witness) { return ok ? Outcome() : std::move(witness); }

// Collects the failing checks of a library report into one witness.
Outcome failing_checks(const CheckReport& report) {
  std::string out;
  for (const CheckResult& c : report)
    if (!c.pass) out += fmt::format("{}{}: {}", out.empty() ? "" : "; ", c.id, c.detail);
  return out;
}

ParbMorphism ev(const char* text) { return eval_expr(parse_expr(text)); }

const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> gens{Generator::mu,  Generator::id,      Generator::beta,  Generator::beta_inv,
                                           Generator::tau, Generator::tau_inv, Generator::alpha, Generator::alpha_inv};
  return gens;
}

// ---- braid-oracle ----

std::vector<BraidWord> all_words(int n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int g = 1; g < n; ++g)
        for (int s : {1, -1}) {
          auto letters = out[k].letters();
          letters.push_back({g, s});
          out.emplace_back(n, letters);
        }
    begin = end;
  }
  return out;
}

struct LKHash {
  std::size_t operator()(const LKMatrix& m) const { return m.hash(); }
};

void braid_oracle(Run& run) {
  const std::string word_problem = "braid group word problem: Garside normal form against Lawrence-Krammer";
  run.fact("br3-exhaustive-lk", word_problem, [] {
    LawrenceKrammer lk(3);
    std::vector<BraidWord> words = all_words(3, 5);
    std::unordered_map<GarsideNormalForm, int> nf_ids;
    std::unordered_map<LKMatrix, int, LKHash> lk_ids;
    std::vector<int> nf_id, lk_id;
    for (const BraidWord& w : words) {
      nf_id.push_back(nf_ids.try_emplace(garside_normal_form(w), static_cast<int>(nf_ids.size())).first->second);
      lk_id.push_back(lk_ids.try_emplace(lk.image(w), static_cast<int>(lk_ids.size())).first->second);
    }
    if (words.size() != 1365) return fmt::format("enumerated {} words", words.size());
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a + 1; b < words.size(); ++b)
        if ((nf_id[a] == nf_id[b]) != (lk_id[a] == lk_id[b]))
          return fmt::format("{} vs {}", to_string(words[a]), to_string(words[b]));
    return Outcome();
  });

  LawrenceKrammer lk4(4);
  run.sweep("br4-random-lk", word_problem, 500, [&](std::mt19937_64& rng, long k) {
    BraidWord u = random_word(rng, 4, 8);
    BraidWord v = k % 2 ? scramble(rng, u, 12) : random_word(rng, 4, 8);
    return unless(braid_equal(u, v) == (lk4.image(u) == lk4.image(v)),
                  [&] { return fmt::format("{} vs {}", to_string(u), to_string(v)); });
  });

  run.fact("br-relations", "braid group presentation: far commutation and braid relation", [] {
    for (int n = 2; n <= 5; ++n) {
      LawrenceKrammer lk(n);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          BraidWord si = BraidWord::generator(n, i), sj = BraidWord::generator(n, j);
          BraidWord lhs = j == i + 1 ? si * sj * si : si * sj;
          BraidWord rhs = j == i + 1 ? sj * si * sj : sj * si;
          if (!braid_equal(lhs, rhs) || !(lk.image(lhs) == lk.image(rhs)))
            return fmt::format("n={} i={} j={}", n, i, j);
        }
    }
    return Outcome();
  });

  run.fact("pb-generators", "pure braid generators x_ij", [] {
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          BraidWord x = pure_braid_generator(i, j, n);
          if (!underlying_permutation(x).is_identity()) return fmt::format("x{}{} in Br{} is not pure", i, j, n);
          auto lk = crossing_counts(x);
          for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
              if (lk[a][b] != ((a == i - 1 && b == j - 1) ? 2 : 0))
                return fmt::format("x{}{} in Br{} links strands {} and {}", i, j, n, a + 1, b + 1);
        }
    BraidWord prod = pure_braid_generator(1, 2, 3) * pure_braid_generator(1, 3, 3) * pure_braid_generator(2, 3, 3);
    return unless(braid_equal(prod, parse_braid("braid n=3: s1 s2").pow(3)), "x12 x13 x23 != (s1 s2)^3");
  });

  run.fact("full-twist-central", "centrality of the full twist (s1 s2)^3 in Br3", [] {
    BraidWord d = parse_braid("braid n=3: s1 s2").pow(3);
    for (int i = 1; i <= 2; ++i) {
      BraidWord s = BraidWord::generator(3, i);
      if (!braid_equal(d * s, s * d)) return fmt::format("fails to commute with s{}", i);
    }
    for (int m = 1; m <= 5; ++m)
      for (int i = 1; i < m; ++i) {
        BraidWord s = BraidWord::generator(m, i);
        if (!braid_equal(full_twist(m) * s, s * full_twist(m))) return fmt::format("full twist of {} and s{}", m, i);
      }
    return unless(braid_equal(full_twist(3), d), "full_twist(3) != (s1 s2)^3");
  });

  run.fact("rb-relations", "ribbon braid group presentation", [] {
    auto b = [](int n, int i) { return RibbonBraid::crossing(n, i); };
    auto t = [](int n, int i) { return RibbonBraid::twist(n, i); };
    for (int n = 1; n <= 5; ++n) {
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (j == i + 1 && !rb_equals(b(n, i) * b(n, j) * b(n, i), b(n, j) * b(n, i) * b(n, j)))
            return fmt::format("braid relation n={} i={}", n, i);
          if (std::abs(i - j) >= 2 && !rb_equals(b(n, i) * b(n, j), b(n, j) * b(n, i)))
            return fmt::format("far commutation n={} i={} j={}", n, i, j);
        }
        for (int j = 1; j <= n; ++j)
          if (j != i && j != i + 1 && !rb_equals(b(n, i) * t(n, j), t(n, j) * b(n, i)))
            return fmt::format("twist t{} and crossing s{} n={}", j, i, n);
        if (!rb_equals(b(n, i) * t(n, i + 1), t(n, i) * b(n, i)))
          return fmt::format("twist sliding through s{} n={}", i, n);
      }
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (!rb_equals(t(n, i) * t(n, j), t(n, j) * t(n, i))) return fmt::format("twists t{} t{} n={}", i, j, n);
    }
    return Outcome();
  });

  run.sweep("rb-doubled-model", "ribbon braid equality against the doubled-strand braid", 300,
            [](std::mt19937_64& rng, long k) {
              int n = draw(rng, 2, 3);
              RibbonBraid x = random_rb(rng, n, 6);
              RibbonBraid y = k % 2 ? rb_canonical(x) * random_rb(rng, n, draw(rng, 0, 1)) : random_rb(rng, n, 6);
              return unless(rb_equals(x, y) == braid_equal(doubled(x), doubled(y)),
                            [&] { return fmt::format("{} vs {}", to_string(x), to_string(y)); });
            });

  run.sweep("garside-canonical", "braid group word problem: normal form of the canonical word", 300,
            [](std::mt19937_64& rng, long) {
              BraidWord w = random_word(rng, draw(rng, 2, 5), 12);
              GarsideNormalForm nf = garside_normal_form(w);
              return unless(garside_normal_form(canonical_word(nf)) == nf, [&] { return to_string(w); });
            });
}

// ---- operad-axioms ----

struct Composite {
  ParbMorphism f, g, h;
  int n, m, i, j;
};

Composite random_composite(std::mt19937_64& rng) {
  Composite c;
  c.n = draw(rng, 1, 4);
  c.m = draw(rng, 1, 4);
  c.f = random_morphism(rng, c.n, 8);
  c.g = random_morphism(rng, c.m, 8);
  c.h = random_morphism(rng, draw(rng, 1, 4), 8);
  c.i = draw(rng, 1, c.n);
  c.j = draw(rng, 1, c.m);
  return c;
}

std::string show(const Composite& c) {
  return fmt::format("f={} | g={} | h={} | i={} j={}", to_string(c.f), to_string(c.g), to_string(c.h), c.i, c.j);
}

void operad_axioms(Run& run) {
  const long full = 1000;
  const ParbMorphism unit = ParbMorphism::identity(ParenWord::leaf());

  run.sweep("parb-sequential-associativity", "operad axioms: sequential associativity", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              return unless(parb_equal(operadic_compose(operadic_compose(c.f, c.g, c.i), c.h, c.i + c.j - 1),
                                       operadic_compose(c.f, operadic_compose(c.g, c.h, c.j), c.i)),
                            [&] { return show(c); });
            });
  run.sweep("parb-parallel-associativity", "operad axioms: parallel associativity", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              if (c.n < 2) c.f = operadic_compose(generator_value(Generator::mu), c.f, 1);
              const int n = c.f.arity();
              int a = draw(rng, 1, n - 1), b = draw(rng, a + 1, n);
              return unless(parb_equal(operadic_compose(operadic_compose(c.f, c.g, a), c.h, b + c.m - 1),
                                       operadic_compose(operadic_compose(c.f, c.h, b), c.g, a)),
                            [&] { return fmt::format("{} a={} b={}", show(c), a, b); });
            });
  run.sweep("parb-unit", "operad axioms: unit", full, [&](std::mt19937_64& rng, long) {
    Composite c = random_composite(rng);
    return unless(parb_equal(operadic_compose(unit, c.f, 1), c.f) && parb_equal(operadic_compose(c.f, unit, c.i), c.f),
                  [&] { return show(c); });
  });
  run.sweep("parb-equivariance", "operad axioms: symmetric group equivariance", full, [](std::mt19937_64& rng, long) {
    Composite c = random_composite(rng);
    Permutation sigma = random_perm(rng, c.n), tau = random_perm(rng, c.m), rho = random_perm(rng, c.n);
    bool ok = parb_equal(sigma_act(block_relabelling(sigma, tau, c.i), operadic_compose(c.f, c.g, c.i)),
                         operadic_compose(sigma_act(sigma, c.f), sigma_act(tau, c.g), sigma(c.i))) &&
              parb_equal(sigma_act(rho, sigma_act(sigma, c.f)), sigma_act(sigma * rho, c.f));
    return unless(ok, [&] { return fmt::format("{} sigma={} tau={}", show(c), sigma.one_line(), tau.one_line()); });
  });
  run.sweep("parb-functoriality", "operadic composition is a functor in both variables", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              ParbMorphism f2 = random_morphism_from(rng, c.f.target, 6), g2 = random_morphism_from(rng, c.g.target, 6);
              bool ok = parb_equal(operadic_compose(cat_compose(c.f, f2), cat_compose(c.g, g2), c.i),
                                   cat_compose(operadic_compose(c.f, c.g, c.i), operadic_compose(f2, g2, c.i))) &&
                        parb_equal(cat_compose(c.f, parb_inverse(c.f)), ParbMorphism::identity(c.f.source));
              return unless(ok, [&] { return show(c); });
            });

  run.sweep("corb-sequential-associativity", "operad axioms for CoRB: sequential associativity", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              CorbMorphism f = forget_brackets(c.f), g = forget_brackets(c.g), h = forget_brackets(c.h);
              return unless(corb_equal(operadic_compose(operadic_compose(f, g, c.i), h, c.i + c.j - 1),
                                       operadic_compose(f, operadic_compose(g, h, c.j), c.i)),
                            [&] { return show(c); });
            });
  run.sweep("corb-parallel-associativity", "operad axioms for CoRB: parallel associativity", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              if (c.n < 2) c.f = operadic_compose(generator_value(Generator::mu), c.f, 1);
              const int n = c.f.arity();
              int a = draw(rng, 1, n - 1), b = draw(rng, a + 1, n);
              CorbMorphism f = forget_brackets(c.f), g = forget_brackets(c.g), h = forget_brackets(c.h);
              return unless(corb_equal(operadic_compose(operadic_compose(f, g, a), h, b + c.m - 1),
                                       operadic_compose(operadic_compose(f, h, b), g, a)),
                            [&] { return fmt::format("{} a={} b={}", show(c), a, b); });
            });
  run.sweep("corb-unit", "operad axioms for CoRB: unit", full, [&](std::mt19937_64& rng, long) {
    Composite c = random_composite(rng);
    CorbMorphism f = forget_brackets(c.f), u = forget_brackets(unit);
    return unless(corb_equal(operadic_compose(u, f, 1), f) && corb_equal(operadic_compose(f, u, c.i), f),
                  [&] { return show(c); });
  });
  run.sweep("corb-equivariance", "operad axioms for CoRB: symmetric group equivariance", full,
            [](std::mt19937_64& rng, long) {
              Composite c = random_composite(rng);
              Permutation sigma = random_perm(rng, c.n), tau = random_perm(rng, c.m);
              CorbMorphism f = forget_brackets(c.f), g = forget_brackets(c.g);
              return unless(corb_equal(sigma_act(block_relabelling(sigma, tau, c.i), operadic_compose(f, g, c.i)),
                                       operadic_compose(sigma_act(sigma, f), sigma_act(tau, g), sigma(c.i))),
                            [&] { return fmt::format("{} sigma={} tau={}", show(c), sigma.one_line(), tau.one_line()); });
            });
  run.sweep("forget-brackets", "forgetting brackets is a map of operads", full, [](std::mt19937_64& rng, long) {
    Composite c = random_composite(rng);
    Permutation sigma = random_perm(rng, c.n);
    bool ok = corb_equal(forget_brackets(operadic_compose(c.f, c.g, c.i)),
                         operadic_compose(forget_brackets(c.f), forget_brackets(c.g), c.i)) &&
              parb_equal(lift(forget_brackets(c.f), c.f.source, c.f.target), c.f) &&
              corb_equal(forget_brackets(sigma_act(sigma, c.f)), sigma_act(sigma, forget_brackets(c.f)));
    return unless(ok, [&] { return show(c); });
  });

  for (const Relation& rel : defining_relations())
    run.fact("defining-relation-" + rel.name, "defining relation " + rel.name + " of PaRB", [&] {
      return unless(parb_equal(ev(rel.lhs.c_str()), ev(rel.rhs.c_str())), rel.lhs + " != " + rel.rhs);
    });

  run.sweep("express-section", "every morphism is a composite of generators", 300, [](std::mt19937_64& rng, long) {
    ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 8);
    for (Waypoint w : {Waypoint::left_comb, Waypoint::right_comb}) {
      OperadExpr e = express(f, w);
      if (!parb_equal(eval_expr(e), f) || !parb_equal(eval_expr(expr_inverse(e)), parb_inverse(f)))
        return to_string(f);
    }
    return Outcome();
  });
}

// ---- cyclic-axioms ----

void cyclic_axioms(Run& run) {
  const std::string order = "cyclic structure: the rotation z_{n+1} has order n+1";

  run.fact("z-order-objects", order, [] {
    for (int n = 1; n <= 4; ++n)
      for (const ParenWord& p : all_paren_words(n)) {
        ParenWord q = p;
        for (int k = 0; k <= n; ++k) q = z_on_object(q);
        if (q != p) return p.str();
      }
    return Outcome();
  });
  run.fact("z-order-generators", order, [] {
    for (Generator g : all_generators()) {
      ParbMorphism f = generator_value(g), it = f;
      for (int k = 0; k <= f.arity(); ++k) it = z_on_morphism(it);
      if (!parb_equal(it, f)) return std::string(generator_name(g));
    }
    return Outcome();
  });
  run.sweep("z-order-random", order, 200, [](std::mt19937_64& rng, long) {
    int n = draw(rng, 1, 4);
    ParbMorphism f = random_morphism(rng, n, 6), it = f;
    for (int k = 0; k <= n; ++k) it = z_fast(it);
    return unless(parb_equal(it, f), [&] { return to_string(f); });
  });
  run.sweep("z-fast-agrees", "cyclic structure: cached rotation agrees with rotation of expressions", 200,
            [](std::mt19937_64& rng, long) {
              ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 6);
              return unless(parb_equal(z_fast(f), z_on_morphism(f)), [&] { return to_string(f); });
            });

  run.fact("s4-relations", "rotation and transposition generate an action of S4 on the associator", [] {
    ParbMorphism a = generator_value(Generator::alpha);
    Permutation s = Permutation::from_one_line("213");
    auto z = [](const ParbMorphism& f) { return z_on_morphism(f); };
    auto t = [&](const ParbMorphism& f) { return sigma_act(s, f); };
    if (!parb_equal(z(z(z(z(a)))), a)) return Outcome("z^4 alpha != alpha");
    if (!parb_equal(z(t(z(t(a)))), t(z(z(z(a)))))) return Outcome("z t z t alpha != t z^3 alpha");
    return unless(parb_equal(t(z(z(t(z(z(a)))))), z(z(t(z(z(t(a))))))), "t z^2 t z^2 alpha != z^2 t z^2 t alpha");
  });

  run.sweep("insertion-compatibility", "cyclic structure: compatibility with insertion, both cases", 300,
            [](std::mt19937_64& rng, long) {
              int n = draw(rng, 1, 3), m = draw(rng, 1, 3);
              ParbMorphism x = random_morphism(rng, n, 5), y = random_morphism(rng, m, 5);
              int i = draw(rng, 1, n);
              ParbMorphism lhs = z_fast(operadic_compose(x, y, i));
              ParbMorphism rhs =
                  i >= 2 ? operadic_compose(z_fast(x), y, i - 1) : operadic_compose(z_fast(y), z_fast(x), m);
              return unless(parb_equal(lhs, rhs), [&] { return fmt::format("x={} | y={} | i={}", to_string(x), to_string(y), i); });
            });

  run.sweep("waypoint-independence", "cyclic structure: well defined on morphisms", 200,
            [](std::mt19937_64& rng, long) {
              ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 6);
              return unless(parb_equal(z_on_morphism(f, 1, Waypoint::left_comb), z_on_morphism(f, 1, Waypoint::right_comb)),
                            [&] { return to_string(f); });
            });

  run.sweep("functoriality", "cyclic structure: the rotation is a functor", 200, [](std::mt19937_64& rng, long) {
    ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 6);
    ParbMorphism g = random_morphism_from(rng, f.target, 6);
    ParbMorphism zf = z_fast(f);
    bool ok = zf.source == z_on_object(f.source) && zf.target == z_on_object(f.target) &&
              parb_equal(z_fast(cat_compose(f, g)), cat_compose(zf, z_fast(g)));
    return unless(ok, [&] { return fmt::format("f={} | g={}", to_string(f), to_string(g)); });
  });
}

// ---- lemma-identities ----

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

Outcome equal_or(const ParbMorphism& got, const ParbMorphism& want) {
  return unless(parb_equal(got, want), [&] { return fmt::format("got {} want {}", to_string(got), to_string(want)); });
}

void lemma_identities(Run& run) {
  const Permutation c3 = display_relabelling(3), c4 = display_relabelling(4);
  const ParbMorphism a = ev("alpha"), ai = ev("alpha^-1");

  run.fact("x12", "rotation of the pure braid generator x12", [&] {
    ParbMorphism x12 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s1 s1"));
    ParbMorphism x23 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s2 s2"));
    RibbonBraid w(full_twist(3), {0, 0, 0});
    ParbMorphism core = on_object("((1 2) 3)", RibbonBraid::twist(3, 1, -2) * x23.rb * rb_inverse(w));
    return equal_or(z_displayed(x12), sigma_act(c3, chain({ai, core, a})));
  });
  run.fact("x23", "rotation of the pure braid generator x23", [&] {
    ParbMorphism x12 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s1 s1"));
    ParbMorphism x23 = on_object("((1 2) 3)", parse_rbraid("rbraid n=3: s2 s2"));
    return equal_or(z_displayed(x23), sigma_act(c3, chain({ai, x12, a})));
  });
  run.fact("z-alpha", "rotation of the associator", [&] {
    Outcome o = equal_or(z_displayed(a), sigma_act(c3, ai));
    if (o.empty()) o = equal_or(z_displayed(ai), sigma_act(c3, a));
    if (o.empty()) o = equal_or(z_on_morphism(a, 2), a);
    return o;
  });

  struct CompositeCase {
    const char* id;
    const char* source;
    const char* displayed;
  };
  const CompositeCase composites[] = {
      {"composite-alpha-o3-id2", "alpha mu o3", "alpha^-1 mu o2"},
      {"composite-id2-o1-alpha", "mu alpha o1", "alpha^-1 mu o3"},
      {"composite-alpha-o2-id2", "alpha mu o2", "alpha^-1 mu o1"},
      {"composite-id2-o2-alpha", "mu alpha o2", "mu alpha o1"},
  };
  for (const CompositeCase& cc : composites)
    run.fact(cc.id, "rotation of the four associator composites in arity 4",
             [&] { return equal_or(z_displayed(ev(cc.source)), sigma_act(c4, ev(cc.displayed))); });
  run.fact("composites-by-insertion", "rotation of the four associator composites in arity 4", [&] {
    ParbMorphism mu = ev("mu");
    Outcome o = equal_or(z_on_morphism(ev("alpha mu o3")), operadic_compose(z_on_morphism(a), mu, 2));
    if (o.empty()) o = equal_or(z_on_morphism(ev("mu alpha o1")), operadic_compose(z_on_morphism(a), z_on_morphism(mu), 3));
    if (o.empty()) o = equal_or(z_on_morphism(ev("alpha mu o2")), operadic_compose(z_on_morphism(a), mu, 1));
    if (o.empty()) o = equal_or(z_on_morphism(ev("mu alpha o2")), operadic_compose(z_on_morphism(mu), a, 1));
    return o;
  });

  run.fact("h1-image", "rotation of the first hexagon", [] {
    ParbMorphism img = z_displayed(ev("alpha beta mu o2 . alpha perm[231]* ."));
    if (img.source != parse_paren("(2 (3 1))")) return "source " + img.source.str();
    RibbonBraid want = parse_rbraid("rbraid n=3: s2^-1 s1^-1 s2^-1 s2^-1 t2^-1 t3^-1");
    if (!rb_equals(img.rb, want)) return "ribbon braid " + to_string(img.rb);
    return equal_or(img, z_displayed(ev("mu beta o1 alpha perm[213]* . mu beta o2 perm[213]* .")));
  });
  run.fact("h2-image", "rotation of the second hexagon", [] {
    ParbMorphism img = z_displayed(ev("alpha^-1 beta mu o1 . alpha^-1 perm[312]* ."));
    if (img.source != parse_paren("((2 3) 1)")) return "source " + img.source.str();
    if (img.target != parse_paren("((2 1) 3)")) return "target " + img.target.str();
    if (!rb_equals(img.rb, parse_rbraid("rbraid n=3: t2^-1 s2^-1"))) return "ribbon braid " + to_string(img.rb);
    return equal_or(img, z_displayed(ev("mu beta o2 alpha^-1 perm[132]* . mu beta o1 perm[132]* .")));
  });

  for (const Relation& rel : defining_relations())
    run.fact("z-preserves-" + rel.name, "rotation preserves the defining relation " + rel.name, [&] {
      OperadExpr lhs = parse_expr(rel.lhs), rhs = parse_expr(rel.rhs);
      for (int k = 1; k <= expr_arity(lhs); ++k)
        if (!parb_equal(eval_expr(z_on_expr(lhs, k)), eval_expr(z_on_expr(rhs, k))))
          return fmt::format("power {}", k);
      return Outcome();
    });
}

// ---- gt-relations ----

void gt_relations(Run& run) {
  const GtElement one = GtElement::identity();
  const GtElement mirror = GtElement::discrete(-1, FreeWord(2));
  const HexagonConvention conv = run.opt.hexagon;

  run.fact("identity-relations", "GT relations on the identity element",
           [&] { return failing_checks(gt_check_discrete(one, conv)); });
  run.fact("identity-relations-truncated", "GT relations on the identity element, truncated",
           [&] { return failing_checks(gt_check_truncated(GtElement::identity(run.opt.degree), conv)); });
  run.fact("identity-preserves", "GT action preserves the defining relations",
           [&] { return failing_checks(check_preserves_parb(one)); });
  run.sweep("identity-endomorphism", "the identity element induces the identity endomorphism", 100,
            [&](std::mt19937_64& rng, long k) {
              ParbMorphism f = k < 8 ? generator_value(all_generators()[k]) : random_morphism(rng, draw(rng, 1, 4), 6);
              return unless(parb_equal(gt_apply(one, f), f), [&] { return to_string(f); });
            });
  run.sweep("mirror-endomorphism", "the induced endomorphism is a map of operads", 60,
            [&](std::mt19937_64& rng, long) {
              ParbMorphism f = random_morphism(rng, draw(rng, 1, 4), 6);
              ParbMorphism g = random_morphism_from(rng, f.target, 6);
              ParbMorphism h = random_morphism(rng, draw(rng, 1, 3), 4);
              int i = draw(rng, 1, f.arity());
              bool ok = parb_equal(gt_apply(mirror, cat_compose(f, g)), cat_compose(gt_apply(mirror, f), gt_apply(mirror, g))) &&
                        parb_equal(gt_apply(mirror, operadic_compose(f, h, i)),
                                   operadic_compose(gt_apply(mirror, f), gt_apply(mirror, h), i));
              return unless(ok, [&] { return fmt::format("f={} | g={} | h={}", to_string(f), to_string(g), to_string(h)); });
            });

  run.sweep("group-law-discrete", "GT group law: unit and associativity", 100, [](std::mt19937_64& rng, long) {
    GtElement a = GtElement::discrete(random_odd(rng), random_free_word(rng, 4));
    GtElement b = GtElement::discrete(random_odd(rng), random_free_word(rng, 4));
    GtElement c = GtElement::discrete(random_odd(rng), random_free_word(rng, 3));
    GtElement left = gt_multiply(gt_multiply(a, b), c), right = gt_multiply(a, gt_multiply(b, c));
    bool ok = gt_multiply(GtElement::identity(), a).word == a.word && gt_multiply(a, GtElement::identity()).word == a.word &&
              left.lambda == right.lambda && left.word == right.word;
    return unless(ok, [&] { return fmt::format("{} | {} | {}", to_string(a), to_string(b), to_string(c)); });
  });
  run.sweep("group-law-truncated", fmt::format("GT group law at truncation degree {}", run.opt.degree), 100,
            [&](std::mt19937_64& rng, long) {
              const int d = run.opt.degree;
              GtElement a = random_truncated(rng, d), b = random_truncated(rng, d), c = random_truncated(rng, d);
              GtElement ab = gt_multiply(a, b);
              GtElement left = gt_multiply(ab, c), right = gt_multiply(a, gt_multiply(b, c));
              bool ok = is_group_like(ab.f_series()) && gt_multiply(GtElement::identity(d), a).f_series() == a.f_series() &&
                        gt_multiply(a, GtElement::identity(d)).f_series() == a.f_series() && left.lambda == right.lambda &&
                        left.f_series() == right.f_series();
              return unless(ok, [&] { return fmt::format("{} | {} | {}", to_string(a), to_string(b), to_string(c)); });
            });

  for (const auto& [name, e] : {std::pair{"identity", one}, std::pair{"mirror", mirror}})
    for (const CheckResult& c : check_cyclic_lift(e))
      run.fact(fmt::format("cyclic-lift-{}-{}", name, c.id), "GT action commutes with the rotation",
               [&] { return unless(c.pass, c.detail.empty() ? std::string("fails") : c.detail); });

  // Agreement between the relations and preservation of PaRB.
  std::vector<GtElement> samples;
  for (long l = -5; l <= 5; l += 2) samples.push_back(GtElement::discrete(l, FreeWord(2)));
  {
    std::mt19937_64 rng = run.rng_for("relations-imply-preservation");
    while (static_cast<long>(samples.size()) < 60)
      samples.push_back(GtElement::discrete(random_odd(rng), random_free_word(rng, 6)));
  }
  samples.resize(static_cast<std::size_t>(run.samples(static_cast<long>(samples.size()))));
  std::vector<std::string> preserved_only, other_convention;
  const HexagonConvention other =
      conv == HexagonConvention::drinfeld ? HexagonConvention::displayed : HexagonConvention::drinfeld;
  int agree = 0;
  run.sweep("relations-imply-preservation", "GT relations imply preservation of the defining relations",
            static_cast<long>(samples.size()), [&](std::mt19937_64&, long k) {
              const GtElement& e = samples[static_cast<std::size_t>(k)];
              bool relations = all_pass(gt_check_discrete(e, conv));
              bool preserved = all_pass(check_preserves_parb(e));
              if (relations == preserved) ++agree;
              if (preserved && !relations) preserved_only.push_back(to_string(e));
              if (!preserved && all_pass(gt_check_discrete(e, other))) other_convention.push_back(to_string(e));
              return unless(!relations || preserved, to_string(e));
            });
  run.info("preservation-without-relations", "GT relations imply preservation of the defining relations",
           fmt::format("{} of {} samples agree; preserved without the relations: {}", agree, samples.size(),
                       preserved_only.empty() ? std::string("none") : fmt::format("{}", fmt::join(preserved_only, ", "))));
  run.info("other-hexagon-convention", "placement of the mu-powers in the hexagon relation",
           fmt::format("accepted by the {} placement but not preserving: {}",
                       other == HexagonConvention::drinfeld ? "drinfeld" : "displayed",
                       other_convention.empty() ? std::string("none") : fmt::format("{}", fmt::join(other_convention, ", "))));
}

// ---- tangle-relations ----

const TLModel& model_for(const SuiteOptions& o) {
  static const TLModel plain(false), flipped(true);
  return o.flip ? flipped : plain;
}

Outcome tl_equal_or(const TLMorphism& got, const TLMorphism& want) {
  return unless(got == want, [&] { return fmt::format("got {} want {}", to_string(got), to_string(want)); });
}

void tangle_relations(Run& run) {
  const TLModel& model = model_for(run.opt);
  auto ev_t = [&](const char* text) { return eval_tangle(model, parse_tangle(text)); };

  run.fact("zigzag-left", "zig-zag identity", [] {
    MetricPropMorphism n = zigzag_normalize(snake_left());
    return unless(metric_equal(n, MetricPropMorphism(1)), to_string(n));
  });
  run.fact("zigzag-right", "zig-zag identity", [] {
    MetricPropMorphism n = zigzag_normalize(snake_right());
    return unless(metric_equal(n, MetricPropMorphism(1)), to_string(n));
  });
  run.sweep("normalize-idempotent", "zig-zag normalization", 150, [&](std::mt19937_64& rng, long) {
    MetricPropMorphism r = random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 8), 5);
    MetricPropMorphism once = zigzag_normalize(r);
    bool ok = metric_equal(zigzag_normalize(once), once) && eval_metric(model, once) == eval_metric(model, r);
    return unless(ok, [&] { return to_string(r); });
  });

  struct Pinned {
    const char* id;
    const char* anchor;
    const char* lhs;
    const char* rhs;
  };
  const Pinned pinned[] = {
      {"turaev-snake-1", "Turaev relations: snake", "tangle m=1 n=1; cup 0 1; cap 1 0", "tangle m=1 n=1"},
      {"turaev-snake-2", "Turaev relations: snake", "tangle m=1 n=1; cup 1 0; cap 0 1", "tangle m=1 n=1"},
      {"turaev-naturality-cup-over", "Turaev relations: naturality of the pairing",
       "tangle m=1 n=3; cup 0 1; rbraid n=3: s2 s1", "tangle m=1 n=3; cup 1 0"},
      {"turaev-naturality-cup-under", "Turaev relations: naturality of the pairing",
       "tangle m=1 n=3; cup 0 1; rbraid n=3: s2^-1 s1^-1", "tangle m=1 n=3; cup 1 0"},
      {"turaev-naturality-cap-over", "Turaev relations: naturality of the pairing",
       "tangle m=3 n=1; rbraid n=3: s1 s2; cap 0 1", "tangle m=3 n=1; cap 1 0"},
      {"turaev-naturality-cap-under", "Turaev relations: naturality of the pairing",
       "tangle m=3 n=1; rbraid n=3: s1^-1 s2^-1; cap 0 1", "tangle m=3 n=1; cap 1 0"},
      {"turaev-balancing", "Turaev relations: balancing",
       "tangle m=2 n=2; cup 2 0; cup 3 1; rbraid n=6: s2 s1 s3 s2; cap 3 1; cap 2 0",
       "tangle m=2 n=2; rbraid n=2: t1 t2 s1 s1"},
      {"turaev-twist-braiding", "Turaev relations: twist and braiding",
       "tangle m=2 n=2; rbraid n=2: s1; rbraid n=2: t2", "tangle m=2 n=2; rbraid n=2: t1; rbraid n=2: s1"},
      {"turaev-kink-positive", "Turaev relations: a kink is a twist", "tangle m=1 n=1; cup 1 0; rbraid n=3: s1; cap 1 0",
       "tangle m=1 n=1; rbraid n=1: t1"},
      {"turaev-kink-negative", "Turaev relations: a kink is a twist",
       "tangle m=1 n=1; cup 1 0; rbraid n=3: s1^-1; cap 1 0", "tangle m=1 n=1; rbraid n=1: t1^-1"},
      {"turaev-twist-cap", "Turaev relations: twist against the pairing", "tangle m=2 n=0; rbraid n=2: s1; cap 0 0",
       "tangle m=2 n=0; rbraid n=2: t1^-1; cap 0 0"},
      {"turaev-twist-cup", "Turaev relations: twist against the pairing", "tangle m=0 n=2; cup 0 0; rbraid n=2: t1",
       "tangle m=0 n=2; cup 0 0; rbraid n=2: t2"},
  };
  for (const Pinned& p : pinned) run.fact(p.id, p.anchor, [&] { return tl_equal_or(ev_t(p.lhs), ev_t(p.rhs)); });
  run.fact("turaev-hexagon-1", "Turaev relations: hexagons",
           [&] { return tl_equal_or(ev_t("tangle m=3 n=3; rbraid n=3: s1 s2"), model.cabled_crossing(1, 2)); });
  run.fact("turaev-hexagon-2", "Turaev relations: hexagons",
           [&] { return tl_equal_or(ev_t("tangle m=3 n=3; rbraid n=3: s2 s1"), model.cabled_crossing(2, 1)); });
  run.fact("turaev-bundle-twist", "Turaev relations: balancing",
           [&] { return tl_equal_or(ev_t("tangle m=2 n=2; rbraid n=2: t1 t2 s1 s1"), model.bundle_twist(2)); });

  run.sweep("envelope-axioms", "envelope prop axioms", 100, [](std::mt19937_64& rng, long) {
    EnvMorphism b = random_env(rng, draw(rng, 1, 3), 2);
    EnvMorphism a = random_env(rng, b.source(), 2);
    EnvMorphism c = random_env(rng, 1, b.target());
    EnvMorphism b2 = random_env(rng, draw(rng, 1, 2), 2);
    EnvMorphism a2 = random_env(rng, b2.source(), 2);
    EnvMorphism d = random_env(rng, 2, 2);
    bool ok = env_equal(env_compose(EnvMorphism::identity(a.source()), a), a) &&
              env_equal(env_compose(a, EnvMorphism::identity(a.target())), a) &&
              (c.source() != b.target() || env_equal(env_compose(env_compose(a, b), c), env_compose(a, env_compose(b, c)))) &&
              env_equal(env_compose(env_tensor(a, a2), env_tensor(b, b2)), env_tensor(env_compose(a, b), env_compose(a2, b2))) &&
              env_equal(env_tensor(env_tensor(a, b2), d), env_tensor(a, env_tensor(b2, d)));
    return unless(ok, [&] { return fmt::format("a={} | b={}", to_string(a), to_string(b)); });
  });
  run.sweep("envelope-embedding", "operations embed into the envelope prop", 60, [](std::mt19937_64& rng, long) {
    int n = draw(rng, 1, 3), m = draw(rng, 1, 3), i = draw(rng, 1, n);
    ParbMorphism f = random_morphism(rng, n, 5), g = random_morphism(rng, m, 5);
    EnvMorphism left = env_tensor(env_tensor(EnvMorphism::identity(i - 1), EnvMorphism::embed(g)), EnvMorphism::identity(n - i));
    Permutation p = random_perm(rng, n);
    bool ok = env_equal(env_compose(left, EnvMorphism::embed(f)), EnvMorphism::embed(operadic_compose(f, g, i))) &&
              env_equal(env_compose(EnvMorphism::permutation(p), EnvMorphism::embed(f)),
                        EnvMorphism::embed(sigma_act(p.inverse(), f)));
    return unless(ok, [&] { return fmt::format("f={} | g={} | i={}", to_string(f), to_string(g), i); });
  });
  run.sweep("slice-functor", "tangle diagrams of metric morphisms", 60, [&](std::mt19937_64& rng, long) {
    MetricPropMorphism x = random_metric(rng, draw(rng, 0, 2), draw(rng, 1, 4), 4);
    MetricPropMorphism y = random_metric(rng, x.target(), draw(rng, 1, 4), 4);
    MetricPropMorphism z = random_metric(rng, draw(rng, 0, 2), draw(rng, 1, 3), 4);
    bool ok = turaev_functor(metric_compose(x, y)) == tangle_stack(turaev_functor(x), turaev_functor(y)) &&
              turaev_functor(metric_tensor(x, z)) == tangle_juxtapose(turaev_functor(x), turaev_functor(z)) &&
              eval_tangle(model, turaev_functor(x)) == eval_metric(model, x);
    return unless(ok, [&] { return fmt::format("x={} | y={}", to_string(x), to_string(y)); });
  });

  auto transposes = [&](const ParbMorphism& f, int w) {
    const int n = (f.arity() + 1) * w;
    ParbMorphism zf = z_on_morphism(f);
    for (const Matching& b : tl_basis(n, 0)) {
      MetricPropMorphism psi = invariant_from_matching(n, b);
      if (!(eval_metric(model, transpose(f, psi, w)) == eval_metric(model, act_on_invariant(zf, psi, w))))
        return fmt::format("{} at width {} on {}", to_string(f), w, matching_string(b));
    }
    return Outcome();
  };
  run.fact("transpose-generators", "cyclic equivariance of the transpose under TL evaluation", [&] {
    for (Generator g : all_generators()) {
      ParbMorphism f = generator_value(g);
      Outcome o = transposes(f, 2);
      if (o.empty() && f.arity() % 2) o = transposes(f, 1);
      if (!o.empty()) return o;
    }
    return Outcome();
  });
  run.sweep("transpose-random", "cyclic equivariance of the transpose under TL evaluation", 100,
            [&](std::mt19937_64& rng, long) {
              int n = draw(rng, 1, 3);
              ParbMorphism f = random_morphism(rng, n, 5);
              Outcome o = transposes(f, 2);
              if (o.empty() && n % 2) o = transposes(f, 1);
              return o;
            });

  const GtElement one = GtElement::identity(), mirror = GtElement::discrete(-1, FreeWord(2));
  run.fact("gt-identity-zigzag", "GT identity preserves the zig-zags", [&] {
    for (DualityRule rule : {DualityRule::nu, DualityRule::rho})
      for (const MetricPropMorphism& s : {snake_left(), snake_right()}) {
        MetricPropMorphism n = zigzag_normalize(gt_act_on_tangles(one, s, rule));
        if (!metric_equal(n, MetricPropMorphism(1))) return to_string(n);
      }
    return Outcome();
  });
  run.sweep("gt-identity-trivial", "GT identity acts trivially on tangles", 60, [&](std::mt19937_64& rng, long) {
    MetricPropMorphism m = random_metric(rng, draw(rng, 0, 3), draw(rng, 1, 6), 5);
    return unless(metric_equal(zigzag_normalize(gt_act_on_tangles(one, m)), zigzag_normalize(m)),
                  [&] { return to_string(m); });
  });
  run.fact("gt-mirror-zigzag", "GT mirror element preserves the zig-zags in TL", [&] {
    for (DualityRule rule : {DualityRule::nu, DualityRule::rho})
      for (const MetricPropMorphism& s : {snake_left(), snake_right()}) {
        TLMorphism v = eval_metric(model, gt_act_on_tangles(mirror, s, rule));
        if (!(v == TLMorphism::identity(1))) return to_string(v);
      }
    return Outcome();
  });
  {
    std::vector<std::string> lines;
    for (const char* text : {"gt lambda=1 f=e", "gt lambda=-1 f=e", "gt lambda=3 f=x", "gt lambda=1 f=x y x^-1 y^-1"}) {
      GtElement e = parse_gt(text);
      TLMorphism nu = eval_metric(model, nu_inverse(e)), rho = eval_metric(model, rho_inverse(e));
      lines.push_back(fmt::format("{}: {}", text, nu == rho ? "equal" : "differ"));
    }
    run.info("nu-vs-rho", "GT action on the duality: the two correction rules",
             fmt::format("{}", fmt::join(lines, "; ")));
  }
}

// ---- tl-equivariance ----

void tl_equivariance(Run& run) {
  const TLModel& model = model_for(run.opt);
  const LaurentA delta = -A_pow(2) - A_pow(-2);

  run.fact("loop-value", "TL loop value solved from c c^-1 = id", [&] {
    if (!(model.loop_value() == delta)) return "solved " + to_string(model.loop_value());
    TLMorphism c = model.crossing(1), ci = model.crossing(-1);
    if (!(tl_compose(c, ci, delta) == TLMorphism::identity(2))) return Outcome("c c^-1 != id");
    return unless(!(tl_compose(c, ci, delta + 1) == TLMorphism::identity(2)), "loop value not forced");
  });
  run.fact("twist-scalar", "TL twist solved from the balancing relation", [&] {
    LaurentA want = model.flipped() ? -A_pow(-3) : -A_pow(3);
    if (!(model.twist_scalar() == want)) return "solved " + to_string(model.twist_scalar());
    return unless(model.balancing_holds(), "balancing fails");
  });
  run.fact("catalan-counts", "TL dimensions are Catalan numbers", [] {
    const std::size_t catalan_numbers[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
      if (tl_basis(n, n).size() != catalan_numbers[n]) return fmt::format("{} -> {}", n, n);
      if (tl_basis(0, 2 * n).size() != catalan_numbers[n]) return fmt::format("0 -> {}", 2 * n);
    }
    return Outcome();
  });
  run.fact("generator-values", "TL images of the generators", [&] {
    for (Generator g : {Generator::mu, Generator::id, Generator::alpha, Generator::alpha_inv}) {
      ParbMorphism f = generator_value(g);
      if (!(model.eval(f) == TLMorphism::identity(f.arity()))) return std::string(generator_name(g));
    }
    if (!(model.eval(generator_value(Generator::beta)) == model.crossing())) return Outcome("beta");
    return unless(model.eval(generator_value(Generator::tau)) == TLMorphism::identity(1).scaled(model.twist_scalar()), "tau");
  });
  for (const Relation& rel : defining_relations())
    run.fact("defining-relation-" + rel.name, "TL evaluation respects the defining relation " + rel.name,
             [&] { return tl_equal_or(model.eval(parse_expr(rel.lhs)), model.eval(parse_expr(rel.rhs))); });

  run.sweep("functoriality", "TL evaluation is a map of operads", 200, [&](std::mt19937_64& rng, long) {
    int n = draw(rng, 1, 3);
    ParbMorphism f = random_morphism(rng, n, 6);
    ParbMorphism g = random_morphism_from(rng, f.target, 6);
    int m = draw(rng, 1, 3), i = draw(rng, 1, n);
    ParbMorphism h = random_morphism(rng, m, 4);
    Permutation sigma = random_perm(rng, n);
    bool ok = model.eval(cat_compose(f, g)) == model.compose(model.eval(f), model.eval(g)) &&
              model.eval(express(f)) == model.eval(f) &&
              model.eval(OperadExpr::operadic(express(f), express(h), i)) == model.eval(operadic_compose(f, h, i)) &&
              model.eval(sigma_act(sigma, f)) == model.eval(f);
    return unless(ok, [&] { return fmt::format("f={} | g={} | h={} | i={}", to_string(f), to_string(g), to_string(h), i); });
  });

  auto equivariant = [&](const ParbMorphism& f) {
    ParbMorphism zf = z_on_morphism(f);
    if (!(model.invariant_action(zf, 2) == model.rotated_action(f, 2))) return fmt::format("{} at width 2", to_string(f));
    if (f.arity() % 2 && !(model.invariant_action(zf, 1) == model.rotated_action(f, 1)))
      return fmt::format("{} at width 1", to_string(f));
    return Outcome();
  };
  run.fact("equivariance-generators", "cyclic equivariance of TL on invariants", [&] {
    for (Generator g : all_generators()) {
      Outcome o = equivariant(generator_value(g));
      if (!o.empty()) return o;
    }
    return Outcome();
  });
  run.sweep("equivariance-random", "cyclic equivariance of TL on invariants", 100,
            [&](std::mt19937_64& rng, long) { return equivariant(random_morphism(rng, draw(rng, 1, 3), 5)); });
}

using SuiteFn = void (*)(Run&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"braid-oracle", braid_oracle},         {"operad-axioms", operad_axioms},
      {"cyclic-axioms", cyclic_axioms},       {"lemma-identities", lemma_identities},
      {"gt-relations", gt_relations},         {"tangle-relations", tangle_relations},
      {"tl-equivariance", tl_equivariance},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"braid-oracle",     "operad-axioms", "cyclic-axioms",  "lemma-identities",
                                              "gt-relations",     "tangle-relations", "tl-equivariance"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw MalformedInput(fmt::format("unknown suite '{}'; known: {}", name, fmt::join(suite_names(), ", ")));
  Report report{name, {}};
  if (options.budget && *options.budget <= 0) return report;
  Run run(options);
  it->second(run);
  report.records = std::move(run.records);
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const Record& a, const Record& b) { return a.id < b.id; });
  return report;
}

std::string report_lines(const Report& r) {
  std::string out;
  for (const Record& rec : r.records) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["id"] = rec.id;
    j["anchor"] = rec.anchor;
    j["status"] = status_name(rec.status);
    j["detail"] = rec.detail;
    j["witness"] = rec.witness;
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json s;
  s["suite"] = r.suite;
  s["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"info", r.count(Status::info)}};
  out += s.dump() + "\n";
  return out;
}

}  // namespace parb
