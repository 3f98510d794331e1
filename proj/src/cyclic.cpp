#include "parb/cyclic.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "parb/error.hpp"

namespace parb {

namespace {

int mod(int k, int m) { return ((k % m) + m) % m; }

int generator_arity(Generator g) {
  switch (g) {
    case Generator::id:
    case Generator::tau:
    case Generator::tau_inv:
      return 1;
    case Generator::alpha:
    case Generator::alpha_inv:
      return 3;
    default:
      return 2;
  }
}

// The relabelling rho with r^k o sigma = rho o r^j, where j = sigma^-1(k).
std::pair<Permutation, int> pass_through(const Permutation& sigma, int k) {
  int n = sigma.size();
  int j = sigma.inverse()(k);
  ExtendedPermutation r = ExtendedPermutation::rotation(n);
  ExtendedPermutation rho = r.pow(k) * ExtendedPermutation::fixing_zero(sigma) * r.pow(-j);
  std::vector<int> im(rho.images().begin() + 1, rho.images().end());
  return {Permutation(std::move(im)), j};
}

}  // namespace

ParenWord z_on_object(const ParenWord& p, int power) {
  int n = p.size();
  return reroot(sigma_plus_act(ExtendedPermutation::rotation(n).pow(mod(power, n + 1)), unroot(p)));
}

OperadExpr z_on_generator(Generator g, int power) {
  int k = mod(power, generator_arity(g) + 1);
  if (k == 0) return OperadExpr::gen(g);
  switch (g) {
    case Generator::id:
    case Generator::tau:
    case Generator::tau_inv:
      return OperadExpr::gen(g);
    case Generator::mu:
      return identity_expr(z_on_object(parse_paren("(1 2)"), k));
    case Generator::alpha:
    case Generator::alpha_inv: {
      ParbMorphism a = generator_value(g);
      return rebracket_expr(z_on_object(a.source, k), z_on_object(a.target, k));
    }
    case Generator::beta:
      return parse_expr(k == 1 ? "beta^-1 perm[21]* mu tau^-1 o2 perm[21]* ."
                               : "beta^-1 perm[21]* mu tau^-1 o1 perm[21]* .");
    case Generator::beta_inv:
      return expr_inverse(z_on_generator(Generator::beta, k));
  }
  throw MalformedInput("unknown generator");
}

int expr_arity(const OperadExpr& e) {
  switch (e.kind()) {
    case OperadExpr::Kind::generator: return generator_arity(e.generator());
    case OperadExpr::Kind::compose: return expr_arity(e.first());
    case OperadExpr::Kind::operadic: return expr_arity(e.first()) + expr_arity(e.second()) - 1;
    case OperadExpr::Kind::relabel: return e.perm().size();
  }
  return 0;
}

namespace {

OperadExpr z_expr(const OperadExpr& e, int k, int n) {
  k = mod(k, n + 1);
  if (k == 0) return e;
  switch (e.kind()) {
    case OperadExpr::Kind::generator:
      return z_on_generator(e.generator(), k);
    case OperadExpr::Kind::compose:
      return OperadExpr::compose(z_expr(e.first(), k, n), z_expr(e.second(), k, n));
    case OperadExpr::Kind::relabel: {
      auto [rho, j] = pass_through(e.perm(), k);
      OperadExpr inner = z_expr(e.first(), j, n);
      return rho.is_identity() ? inner : OperadExpr::relabel(std::move(rho), std::move(inner));
    }
    case OperadExpr::Kind::operadic: {
      const OperadExpr& x = e.first();
      const OperadExpr& y = e.second();
      int i = e.index();
      int nx = expr_arity(x), m = expr_arity(y);
      if (k < i) return OperadExpr::operadic(z_expr(x, k, nx), y, i - k);
      if (k < i + m) {
        int j = k - i + 1;
        return OperadExpr::operadic(z_expr(y, j, m), z_expr(x, i, nx), m + 1 - j);
      }
      return OperadExpr::operadic(z_expr(x, k - m + 1, nx), y, i - k + nx + m);
    }
  }
  throw CompositionError("unknown expression node");
}

}  // namespace

OperadExpr z_on_expr(const OperadExpr& e, int power) { return z_expr(e, power, expr_arity(e)); }

ParbMorphism z_on_morphism(const ParbMorphism& f, int power, Waypoint w) {
  int k = mod(power, f.arity() + 1);
  if (k == 0) return f;
  return eval_expr(z_on_expr(express(f, w), k));
}

// ---- cached route ----

namespace {

struct StepCache {
  std::mutex lock;
  // (n, kind, index, power) -> image rb; kind 0 twist, 1 and -1 crossings
  std::map<std::tuple<int, int, int, int>, RibbonBraid> images;
};

StepCache& step_cache() {
  static StepCache cache;
  return cache;
}

const RibbonBraid& cached_step(int n, int kind, int index, int power) {
  StepCache& c = step_cache();
  std::lock_guard<std::mutex> guard(c.lock);
  auto key = std::make_tuple(n, kind, index, power);
  auto it = c.images.find(key);
  if (it != c.images.end()) return it->second;
  OperadExpr e = kind == 0 ? twist_step_expr(n, index, 1) : crossing_step_expr(n, index, kind);
  RibbonBraid rb = rb_canonical(eval_expr(z_on_expr(e, power)).rb);
  return c.images.emplace(key, std::move(rb)).first->second;
}

}  // namespace

ParbMorphism z_fast(const ParbMorphism& f, int power) {
  const int n = f.arity();
  if (n > 6) throw MalformedInput("cached rotation supports arity at most 6");
  int k = mod(power, n + 1);
  if (k == 0) return f;
  Permutation sigma = forget_parens(f.source);
  int j = sigma.inverse()(k);
  const RibbonBraid& rb = f.rb;
  RibbonBraid out = RibbonBraid::identity(n);
  for (int p = 1; p <= n; ++p)
    if (rb.twists[p - 1] != 0) out = out * rb_pow(cached_step(n, 0, p, j), rb.twists[p - 1]);
  Permutation order = Permutation::identity(n);
  for (const Letter& l : rb.braid.letters()) {
    int jj = order.inverse()(j);
    out = out * cached_step(n, l.sign, l.gen, jj);
    order = Permutation::adjacent(n, l.gen) * order;
    if (out.braid.length() > 64) out = rb_canonical(out);
  }
  return ParbMorphism(z_on_object(f.source, k), z_on_object(f.target, k), out);
}

Permutation display_relabelling(int n) {
  std::vector<int> im(n);
  for (int l = 1; l <= n; ++l) im[l - 1] = l % n + 1;
  return Permutation(std::move(im));
}

ParbMorphism z_displayed(const ParbMorphism& f) {
  return sigma_act(display_relabelling(f.arity()), z_on_morphism(f));
}

}  // namespace parb
