#include "parb/parb.hpp"

#include <cctype>
#include <vector>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

namespace {

constexpr std::size_t kCanonicalizeAbove = 64;

RibbonBraid tidy(RibbonBraid r) {
  if (r.braid.length() > kCanonicalizeAbove) return rb_canonical(r);
  return r;
}

void check_transport(const std::vector<int>& s, const std::vector<int>& t, const BraidWord& braid) {
  if (s.size() != t.size() || static_cast<int>(s.size()) != braid.strands())
    throw MalformedInput("arity mismatch between objects and ribbon braid");
  Permutation pi = underlying_permutation(braid);
  for (int p = 1; p <= braid.strands(); ++p)
    if (t[pi(p) - 1] != s[p - 1])
      throw MalformedInput("underlying permutation does not match source and target");
}

// Braid and twists of f o_p g where p is the bottom position of the insertion.
RibbonBraid insert_rb(const RibbonBraid& f, const RibbonBraid& g, int p) {
  int n = f.strands(), m = g.strands();
  int total = n + m - 1;
  std::vector<int> widths(n, 1);
  widths[p - 1] = m;
  int tw = f.twists[p - 1];
  BraidWord inner = full_twist(m).pow(tw) * g.braid;
  BraidWord braid = shift(inner, p - 1, total) * cable(f.braid, widths);
  std::vector<int> twists(total);
  for (int q = 1; q <= total; ++q) {
    if (q < p) twists[q - 1] = f.twists[q - 1];
    else if (q < p + m) twists[q - 1] = tw + g.twists[q - p];
    else twists[q - 1] = f.twists[q - m];
  }
  return tidy(RibbonBraid(std::move(braid), std::move(twists)));
}

int position_of(const std::vector<int>& order, int label) {
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] == label) return static_cast<int>(k) + 1;
  throw MalformedInput(fmt::format("no input labelled {}", label));
}

}  // namespace

ParbMorphism::ParbMorphism(ParenWord s, ParenWord t, RibbonBraid r)
    : source(std::move(s)), target(std::move(t)), rb(std::move(r)) {
  check_transport(source.leaves(), target.leaves(), rb.braid);
}

ParbMorphism ParbMorphism::identity(const ParenWord& object) {
  return ParbMorphism(object, object, RibbonBraid::identity(object.size()));
}

CorbMorphism::CorbMorphism(Permutation s, Permutation t, RibbonBraid r)
    : source(std::move(s)), target(std::move(t)), rb(std::move(r)) {
  check_transport(source.images(), target.images(), rb.braid);
}

CorbMorphism CorbMorphism::identity(const Permutation& object) {
  return CorbMorphism(object, object, RibbonBraid::identity(object.size()));
}

bool parb_equal(const ParbMorphism& a, const ParbMorphism& b) {
  return a.source == b.source && a.target == b.target && rb_equals(a.rb, b.rb);
}

bool corb_equal(const CorbMorphism& a, const CorbMorphism& b) {
  return a.source == b.source && a.target == b.target && rb_equals(a.rb, b.rb);
}

ParenWord transported_target(const ParenWord& source, const BraidWord& braid, const ParenWord& target_shape) {
  std::vector<int> s = source.leaves();
  if (static_cast<int>(s.size()) != braid.strands() || target_shape.size() != braid.strands())
    throw MalformedInput("arity mismatch");
  Permutation pi = underlying_permutation(braid);
  std::vector<int> t(s.size());
  for (int p = 1; p <= braid.strands(); ++p) t[pi(p) - 1] = s[p - 1];
  return relabel(shape_of(target_shape), Permutation(std::move(t)));
}

ParbMorphism cat_compose(const ParbMorphism& f, const ParbMorphism& g) {
  if (!(f.target == g.source))
    throw CompositionError(fmt::format("cannot compose: {} is not {}", f.target.str(), g.source.str()));
  ParbMorphism r;
  r.source = f.source;
  r.target = g.target;
  r.rb = tidy(f.rb * g.rb);
  return r;
}

ParbMorphism parb_inverse(const ParbMorphism& f) {
  ParbMorphism r;
  r.source = f.target;
  r.target = f.source;
  r.rb = rb_inverse(f.rb);
  return r;
}

ParbMorphism operadic_compose(const ParbMorphism& f, const ParbMorphism& g, int i) {
  if (i < 1 || i > f.arity())
    throw CompositionError(fmt::format("insertion index {} out of range 1..{}", i, f.arity()));
  int p = position_of(f.source.leaves(), i);
  ParbMorphism r;
  r.source = graft(f.source, g.source, i);
  r.target = graft(f.target, g.target, i);
  r.rb = insert_rb(f.rb, g.rb, p);
  return r;
}

ParbMorphism sigma_act(const Permutation& sigma, const ParbMorphism& f) {
  if (sigma.size() != f.arity()) throw MalformedInput("relabelling size mismatch");
  ParbMorphism r;
  r.source = relabel(f.source, sigma);
  r.target = relabel(f.target, sigma);
  r.rb = f.rb;
  return r;
}

ParbMorphism canonical(const ParbMorphism& f) {
  ParbMorphism r = f;
  r.rb = rb_canonical(f.rb);
  return r;
}

Permutation substitute_order(const Permutation& s, const Permutation& t, int i) {
  int m = t.size();
  std::vector<int> out;
  for (int v : s.images()) {
    if (v == i)
      for (int u : t.images()) out.push_back(u + i - 1);
    else
      out.push_back(v > i ? v + m - 1 : v);
  }
  return Permutation(std::move(out));
}

CorbMorphism cat_compose(const CorbMorphism& f, const CorbMorphism& g) {
  if (!(f.target == g.source))
    throw CompositionError(fmt::format("cannot compose: {} is not {}", f.target.one_line(), g.source.one_line()));
  CorbMorphism r;
  r.source = f.source;
  r.target = g.target;
  r.rb = tidy(f.rb * g.rb);
  return r;
}

CorbMorphism operadic_compose(const CorbMorphism& f, const CorbMorphism& g, int i) {
  if (i < 1 || i > f.arity())
    throw CompositionError(fmt::format("insertion index {} out of range 1..{}", i, f.arity()));
  int p = position_of(f.source.images(), i);
  CorbMorphism r;
  r.source = substitute_order(f.source, g.source, i);
  r.target = substitute_order(f.target, g.target, i);
  r.rb = insert_rb(f.rb, g.rb, p);
  return r;
}

CorbMorphism sigma_act(const Permutation& sigma, const CorbMorphism& f) {
  if (sigma.size() != f.arity()) throw MalformedInput("relabelling size mismatch");
  CorbMorphism r;
  r.source = f.source * sigma;
  r.target = f.target * sigma;
  r.rb = f.rb;
  return r;
}

CorbMorphism forget_brackets(const ParbMorphism& f) {
  return CorbMorphism(forget_parens(f.source), forget_parens(f.target), f.rb);
}

ParbMorphism lift(const CorbMorphism& f, const ParenWord& source_shape, const ParenWord& target_shape) {
  return ParbMorphism(relabel(shape_of(source_shape), f.source), relabel(shape_of(target_shape), f.target), f.rb);
}

std::string to_string(const ParbMorphism& f) {
  return fmt::format("{} -> {} : {}", f.source.str(), f.target.str(), to_string(f.rb));
}

// ---- generators ----

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::mu: return "mu";
    case Generator::id: return "id";
    case Generator::beta: return "beta";
    case Generator::beta_inv: return "beta^-1";
    case Generator::tau: return "tau";
    case Generator::tau_inv: return "tau^-1";
    case Generator::alpha: return "alpha";
    case Generator::alpha_inv: return "alpha^-1";
  }
  return "?";
}

Generator generator_inverse(Generator g) {
  switch (g) {
    case Generator::beta: return Generator::beta_inv;
    case Generator::beta_inv: return Generator::beta;
    case Generator::tau: return Generator::tau_inv;
    case Generator::tau_inv: return Generator::tau;
    case Generator::alpha: return Generator::alpha_inv;
    case Generator::alpha_inv: return Generator::alpha;
    default: return g;
  }
}

ParbMorphism generator_value(Generator g) {
  static const ParenWord p12 = parse_paren("(1 2)");
  static const ParenWord p21 = parse_paren("(2 1)");
  static const ParenWord left = parse_paren("((1 2) 3)");
  static const ParenWord right = parse_paren("(1 (2 3))");
  switch (g) {
    case Generator::mu: return ParbMorphism::identity(p12);
    case Generator::id: return ParbMorphism::identity(ParenWord::leaf());
    case Generator::beta: return ParbMorphism(p12, p21, RibbonBraid::crossing(2, 1, 1));
    case Generator::beta_inv: return ParbMorphism(p21, p12, RibbonBraid::crossing(2, 1, -1));
    case Generator::tau: return ParbMorphism(ParenWord::leaf(), ParenWord::leaf(), RibbonBraid::twist(1, 1, 1));
    case Generator::tau_inv: return ParbMorphism(ParenWord::leaf(), ParenWord::leaf(), RibbonBraid::twist(1, 1, -1));
    case Generator::alpha: return ParbMorphism(left, right, RibbonBraid::identity(3));
    case Generator::alpha_inv: return ParbMorphism(right, left, RibbonBraid::identity(3));
  }
  throw MalformedInput("unknown generator");
}

// ---- expressions ----

OperadExpr OperadExpr::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->gen = g;
  return OperadExpr(std::move(n));
}

OperadExpr OperadExpr::compose(OperadExpr a, OperadExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::compose;
  n->size = a.size() + b.size();
  n->a = std::make_shared<const OperadExpr>(std::move(a));
  n->b = std::make_shared<const OperadExpr>(std::move(b));
  return OperadExpr(std::move(n));
}

OperadExpr OperadExpr::operadic(OperadExpr f, OperadExpr g, int i) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::operadic;
  n->index = i;
  n->size = f.size() + g.size();
  n->a = std::make_shared<const OperadExpr>(std::move(f));
  n->b = std::make_shared<const OperadExpr>(std::move(g));
  return OperadExpr(std::move(n));
}

OperadExpr OperadExpr::relabel(Permutation sigma, OperadExpr f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::relabel;
  n->perm = std::move(sigma);
  n->size = f.size();
  n->a = std::make_shared<const OperadExpr>(std::move(f));
  return OperadExpr(std::move(n));
}

namespace {

using GeneratorMap = std::function<ParbMorphism(Generator)>;

ParbMorphism eval_at(const OperadExpr& e, const std::string& path, const GeneratorMap& gens) {
  try {
    switch (e.kind()) {
      case OperadExpr::Kind::generator:
        return gens(e.generator());
      case OperadExpr::Kind::compose:
        return cat_compose(eval_at(e.first(), path + ".0", gens), eval_at(e.second(), path + ".1", gens));
      case OperadExpr::Kind::operadic:
        return operadic_compose(eval_at(e.first(), path + ".0", gens), eval_at(e.second(), path + ".1", gens),
                                e.index());
      case OperadExpr::Kind::relabel:
        return sigma_act(e.perm(), eval_at(e.first(), path + ".0", gens));
    }
  } catch (const CompositionError& err) {
    std::string what = err.what();
    if (what.rfind("at node ", 0) == 0) throw;
    throw CompositionError(fmt::format("at node {}: {}", path, what));
  } catch (const MalformedInput& err) {
    throw CompositionError(fmt::format("at node {}: {}", path, err.what()));
  }
  throw CompositionError("unknown expression node");
}

void print_expr(const OperadExpr& e, std::string& out) {
  switch (e.kind()) {
    case OperadExpr::Kind::generator:
      if (!out.empty()) out += ' ';
      out += generator_name(e.generator());
      return;
    case OperadExpr::Kind::compose:
      print_expr(e.first(), out);
      print_expr(e.second(), out);
      out += " .";
      return;
    case OperadExpr::Kind::operadic:
      print_expr(e.first(), out);
      print_expr(e.second(), out);
      out += fmt::format(" o{}", e.index());
      return;
    case OperadExpr::Kind::relabel: {
      print_expr(e.first(), out);
      const auto& im = e.perm().images();
      std::string body;
      if (e.perm().size() < 10) {
        body = e.perm().one_line();
      } else {
        for (std::size_t k = 0; k < im.size(); ++k) body += (k ? "," : "") + std::to_string(im[k]);
      }
      out += fmt::format(" perm[{}]*", body);
      return;
    }
  }
}

}  // namespace

ParbMorphism eval_expr(const OperadExpr& e) { return eval_at(e, "root", generator_value); }

ParbMorphism eval_expr(const OperadExpr& e, const std::function<ParbMorphism(Generator)>& generators) {
  return eval_at(e, "root", generators);
}

const std::vector<Relation>& defining_relations() {
  static const std::vector<Relation> relations{
      {"T", "tau mu o1", "beta beta perm[21]* . mu tau o2 tau o1 ."},
      {"H1", "mu beta o1 alpha perm[213]* . mu beta o2 perm[213]* .", "alpha beta mu o2 . alpha perm[231]* ."},
      {"H2", "mu beta o2 alpha^-1 perm[132]* . mu beta o1 perm[132]* .", "alpha^-1 beta mu o1 . alpha^-1 perm[312]* ."},
      {"P", "alpha mu o1 alpha mu o3 .", "mu alpha o1 alpha mu o2 . mu alpha o2 ."},
  };
  return relations;
}

OperadExpr expr_inverse(const OperadExpr& e) {
  switch (e.kind()) {
    case OperadExpr::Kind::generator:
      return OperadExpr::gen(generator_inverse(e.generator()));
    case OperadExpr::Kind::compose:
      return OperadExpr::compose(expr_inverse(e.second()), expr_inverse(e.first()));
    case OperadExpr::Kind::operadic:
      return OperadExpr::operadic(expr_inverse(e.first()), expr_inverse(e.second()), e.index());
    case OperadExpr::Kind::relabel:
      return OperadExpr::relabel(e.perm(), expr_inverse(e.first()));
  }
  throw CompositionError("unknown expression node");
}

std::string to_string(const OperadExpr& e) {
  std::string out;
  print_expr(e, out);
  return out;
}

OperadExpr parse_expr(std::string_view s) {
  std::vector<OperadExpr> stack;
  std::size_t i = 0;
  auto pop = [&](std::size_t pos) {
    if (stack.empty()) throw ParseError("operator needs more operands", pos);
    OperadExpr e = stack.back();
    stack.pop_back();
    return e;
  };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::string_view tok = s.substr(start, i - start);
    bool matched = false;
    for (Generator g : {Generator::mu, Generator::id, Generator::beta, Generator::beta_inv, Generator::tau,
                        Generator::tau_inv, Generator::alpha, Generator::alpha_inv}) {
      if (tok == generator_name(g)) {
        stack.push_back(OperadExpr::gen(g));
        matched = true;
      }
    }
    if (matched) continue;
    if (tok == ".") {
      OperadExpr b = pop(start);
      OperadExpr a = pop(start);
      stack.push_back(OperadExpr::compose(std::move(a), std::move(b)));
    } else if (tok.size() >= 2 && tok[0] == 'o' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      int idx = 0;
      for (char c : tok.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad insertion index", start);
        idx = idx * 10 + (c - '0');
        if (idx > 100000) throw ParseError("insertion index too large", start);
      }
      OperadExpr g = pop(start);
      OperadExpr f = pop(start);
      stack.push_back(OperadExpr::operadic(std::move(f), std::move(g), idx));
    } else if (tok.substr(0, 5) == "perm[" && tok.size() > 7 && tok.substr(tok.size() - 2) == "]*") {
      std::string_view body = tok.substr(5, tok.size() - 7);
      std::vector<int> im;
      try {
        if (body.find(',') == std::string_view::npos) {
          im = Permutation::from_one_line(body).images();
        } else {
          int v = 0;
          bool any = false;
          for (char c : body) {
            if (c == ',') {
              if (!any) throw MalformedInput("empty entry");
              im.push_back(v);
              v = 0;
              any = false;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
              v = v * 10 + (c - '0');
              any = true;
            } else {
              throw MalformedInput("bad entry");
            }
          }
          if (!any) throw MalformedInput("empty entry");
          im.push_back(v);
        }
        Permutation p(std::move(im));
        OperadExpr f = pop(start);
        stack.push_back(OperadExpr::relabel(std::move(p), std::move(f)));
      } catch (const MalformedInput& err) {
        throw ParseError(fmt::format("bad permutation: {}", err.what()), start);
      }
    } else {
      throw ParseError(fmt::format("unknown token '{}'", tok), start);
    }
  }
  if (stack.size() != 1) throw ParseError("expression must reduce to a single term", s.size());
  return stack.back();
}

// ---- express ----

namespace {

OperadExpr identity_std(const ParenWord& p) {
  if (p.is_leaf()) return OperadExpr::gen(Generator::id);
  OperadExpr e = OperadExpr::operadic(OperadExpr::gen(Generator::mu), identity_std(shape_of(p.right())), 2);
  return OperadExpr::operadic(std::move(e), identity_std(shape_of(p.left())), 1);
}

OperadExpr with_relabel(const Permutation& sigma, OperadExpr e) {
  if (sigma.is_identity()) return e;
  return OperadExpr::relabel(sigma, std::move(e));
}

ParenWord comb_object(Waypoint w, const Permutation& order) {
  return w == Waypoint::left_comb ? ParenWord::left_comb(order) : ParenWord::right_comb(order);
}

// (LC_a LC_b) -> LC_{a+b}, or the mirror image for right combs.
OperadExpr fold(Waypoint w, int a, int b) {
  const ParenWord leaf = ParenWord::leaf();
  if (w == Waypoint::left_comb) {
    if (b == 1) return identity_std(ParenWord::left_comb(Permutation::identity(a + 1)));
    OperadExpr step = associator_expr(ParenWord::left_comb(Permutation::identity(a)),
                                      ParenWord::left_comb(Permutation::identity(b - 1)), leaf, -1);
    return OperadExpr::compose(std::move(step),
                               OperadExpr::operadic(OperadExpr::gen(Generator::mu), fold(w, a, b - 1), 1));
  }
  if (a == 1) return identity_std(ParenWord::right_comb(Permutation::identity(b + 1)));
  OperadExpr step = associator_expr(leaf, ParenWord::right_comb(Permutation::identity(a - 1)),
                                    ParenWord::right_comb(Permutation::identity(b)), 1);
  return OperadExpr::compose(std::move(step), OperadExpr::operadic(OperadExpr::gen(Generator::mu), fold(w, a - 1, b), 2));
}

// Standard-labelled p -> standard comb.
OperadExpr to_comb(Waypoint w, const ParenWord& p) {
  if (p.is_leaf()) return OperadExpr::gen(Generator::id);
  ParenWord l = shape_of(p.left()), r = shape_of(p.right());
  OperadExpr split = OperadExpr::operadic(OperadExpr::operadic(OperadExpr::gen(Generator::mu), to_comb(w, r), 2),
                                          to_comb(w, l), 1);
  return OperadExpr::compose(std::move(split), fold(w, l.size(), r.size()));
}

}  // namespace

OperadExpr identity_expr(const ParenWord& object) {
  return with_relabel(forget_parens(object), identity_std(shape_of(object)));
}

OperadExpr associator_expr(const ParenWord& x, const ParenWord& y, const ParenWord& z, int sign) {
  OperadExpr e = OperadExpr::gen(sign > 0 ? Generator::alpha : Generator::alpha_inv);
  e = OperadExpr::operadic(std::move(e), identity_std(shape_of(z)), 3);
  e = OperadExpr::operadic(std::move(e), identity_std(shape_of(y)), 2);
  return OperadExpr::operadic(std::move(e), identity_std(shape_of(x)), 1);
}

OperadExpr rebracket_expr(const ParenWord& from, const ParenWord& to, Waypoint w) {
  Permutation order = forget_parens(from);
  if (!(forget_parens(to) == order)) throw CompositionError("re-bracketing needs equal leaf orders");
  if (from == to) return identity_expr(from);
  ParenWord a = shape_of(from), b = shape_of(to);
  OperadExpr e = OperadExpr::compose(to_comb(w, a), expr_inverse(to_comb(w, b)));
  return with_relabel(order, std::move(e));
}

ParenWord waypoint_object(Waypoint w, const Permutation& order) { return comb_object(w, order); }

OperadExpr twist_step_expr(int n, int position, int sign, Waypoint w) {
  return OperadExpr::operadic(identity_std(comb_object(w, Permutation::identity(n))),
                              OperadExpr::gen(sign > 0 ? Generator::tau : Generator::tau_inv), position);
}

OperadExpr crossing_step_expr(int n, int k, int sign, Waypoint w) {
  const ParenWord home = comb_object(w, Permutation::identity(n));
  const ParenWord smaller = comb_object(w, Permutation::identity(n - 1));
  OperadExpr cross = sign > 0 ? OperadExpr::gen(Generator::beta)
                              : OperadExpr::relabel(Permutation::from_one_line("21"), OperadExpr::gen(Generator::beta_inv));
  ParenWord paired = graft(smaller, parse_paren("(1 2)"), k);
  ParenWord crossed = graft(smaller, parse_paren("(2 1)"), k);
  return OperadExpr::compose(
      OperadExpr::compose(rebracket_expr(home, paired, w), OperadExpr::operadic(identity_std(smaller), cross, k)),
      rebracket_expr(crossed, comb_object(w, Permutation::adjacent(n, k)), w));
}

OperadExpr express(const ParbMorphism& f, Waypoint w) {
  const int n = f.arity();
  Permutation sigma = forget_parens(f.source);
  ParbMorphism g = sigma_act(sigma.inverse(), f);
  const Permutation id_n = Permutation::identity(n);

  std::vector<OperadExpr> steps;
  steps.push_back(rebracket_expr(g.source, comb_object(w, id_n), w));
  for (int p = 1; p <= n; ++p) {
    int t = g.rb.twists[p - 1];
    for (int k = 0; k < std::abs(t); ++k) steps.push_back(twist_step_expr(n, p, t, w));
  }
  Permutation order = id_n;
  for (const Letter& l : g.rb.braid.letters()) {
    steps.push_back(with_relabel(order, crossing_step_expr(n, l.gen, l.sign, w)));
    order = Permutation::adjacent(n, l.gen) * order;
  }
  steps.push_back(rebracket_expr(comb_object(w, order), g.target, w));

  OperadExpr e = steps.front();
  for (std::size_t k = 1; k < steps.size(); ++k) e = OperadExpr::compose(std::move(e), steps[k]);
  return with_relabel(sigma, std::move(e));
}

}  // namespace parb
