#include "parb/gt.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>

#include "parb/cyclic.hpp"
#include "parb/error.hpp"

namespace parb {

namespace {

void check_degree(int degree) {
  if (degree < 0) throw MalformedInput("negative truncation degree");
  if (degree > max_truncation_degree)
    throw MalformedInput(fmt::format("truncation degree {} exceeds the bound {}", degree, max_truncation_degree));
}

using AlgebraMaker = std::shared_ptr<const SeriesAlgebra> (*)(int);

std::shared_ptr<const SeriesAlgebra> per_degree(int degree, AlgebraMaker make) {
  check_degree(degree);
  static std::mutex lock;
  static std::map<std::pair<AlgebraMaker, int>, std::shared_ptr<const SeriesAlgebra>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(make, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make(degree)).first;
  return it->second;
}

// ---- combed PB4 ----

struct CombedLetter {
  const char* name;
  int i, j;
};
constexpr CombedLetter combed_letters[] = {{"x12", 1, 2}, {"x13", 1, 3}, {"x23", 2, 3},
                                           {"x14", 1, 4}, {"x24", 2, 4}, {"x34", 3, 4}};
constexpr int combed_count = 6;

BraidWord combed_braid(int u) { return pure_braid_generator(combed_letters[u].i, combed_letters[u].j, 4); }

// The action of lower levels permutes the letters of a level up to conjugation
// inside that level, so g u g^-1 = h u h^-1 for a short word h of u's level.
FreeWord find_conjugator_image(int g, int u) {
  const int level = combed_letters[u].j;
  std::vector<int> alphabet;
  for (int v = 0; v < combed_count; ++v)
    if (combed_letters[v].j == level) alphabet.push_back(v);
  BraidWord gb = combed_braid(g);
  BraidWord target = gb * combed_braid(u) * gb.inverse();
  FreeWord uw = FreeWord::generator(combed_count, u);
  std::vector<FreeWord> layer{FreeWord(combed_count)};
  for (int len = 0; len <= 5; ++len) {
    std::vector<FreeWord> next;
    for (const FreeWord& h : layer) {
      FreeWord candidate = h * uw * h.inverse();
      BraidWord hb = h.substitute(std::vector<BraidWord>{combed_braid(0), combed_braid(1), combed_braid(2),
                                                         combed_braid(3), combed_braid(4), combed_braid(5)},
                                  BraidWord(4), [](const BraidWord& a, const BraidWord& b) { return a * b; },
                                  [](const BraidWord& a) { return a.inverse(); });
      if (braid_equal(hb * combed_braid(u) * hb.inverse(), target)) return candidate;
      for (int v : alphabet)
        for (int sgn : {1, -1}) {
          if (!h.letters().empty() && h.letters().back() == FreeLetter{v, -sgn}) continue;
          next.push_back(h * FreeWord::generator(combed_count, v, sgn));
        }
    }
    layer = std::move(next);
  }
  throw MalformedInput(fmt::format("no conjugator found for {} acting on {}", combed_letters[g].name,
                                   combed_letters[u].name));
}

const std::vector<std::vector<FreeWord>>& combed_conjugates() {
  static const std::vector<std::vector<FreeWord>> table = [] {
    std::vector<std::vector<FreeWord>> t(combed_count, std::vector<FreeWord>(combed_count, FreeWord(combed_count)));
    for (int g = 0; g < combed_count; ++g)
      for (int u = 0; u < combed_count; ++u) {
        if (combed_letters[g].j >= combed_letters[u].j) continue;
        t[g][u] = find_conjugator_image(g, u);
      }
    return t;
  }();
  return table;
}

std::shared_ptr<const SeriesAlgebra> make_free_xy(int degree) { return SeriesAlgebra::free({"X", "Y"}, degree); }

std::shared_ptr<const SeriesAlgebra> make_combed(int degree) {
  std::vector<std::string> names;
  std::vector<int> levels;
  for (const CombedLetter& l : combed_letters) {
    names.emplace_back(l.name);
    levels.push_back(l.j);
  }
  return std::make_shared<const SeriesAlgebra>(std::move(names), std::move(levels), degree, combed_conjugates());
}

FreeWord fw_mul(const FreeWord& a, const FreeWord& b) { return a * b; }
FreeWord fw_inv(const FreeWord& a) { return a.inverse(); }

FreeWord apply_word(const FreeWord& f, const FreeWord& a, const FreeWord& b) {
  return f.substitute(std::vector<FreeWord>{a, b}, FreeWord(a.rank()), fw_mul, fw_inv);
}

BraidWord apply_braid(const FreeWord& f, const BraidWord& a, const BraidWord& b) {
  return f.substitute(std::vector<BraidWord>{a, b}, BraidWord(a.strands()),
                      [](const BraidWord& p, const BraidWord& q) { return p * q; },
                      [](const BraidWord& p) { return p.inverse(); });
}

Series apply_series(const Series& f, const Series& a, const Series& b) { return substitute(f, {a, b}); }

void require_discrete(const GtElement& e, const char* what) {
  if (!e.is_discrete()) throw MalformedInput(fmt::format("{} needs a discrete element", what));
}

}  // namespace

std::shared_ptr<const SeriesAlgebra> free_xy_algebra(int degree) { return per_degree(degree, make_free_xy); }

std::shared_ptr<const SeriesAlgebra> combed_pb4_algebra(int degree) { return per_degree(degree, make_combed); }

Series magnus_xy(const FreeWord& w, int degree) {
  auto alg = free_xy_algebra(degree);
  return magnus(w, {Series::group_letter(alg, 0), Series::group_letter(alg, 1)});
}

// ---- GtElement ----

GtElement GtElement::discrete(long lambda, FreeWord f) {
  if (lambda % 2 == 0) throw MalformedInput(fmt::format("lambda must be odd, got {}", lambda));
  if (f.rank() != 2) throw MalformedInput("f must be a word in x, y");
  GtElement e;
  e.lambda = lambda;
  e.word = std::move(f);
  return e;
}

GtElement GtElement::truncated(mpq_class lambda, Series f) {
  if (!f.algebra() || !f.algebra()->is_free() || f.algebra()->letters() != 2)
    throw MalformedInput("f must be a series in X, Y");
  if (!is_group_like(f)) throw MalformedInput("f is not group-like");
  GtElement e;
  e.mode = Mode::truncated;
  e.lambda = std::move(lambda);
  e.lambda.canonicalize();
  e.series = std::move(f);
  e.has_word = false;
  return e;
}

GtElement GtElement::truncated(mpq_class lambda, const FreeWord& f, int degree) {
  GtElement e = truncated(std::move(lambda), magnus_xy(f, degree));
  e.word = f;
  e.has_word = true;
  return e;
}

long GtElement::lambda_int() const {
  if (lambda.get_den() != 1 || !lambda.get_num().fits_slong_p()) throw MalformedInput("lambda is not an integer");
  return lambda.get_num().get_si();
}

int GtElement::degree() const { return is_discrete() ? -1 : series->algebra()->degree(); }

const Series& GtElement::f_series() const {
  if (!series) throw MalformedInput("element has no truncated series");
  return *series;
}

GtElement to_truncated(const GtElement& e, int degree) {
  if (!e.is_discrete()) {
    if (e.degree() == degree) return e;
    if (!e.has_word) throw MalformedInput("cannot change the degree of a series without a word");
  }
  return GtElement::truncated(e.lambda, e.word, degree);
}

// ---- relations ----

CheckReport gt_check_discrete(const GtElement& e, HexagonConvention c) {
  require_discrete(e, "gt_check_discrete");
  const FreeWord& f = e.word;
  FreeWord x = FreeWord::generator(2, 0), y = FreeWord::generator(2, 1);
  FreeWord z = (x * y).inverse();
  int m = static_cast<int>(e.lambda_int() - 1) / 2;
  CheckReport r;

  r.push_back({"I", apply_word(f, y, x) == f.inverse(), ""});

  FreeWord hex = c == HexagonConvention::displayed
                     ? x.pow(m) * apply_word(f, x, y) * y.pow(m) * apply_word(f, y, z) * z.pow(m) * apply_word(f, z, x)
                     : apply_word(f, x, y) * x.pow(m) * apply_word(f, z, x) * z.pow(m) * apply_word(f, y, z) * y.pow(m);
  r.push_back({"II", hex.is_identity(), hex.is_identity() ? "" : fmt::format("reduces to {}", to_string(hex))});

  auto x_ = [](int i, int j) { return pure_braid_generator(i, j, 4); };
  BraidWord lhs = apply_braid(f, x_(1, 2), x_(2, 3)) * apply_braid(f, x_(1, 2) * x_(1, 3), x_(2, 4) * x_(3, 4)) *
                  apply_braid(f, x_(2, 3), x_(3, 4));
  BraidWord rhs = apply_braid(f, x_(1, 3) * x_(2, 3), x_(2, 4)) * apply_braid(f, x_(1, 2), x_(2, 3) * x_(2, 4));
  r.push_back({"III", braid_equal(lhs, rhs), ""});
  return r;
}

CheckReport gt_check_truncated(const GtElement& e, HexagonConvention c) {
  if (e.is_discrete()) throw MalformedInput("gt_check_truncated needs a truncated element");
  const Series& f = e.f_series();
  const int d = e.degree();
  check_degree(d);
  auto alg = f.algebra();
  Series one = Series::one(alg);
  Series x = Series::group_letter(alg, 0), y = Series::group_letter(alg, 1);
  Series z = (x * y).inverse();
  mpq_class m = e.mu();
  CheckReport r;

  r.push_back({"I", apply_series(f, y, x) == f.inverse(), ""});

  Series hex = c == HexagonConvention::displayed
                   ? x.power(m) * apply_series(f, x, y) * y.power(m) * apply_series(f, y, z) * z.power(m) *
                         apply_series(f, z, x)
                   : apply_series(f, x, y) * x.power(m) * apply_series(f, z, x) * z.power(m) *
                         apply_series(f, y, z) * y.power(m);
  r.push_back({"II", hex == one, hex == one ? "" : fmt::format("differs from 1 by {}", (hex - one).str())});

  auto pb = combed_pb4_algebra(d);
  auto g = [&](const char* name) {
    for (int u = 0; u < combed_count; ++u)
      if (std::string(combed_letters[u].name) == name) return Series::group_letter(pb, u);
    throw MalformedInput("unknown combed letter");
  };
  Series x12 = g("x12"), x13 = g("x13"), x23 = g("x23"), x14 = g("x14"), x24 = g("x24"), x34 = g("x34");
  (void)x14;
  Series lhs = apply_series(f, x12, x23) * apply_series(f, x12 * x13, x24 * x34) * apply_series(f, x23, x34);
  Series rhs = apply_series(f, x13 * x23, x24) * apply_series(f, x12, x23 * x24);
  r.push_back({"III", lhs == rhs, ""});
  return r;
}

// ---- group law ----

GtElement gt_multiply(const GtElement& a, const GtElement& b) {
  if (a.mode != b.mode) throw MalformedInput("cannot multiply elements of different modes");
  if (a.is_discrete()) {
    long l2 = b.lambda_int();
    FreeWord x = FreeWord::generator(2, 0), y = FreeWord::generator(2, 1);
    const FreeWord& f2 = b.word;
    FreeWord f = apply_word(a.word, f2 * x.pow(static_cast<int>(l2)) * f2.inverse(), y.pow(static_cast<int>(l2))) * f2;
    return GtElement::discrete(a.lambda_int() * l2, std::move(f));
  }
  if (a.degree() != b.degree()) throw MalformedInput("cannot multiply elements of different degrees");
  auto alg = a.f_series().algebra();
  const Series& f2 = b.f_series();
  Series x = Series::group_letter(alg, 0), y = Series::group_letter(alg, 1);
  Series f = apply_series(a.f_series(), f2 * x.power(b.lambda) * f2.inverse(), y.power(b.lambda)) * f2;
  GtElement out = GtElement::truncated(a.lambda * b.lambda, std::move(f));
  if (a.has_word && b.has_word && b.lambda.get_den() == 1 && b.lambda.get_num().fits_sint_p()) {
    int l2 = static_cast<int>(b.lambda.get_num().get_si());
    FreeWord xw = FreeWord::generator(2, 0), yw = FreeWord::generator(2, 1);
    out.word = apply_word(a.word, b.word * xw.pow(l2) * b.word.inverse(), yw.pow(l2)) * b.word;
    out.has_word = true;
  }
  return out;
}

// ---- induced endomorphism ----

ParbMorphism gt_generator_image(const GtElement& e, Generator g) {
  require_discrete(e, "gt_generator_image");
  const int l = static_cast<int>(e.lambda_int());
  switch (g) {
    case Generator::mu:
    case Generator::id:
      return generator_value(g);
    case Generator::beta: {
      ParbMorphism b = generator_value(g);
      return ParbMorphism(b.source, b.target, RibbonBraid(BraidWord::generator(2, 1).pow(l), {0, 0}));
    }
    case Generator::tau:
      return ParbMorphism(ParenWord::leaf(), ParenWord::leaf(), RibbonBraid::twist(1, 1, l));
    case Generator::alpha: {
      ParbMorphism a = generator_value(g);
      BraidWord x12 = pure_braid_generator(1, 2, 3), x23 = pure_braid_generator(2, 3, 3);
      ParbMorphism fx(a.source, a.source, RibbonBraid(apply_braid(e.word, x12, x23), {0, 0, 0}));
      return cat_compose(fx, a);
    }
    case Generator::beta_inv:
      return parb_inverse(gt_generator_image(e, Generator::beta));
    case Generator::tau_inv:
      return parb_inverse(gt_generator_image(e, Generator::tau));
    case Generator::alpha_inv:
      return parb_inverse(gt_generator_image(e, Generator::alpha));
  }
  throw MalformedInput("unknown generator");
}

ParbMorphism gt_apply(const GtElement& e, const OperadExpr& expr) {
  require_discrete(e, "gt_apply");
  std::map<Generator, ParbMorphism> images;
  for (Generator g : {Generator::mu, Generator::id, Generator::beta, Generator::beta_inv, Generator::tau,
                      Generator::tau_inv, Generator::alpha, Generator::alpha_inv})
    images.emplace(g, gt_generator_image(e, g));
  return eval_expr(expr, [&](Generator g) { return images.at(g); });
}

ParbMorphism gt_apply(const GtElement& e, const ParbMorphism& f) { return gt_apply(e, express(f)); }

CheckReport check_preserves_parb(const GtElement& e) {
  require_discrete(e, "check_preserves_parb");
  CheckReport r;
  for (const Relation& rel : defining_relations())
    r.push_back({rel.name, parb_equal(gt_apply(e, parse_expr(rel.lhs)), gt_apply(e, parse_expr(rel.rhs))), ""});
  return r;
}

CheckReport check_cyclic_lift(const GtElement& e) {
  require_discrete(e, "check_cyclic_lift");
  CheckReport r;
  BraidWord b1 = BraidWord::generator(3, 1), b2 = BraidWord::generator(3, 2);
  BraidWord w = (b1 * b2).pow(3);
  BraidWord x12 = pure_braid_generator(1, 2, 3), x23 = pure_braid_generator(2, 3, 3);
  r.push_back({"w-central-x12", braid_equal(w * x12, x12 * w), ""});
  r.push_back({"w-central-x23", braid_equal(w * x23, x23 * w), ""});

  RibbonBraid t1 = RibbonBraid::twist(2, 1), p12(pure_braid_generator(1, 2, 2), {0, 0});
  r.push_back({"twist-commutes-x12", rb_equals(t1 * p12, p12 * t1), ""});

  RibbonBraid core = RibbonBraid::twist(3, 1, -2) * RibbonBraid(w.inverse(), {0, 0, 0});
  for (auto [name, x] : {std::pair{"x12", x12}, std::pair{"x23", x23}}) {
    RibbonBraid xr(x, {0, 0, 0});
    r.push_back({fmt::format("core-commutes-{}", name), rb_equals(core * xr, xr * core), ""});
  }

  for (Generator g : {Generator::tau, Generator::beta, Generator::alpha}) {
    ParbMorphism gen = generator_value(g);
    ParbMorphism image = gt_generator_image(e, g);
    for (int k = 1; k <= gen.arity(); ++k) {
      bool ok = parb_equal(gt_apply(e, z_on_morphism(gen, k)), z_on_morphism(image, k));
      r.push_back({fmt::format("lift-{}-z{}", generator_name(g), k), ok, ""});
    }
  }
  return r;
}

// ---- text ----

GtElement parse_gt(std::string_view text, std::optional<int> truncated_degree) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.substr(0, 3) != "gt " && s.substr(0, 3) != "gt\t") throw ParseError("expected 'gt'", 0);
  s = trim(s.substr(3));
  if (s.substr(0, 7) != "lambda=") throw ParseError("expected 'lambda='", text.size() - s.size());
  s.remove_prefix(7);
  std::size_t space = s.find_first_of(" \t");
  if (space == std::string_view::npos) throw ParseError("expected 'f='", text.size());
  std::string lambda_text(s.substr(0, space));
  mpq_class lambda;
  if (lambda_text.empty() || lambda.set_str(lambda_text, 10) != 0)
    throw ParseError(fmt::format("bad lambda '{}'", lambda_text), text.size() - s.size());
  lambda.canonicalize();
  s = trim(s.substr(space));
  if (s.substr(0, 2) != "f=") throw ParseError("expected 'f='", text.size() - s.size());
  FreeWord f = parse_free_word(s.substr(2), 2);
  if (truncated_degree) return GtElement::truncated(lambda, f, *truncated_degree);
  if (lambda.get_den() != 1 || !lambda.get_num().fits_slong_p())
    throw MalformedInput("a discrete element needs an integer lambda");
  return GtElement::discrete(lambda.get_num().get_si(), std::move(f));
}

std::string to_string(const GtElement& e) {
  if (e.has_word) return fmt::format("gt lambda={} f={}", e.lambda.get_str(), to_string(e.word));
  return fmt::format("gt lambda={} series={}", e.lambda.get_str(), e.f_series().str());
}

}  // namespace parb
