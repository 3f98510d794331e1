#include "parb/tl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parb/cyclic.hpp"
#include "parb/error.hpp"

namespace parb {

namespace {

// Position of each point on the boundary circle: bottom left to right, then top right to left.
std::vector<int> circle_positions(int m, int n) {
  std::vector<int> pos(m + n);
  for (int i = 0; i < m; ++i) pos[i] = i;
  for (int j = 0; j < n; ++j) pos[m + j] = m + (n - 1 - j);
  return pos;
}

void noncrossing(int lo, int hi, std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  if (lo > hi) {
    out.push_back(partner);
    return;
  }
  // lo is matched with some j; the points strictly between must pair up among themselves
  for (int j = lo + 1; j <= hi; j += 2) {
    partner[lo] = j;
    partner[j] = lo;
    std::vector<std::vector<int>> insides;
    noncrossing(lo + 1, j - 1, partner, insides);
    for (auto& p : insides) noncrossing(j + 1, hi, p, out);
  }
}

}  // namespace

std::vector<Matching> tl_basis(int m, int n) {
  if (m < 0 || n < 0) throw MalformedInput("negative arity");
  std::vector<Matching> out;
  if ((m + n) % 2) return out;
  std::vector<int> partner(m + n, -1);
  std::vector<std::vector<int>> on_circle;
  noncrossing(0, m + n - 1, partner, on_circle);
  std::vector<int> pos = circle_positions(m, n);
  std::vector<int> at(m + n);
  for (int k = 0; k < m + n; ++k) at[pos[k]] = k;
  for (const auto& c : on_circle) {
    Matching match(m + n);
    for (int k = 0; k < m + n; ++k) match[k] = at[c[pos[k]]];
    out.push_back(std::move(match));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_planar(const Matching& match, int m, int n) {
  if (static_cast<int>(match.size()) != m + n) return false;
  for (int k = 0; k < m + n; ++k)
    if (match[k] < 0 || match[k] >= m + n || match[k] == k || match[match[k]] != k) return false;
  std::vector<int> pos = circle_positions(m, n);
  for (int a = 0; a < m + n; ++a)
    for (int c = 0; c < m + n; ++c) {
      int pa = pos[a], pb = pos[match[a]], pc = pos[c], pd = pos[match[c]];
      if (pa < pb && pc < pd && pa < pc && pc < pb && pb < pd) return false;
    }
  return true;
}

TLMorphism::TLMorphism(int m, int n, Terms terms) : m_(m), n_(n) {
  for (auto& [match, c] : terms) {
    if (!is_planar(match, m, n)) throw MalformedInput("matching is not a planar perfect matching");
    if (!c.is_zero()) terms_.emplace(match, std::move(c));
  }
}

TLMorphism TLMorphism::matching(int m, int n, Matching match, LaurentA coefficient) {
  Terms t;
  t.emplace(std::move(match), std::move(coefficient));
  return TLMorphism(m, n, std::move(t));
}

TLMorphism TLMorphism::identity(int n) {
  Matching match(2 * n);
  for (int k = 0; k < n; ++k) {
    match[k] = n + k;
    match[n + k] = k;
  }
  return matching(n, n, std::move(match));
}

TLMorphism TLMorphism::cup() { return matching(0, 2, {1, 0}); }
TLMorphism TLMorphism::cap() { return matching(2, 0, {1, 0}); }
TLMorphism TLMorphism::hook() { return matching(2, 2, {1, 0, 3, 2}); }

LaurentA TLMorphism::coefficient(const Matching& match) const {
  auto it = terms_.find(match);
  return it == terms_.end() ? LaurentA() : it->second;
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw CompositionError("adding morphisms of different arities");
  TLMorphism out = *this;
  for (const auto& [match, c] : o.terms_) {
    LaurentA sum = out.coefficient(match) + c;
    if (sum.is_zero())
      out.terms_.erase(match);
    else
      out.terms_[match] = sum;
  }
  return out;
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const { return *this + o.scaled(-1); }

TLMorphism TLMorphism::scaled(const LaurentA& c) const {
  TLMorphism out(m_, n_);
  if (c.is_zero()) return out;
  for (const auto& [match, v] : terms_) out.terms_.emplace(match, v * c);
  return out;
}

TLMorphism tl_tensor(const TLMorphism& a, const TLMorphism& b) {
  const int m1 = a.source(), n1 = a.target(), m2 = b.source(), n2 = b.target();
  const int m = m1 + m2;
  auto map_a = [&](int k) { return k < m1 ? k : m + (k - m1); };
  auto map_b = [&](int k) { return k < m2 ? m1 + k : m + n1 + (k - m2); };
  TLMorphism::Terms terms;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Matching match(m + n1 + n2);
      for (int k = 0; k < m1 + n1; ++k) match[map_a(k)] = map_a(ma[k]);
      for (int k = 0; k < m2 + n2; ++k) match[map_b(k)] = map_b(mb[k]);
      terms[match] += ca * cb;
    }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  return TLMorphism(m, n1 + n2, std::move(terms));
}

std::map<std::pair<Matching, int>, LaurentA> tl_compose_counting(const TLMorphism& a, const TLMorphism& b) {
  if (a.target() != b.source())
    throw CompositionError(fmt::format("cannot stack {} -> {} under {} -> {}", a.source(), a.target(), b.source(),
                                       b.target()));
  const int m = a.source(), n = a.target(), p = b.target();
  std::map<std::pair<Matching, int>, LaurentA> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Matching match(m + p, -1);
      std::vector<char> seen(n, 0);
      // follow a path from an outer point; returns the outer endpoint in result indices
      auto walk_from_middle = [&](int j, bool into_b) {
        while (true) {
          seen[j] = 1;
          if (into_b) {
            int nxt = mb[j];
            if (nxt >= n) return m + (nxt - n);
            j = nxt;
          } else {
            int nxt = ma[m + j];
            if (nxt < m) return nxt;
            j = nxt - m;
          }
          seen[j] = 1;
          into_b = !into_b;
        }
      };
      for (int i = 0; i < m; ++i) {
        if (match[i] >= 0) continue;
        int q = ma[i];
        int end = q < m ? q : walk_from_middle(q - m, true);
        match[i] = end;
        match[end] = i;
      }
      for (int k = 0; k < p; ++k) {
        if (match[m + k] >= 0) continue;
        int q = mb[n + k];
        int end = q >= n ? m + (q - n) : walk_from_middle(q, false);
        match[m + k] = end;
        match[end] = m + k;
      }
      int loops = 0;
      for (int j = 0; j < n; ++j) {
        if (seen[j]) continue;
        ++loops;
        int cur = j;
        do {
          seen[cur] = 1;
          int up = mb[cur];  // middle point reached through b
          seen[up] = 1;
          cur = ma[m + up] - m;  // back through a
        } while (cur != j);
      }
      out[{match, loops}] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TLMorphism tl_compose(const TLMorphism& a, const TLMorphism& b, const LaurentA& delta) {
  TLMorphism::Terms terms;
  for (const auto& [key, c] : tl_compose_counting(a, b)) terms[key.first] += c * delta.pow(key.second);
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  return TLMorphism(a.source(), b.target(), std::move(terms));
}

TLMorphism nested_cup(int w) {
  Matching match(2 * w);
  for (int k = 0; k < 2 * w; ++k) match[k] = 2 * w - 1 - k;
  return TLMorphism::matching(0, 2 * w, std::move(match));
}

TLMorphism nested_cap(int w) {
  Matching match(2 * w);
  for (int k = 0; k < 2 * w; ++k) match[k] = 2 * w - 1 - k;
  return TLMorphism::matching(2 * w, 0, std::move(match));
}

std::string matching_string(const Matching& match) {
  std::string out = "[";
  for (std::size_t k = 0; k < match.size(); ++k) out += (k ? " " : "") + std::to_string(match[k]);
  return out + "]";
}

std::string to_string(const TLMorphism& f) {
  std::string out = fmt::format("tl m={} n={}", f.source(), f.target());
  for (const Matching& match : tl_basis(f.source(), f.target()))
    out += fmt::format("\n{} : {}", matching_string(match), to_string(f.coefficient(match)));
  return out;
}

TLMorphism parse_tl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::getline(in, header);
  int m = -1, n = -1;
  if (std::sscanf(header.c_str(), "tl m=%d n=%d", &m, &n) != 2 || m < 0 || n < 0)
    throw ParseError("expected 'tl m=<int> n=<int>'", 0);
  std::size_t offset = header.size() + 1;
  TLMorphism::Terms terms;
  for (std::string line; std::getline(in, line); offset += line.size() + 1) {
    if (line.empty()) continue;
    std::size_t open = line.find('['), close = line.find(']'), colon = line.find(" : ");
    if (open != 0 || close == std::string::npos || colon == std::string::npos || colon < close)
      throw ParseError("expected '[<partners>] : <coefficient>'", offset);
    Matching match;
    std::istringstream nums(line.substr(1, close - 1));
    for (int v; nums >> v;) match.push_back(v);
    if (!is_planar(match, m, n)) throw ParseError("not a planar matching", offset);
    LaurentA c = parse_laurent(line.substr(colon + 3));
    if (!c.is_zero()) terms[match] += c;
  }
  return TLMorphism(m, n, std::move(terms));
}

TLMatrix tl_matrix(const std::vector<TLMorphism>& images) {
  if (images.empty()) return {};
  std::vector<Matching> rows = tl_basis(images[0].source(), images[0].target());
  TLMatrix out(rows.size(), std::vector<LaurentA>(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t r = 0; r < rows.size(); ++r) out[r][j] = images[j].coefficient(rows[r]);
  return out;
}

TLMorphism rotate_legs(const TLMorphism& psi, int shift) {
  if (psi.target() != 0) throw MalformedInput("leg rotation acts on morphisms to 0");
  const int n = psi.source();
  if (n == 0) return psi;
  auto move = [&](int i) { return ((i + shift) % n + n) % n; };
  TLMorphism::Terms terms;
  for (const auto& [match, c] : psi.terms()) {
    Matching r(n);
    for (int i = 0; i < n; ++i) r[move(i)] = move(match[i]);
    terms.emplace(std::move(r), c);
  }
  return TLMorphism(n, 0, std::move(terms));
}

// ---- the skein model ----

TLModel::TLModel(bool flip) : flip_(flip) {
  // c and its candidate inverse in the two-dimensional skein space; the
  // hook coefficient of their product must vanish, which fixes delta
  TLMorphism c = crossing(1), ci = crossing(-1);
  LaurentA constant, linear;
  for (const auto& [key, coeff] : tl_compose_counting(c, ci)) {
    if (key.first != TLMorphism::hook().terms().begin()->first) continue;
    if (key.second == 0) constant += coeff;
    else if (key.second == 1) linear += coeff;
    else throw std::logic_error("unexpected loop count in the skein relation");
  }
  delta_ = -(constant * linear.unit_inverse());
  if (!(compose(c, ci) == TLMorphism::identity(2))) throw std::logic_error("skein crossing is not invertible");

  TLMorphism kink = right_closure(c, 1);
  twist_ = kink.coefficient(TLMorphism::identity(1).terms().begin()->first);
  if (!(kink == TLMorphism::identity(1).scaled(twist_))) throw std::logic_error("closure is not a scalar");

  TLMorphism cc = compose(c, c);
  balancing_ = bundle_twist(2) == cc.scaled(twist_ * twist_);
}

TLMorphism TLModel::crossing(int sign) const {
  int s = flip_ ? -sign : sign;
  return TLMorphism::identity(2).scaled(A_pow(s)) + TLMorphism::hook().scaled(A_pow(-s));
}

TLMorphism TLModel::eval(const BraidWord& w) const {
  const int n = w.strands();
  TLMorphism out = TLMorphism::identity(n);
  std::map<std::pair<int, int>, TLMorphism> letters;
  for (const Letter& l : w.letters()) {
    auto key = std::make_pair(l.gen, l.sign);
    auto it = letters.find(key);
    if (it == letters.end()) {
      TLMorphism g = tl_tensor(tl_tensor(TLMorphism::identity(l.gen - 1), crossing(l.sign)),
                               TLMorphism::identity(n - l.gen - 1));
      it = letters.emplace(key, std::move(g)).first;
    }
    out = compose(out, it->second);
  }
  return out;
}

TLMorphism TLModel::eval(const RibbonBraid& rb) const {
  int total = std::accumulate(rb.twists.begin(), rb.twists.end(), 0);
  return eval(rb.braid).scaled(twist_.pow(total));
}

TLMorphism TLModel::right_closure(const TLMorphism& f, int w) const {
  TLMorphism open = tl_tensor(TLMorphism::identity(w), nested_cup(w));
  TLMorphism close = tl_tensor(TLMorphism::identity(w), nested_cap(w));
  return compose(compose(open, tl_tensor(f, TLMorphism::identity(w))), close);
}

TLMorphism TLModel::cabled_crossing(int p, int q, int sign) const {
  return eval(cable(BraidWord::generator(2, 1, sign), {p, q}));
}

TLMorphism TLModel::bundle_twist(int w, int sign) const { return right_closure(cabled_crossing(w, w, sign), w); }

namespace {

int generator_arity(Generator g) {
  switch (g) {
    case Generator::id:
    case Generator::tau:
    case Generator::tau_inv: return 1;
    case Generator::alpha:
    case Generator::alpha_inv: return 3;
    default: return 2;
  }
}

}  // namespace

TLMorphism TLModel::eval(const OperadExpr& e, const std::vector<int>& widths) const {
  // returns the morphism together with the source object, which fixes the block positions
  std::function<std::pair<TLMorphism, ParenWord>(const OperadExpr&, const std::vector<int>&)> go;
  go = [&](const OperadExpr& x, const std::vector<int>& w) -> std::pair<TLMorphism, ParenWord> {
    switch (x.kind()) {
      case OperadExpr::Kind::generator: {
        Generator g = x.generator();
        if (static_cast<int>(w.size()) != generator_arity(g)) throw CompositionError("width count mismatch");
        ParenWord src = generator_value(g).source;
        int total = std::accumulate(w.begin(), w.end(), 0);
        switch (g) {
          case Generator::beta: return {cabled_crossing(w[0], w[1], 1), src};
          case Generator::beta_inv: return {cabled_crossing(w[1], w[0], -1), src};
          case Generator::tau: return {bundle_twist(w[0], 1), src};
          case Generator::tau_inv: return {bundle_twist(w[0], -1), src};
          default: return {TLMorphism::identity(total), src};
        }
      }
      case OperadExpr::Kind::compose: {
        auto a = go(x.first(), w);
        auto b = go(x.second(), w);
        return {compose(a.first, b.first), a.second};
      }
      case OperadExpr::Kind::relabel: {
        const Permutation& sigma = x.perm();
        std::vector<int> inner(w.size());
        for (int k = 1; k <= sigma.size(); ++k) inner[k - 1] = w[sigma(k) - 1];
        auto a = go(x.first(), inner);
        return {a.first, relabel(a.second, sigma)};
      }
      case OperadExpr::Kind::operadic: {
        const int i = x.index();
        const int nx = expr_arity(x.first()), ny = expr_arity(x.second());
        std::vector<int> wy(w.begin() + (i - 1), w.begin() + (i - 1 + ny));
        std::vector<int> wx;
        for (int j = 1; j < i; ++j) wx.push_back(w[j - 1]);
        wx.push_back(std::accumulate(wy.begin(), wy.end(), 0));
        for (int j = i + 1; j <= nx; ++j) wx.push_back(w[j + ny - 2]);
        auto outer = go(x.first(), wx);
        auto inner = go(x.second(), wy);
        int offset = 0;
        for (int leaf : outer.second.leaves()) {
          if (leaf == i) break;
          offset += wx[leaf - 1];
        }
        int total = std::accumulate(wx.begin(), wx.end(), 0);
        TLMorphism placed = tl_tensor(tl_tensor(TLMorphism::identity(offset), inner.first),
                                      TLMorphism::identity(total - offset - wx[i - 1]));
        return {compose(placed, outer.first), graft(outer.second, inner.second, i)};
      }
    }
    throw CompositionError("unknown expression node");
  };
  for (int v : widths)
    if (v < 1) throw MalformedInput("bundle widths must be positive");
  if (static_cast<int>(widths.size()) != expr_arity(e)) throw CompositionError("width count mismatch");
  eval_expr(e);  // type check
  return go(e, widths).first;
}

TLMorphism TLModel::eval(const OperadExpr& e) const { return eval(e, std::vector<int>(expr_arity(e), 1)); }

namespace {

int position_of_one(const ParenWord& p) {
  std::vector<int> leaves = p.leaves();
  return static_cast<int>(std::find(leaves.begin(), leaves.end(), 1) - leaves.begin());
}

}  // namespace

TLMatrix TLModel::invariant_action(const ParbMorphism& f, int w) const {
  const int n = f.arity();
  TLMorphism lifted = tl_tensor(eval(express(f), std::vector<int>(n, w)), TLMorphism::identity(w));
  std::vector<TLMorphism> images;
  for (const Matching& b : tl_basis(w * (n + 1), 0))
    images.push_back(compose(lifted, TLMorphism::matching(w * (n + 1), 0, b)));
  return tl_matrix(images);
}

TLMatrix TLModel::rotated_action(const ParbMorphism& f, int w) const {
  const int n = f.arity();
  TLMorphism lifted = tl_tensor(eval(express(f), std::vector<int>(n, w)), TLMorphism::identity(w));
  const int before = (position_of_one(f.target) + 1) * w, after = (position_of_one(f.source) + 1) * w;
  std::vector<TLMorphism> images;
  for (const Matching& b : tl_basis(w * (n + 1), 0)) {
    TLMorphism psi = rotate_legs(TLMorphism::matching(w * (n + 1), 0, b), before);
    images.push_back(rotate_legs(compose(lifted, psi), -after));
  }
  return tl_matrix(images);
}

}  // namespace parb
