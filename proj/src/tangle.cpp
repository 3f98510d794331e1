#include "parb/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

// ---- envelope ----

EnvMorphism EnvMorphism::make(std::vector<ParbMorphism> parts, const std::vector<Wire>& wiring) {
  const int n = static_cast<int>(parts.size());
  EnvMorphism out;
  out.part_of_.resize(wiring.size());
  std::vector<std::vector<int>> labels(n);
  for (std::size_t j = 0; j < wiring.size(); ++j) {
    const Wire& w = wiring[j];
    if (w.part < 0 || w.part >= n) throw MalformedInput(fmt::format("wire {} feeds no part", j + 1));
    out.part_of_[j] = w.part;
    labels[w.part].push_back(w.label);
  }
  for (int k = 0; k < n; ++k) {
    const int a = parts[k].arity();
    if (static_cast<int>(labels[k].size()) != a)
      throw MalformedInput(fmt::format("part {} has arity {} but {} wires", k + 1, a, labels[k].size()));
    // label labels[k][i] moves to i + 1
    std::vector<int> images(a, 0);
    for (int i = 0; i < a; ++i) {
      int l = labels[k][i];
      if (l < 1 || l > a || images[l - 1] != 0) throw MalformedInput(fmt::format("bad labels on part {}", k + 1));
      images[l - 1] = i + 1;
    }
    Permutation rho(std::move(images));
    out.parts_.push_back(rho.is_identity() ? std::move(parts[k]) : sigma_act(rho, parts[k]));
  }
  return out;
}

EnvMorphism EnvMorphism::identity(int n) {
  return permutation(Permutation::identity(n));
}

EnvMorphism EnvMorphism::embed(const ParbMorphism& f) {
  std::vector<Wire> wiring;
  for (int l = 1; l <= f.arity(); ++l) wiring.push_back({0, l});
  return make({f}, wiring);
}

EnvMorphism EnvMorphism::permutation(const Permutation& p) {
  const int n = p.size();
  std::vector<Wire> wiring;
  for (int j = 1; j <= n; ++j) wiring.push_back({p(j) - 1, 1});
  return make(std::vector<ParbMorphism>(n, ParbMorphism::identity(ParenWord::leaf())), wiring);
}

std::vector<int> EnvMorphism::inputs_of(int part) const {
  std::vector<int> out;
  for (int j = 0; j < source(); ++j)
    if (part_of_[j] == part) out.push_back(j);
  return out;
}

EnvMorphism env_compose(const EnvMorphism& a, const EnvMorphism& b) {
  if (a.target() != b.source())
    throw CompositionError(fmt::format("cannot compose {} -> {} with {} -> {}", a.source(), a.target(), b.source(),
                                       b.target()));
  std::vector<ParbMorphism> parts;
  std::vector<EnvMorphism::Wire> wiring(a.source());
  for (int k = 0; k < b.target(); ++k) {
    std::vector<int> feeding = b.inputs_of(k);
    ParbMorphism part = b.parts()[k];
    for (int l = static_cast<int>(feeding.size()); l >= 1; --l)
      part = operadic_compose(part, a.parts()[feeding[l - 1]], l);
    int next = 1;
    for (int j : feeding)
      for (int wire : a.inputs_of(j)) wiring[wire] = {k, next++};
    parts.push_back(std::move(part));
  }
  return EnvMorphism::make(std::move(parts), wiring);
}

EnvMorphism env_tensor(const EnvMorphism& a, const EnvMorphism& b) {
  std::vector<ParbMorphism> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::vector<EnvMorphism::Wire> wiring;
  // canonical labels are the rank among the inputs of the same part
  auto append = [&](const EnvMorphism& e, int shift) {
    std::vector<int> seen(e.target(), 0);
    for (int p : e.part_of()) wiring.push_back({p + shift, ++seen[p]});
  };
  append(a, 0);
  append(b, a.target());
  return EnvMorphism::make(std::move(parts), wiring);
}

bool env_equal(const EnvMorphism& a, const EnvMorphism& b) {
  if (a.part_of() != b.part_of() || a.target() != b.target()) return false;
  for (int k = 0; k < a.target(); ++k)
    if (!parb_equal(a.parts()[k], b.parts()[k])) return false;
  return true;
}

std::string to_string(const EnvMorphism& e) {
  std::string out = fmt::format("env m={} n={}", e.source(), e.target());
  for (int k = 0; k < e.target(); ++k) {
    std::vector<int> wires = e.inputs_of(k);
    for (int& w : wires) ++w;
    out += fmt::format("\n  {} <- [{}] {}", k + 1, fmt::join(wires, " "), to_string(e.parts()[k]));
  }
  return out;
}

// ---- metric prop ----

int MetricLayer::consumed() const {
  switch (kind) {
    case Kind::ribbon: return op.arity() * width;
    case Kind::create: return 0;
    case Kind::annihilate: return 2;
    case Kind::inverse: return inner->source();
  }
  return 0;
}

int MetricLayer::produced() const {
  switch (kind) {
    case Kind::ribbon: return op.arity() * width;
    case Kind::create: return 2;
    case Kind::annihilate: return 0;
    case Kind::inverse: return inner->target();
  }
  return 0;
}

MetricPropMorphism& MetricPropMorphism::push(MetricLayer layer) {
  if (layer.kind == MetricLayer::Kind::ribbon && layer.width < 1) throw MalformedInput("bundle width must be positive");
  if (layer.kind == MetricLayer::Kind::inverse) {
    if (!layer.inner) throw MalformedInput("inverse layer without a morphism");
    if (layer.inner->source() != layer.inner->target()) throw MalformedInput("only endomorphisms have formal inverses");
  }
  if (layer.offset < 0 || layer.offset + layer.consumed() > target_)
    throw CompositionError(fmt::format("layer at {} needs {} strands, {} available", layer.offset, layer.consumed(),
                                       target_));
  target_ += layer.produced() - layer.consumed();
  layers_.push_back(std::move(layer));
  return *this;
}

MetricPropMorphism MetricPropMorphism::ribbon(int strands, int offset, ParbMorphism f, int width) {
  MetricLayer l;
  l.offset = offset;
  l.op = std::move(f);
  l.width = width;
  return std::move(MetricPropMorphism(strands).push(std::move(l)));
}

MetricPropMorphism MetricPropMorphism::create(int strands, int k) {
  MetricLayer l;
  l.kind = MetricLayer::Kind::create;
  l.offset = k;
  return std::move(MetricPropMorphism(strands).push(std::move(l)));
}

MetricPropMorphism MetricPropMorphism::annihilate(int strands, int k) {
  MetricLayer l;
  l.kind = MetricLayer::Kind::annihilate;
  l.offset = k;
  return std::move(MetricPropMorphism(strands).push(std::move(l)));
}

MetricPropMorphism MetricPropMorphism::inverse(int strands, int offset, const MetricPropMorphism& inner) {
  MetricLayer l;
  l.kind = MetricLayer::Kind::inverse;
  l.offset = offset;
  l.inner = std::make_shared<const MetricPropMorphism>(inner);
  return std::move(MetricPropMorphism(strands).push(std::move(l)));
}

MetricPropMorphism metric_compose(const MetricPropMorphism& a, const MetricPropMorphism& b) {
  if (a.target() != b.source())
    throw CompositionError(fmt::format("cannot compose {} -> {} with {} -> {}", a.source(), a.target(), b.source(),
                                       b.target()));
  MetricPropMorphism out = a;
  for (const MetricLayer& l : b.layers()) out.push(l);
  return out;
}

MetricPropMorphism metric_tensor(const MetricPropMorphism& a, const MetricPropMorphism& b) {
  MetricPropMorphism out(a.source() + b.source());
  for (const MetricLayer& l : a.layers()) out.push(l);
  for (MetricLayer l : b.layers()) {
    l.offset += a.target();
    out.push(std::move(l));
  }
  return out;
}

bool metric_equal(const MetricPropMorphism& a, const MetricPropMorphism& b) {
  if (a.source() != b.source() || a.layers().size() != b.layers().size()) return false;
  for (std::size_t i = 0; i < a.layers().size(); ++i) {
    const MetricLayer &x = a.layers()[i], &y = b.layers()[i];
    if (x.kind != y.kind || x.offset != y.offset) return false;
    if (x.kind == MetricLayer::Kind::ribbon && (x.width != y.width || !parb_equal(x.op, y.op))) return false;
    if (x.kind == MetricLayer::Kind::inverse && !metric_equal(*x.inner, *y.inner)) return false;
  }
  return true;
}

namespace {

void print_layers(const MetricPropMorphism& m, const std::string& indent, std::string& out) {
  for (const MetricLayer& l : m.layers()) {
    out += '\n' + indent;
    switch (l.kind) {
      case MetricLayer::Kind::ribbon:
        out += fmt::format("ribbon @{}", l.offset);
        if (l.width != 1) out += fmt::format(" w={}", l.width);
        out += ": " + to_string(l.op);
        break;
      case MetricLayer::Kind::create: out += fmt::format("create @{}", l.offset); break;
      case MetricLayer::Kind::annihilate: out += fmt::format("annihilate @{}", l.offset); break;
      case MetricLayer::Kind::inverse:
        out += fmt::format("inverse @{} of {} -> {}", l.offset, l.inner->source(), l.inner->target());
        print_layers(*l.inner, indent + "  ", out);
        break;
    }
  }
}

bool trivial_braid(const MetricLayer& l) {
  return l.kind == MetricLayer::Kind::ribbon && rb_equals(l.op.rb, RibbonBraid::identity(l.op.arity()));
}

using Layers = std::vector<MetricLayer>;

bool drop_identity(Layers& ls, std::size_t i) {
  const MetricLayer& l = ls[i];
  bool identity = (trivial_braid(l) && l.op.source == l.op.target) ||
                  (l.kind == MetricLayer::Kind::inverse && l.inner->layers().empty());
  if (identity) ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
  return identity;
}

bool merge_ribbons(Layers& ls, std::size_t i) {
  if (i + 1 >= ls.size()) return false;
  MetricLayer &a = ls[i], &b = ls[i + 1];
  if (a.kind != MetricLayer::Kind::ribbon || b.kind != MetricLayer::Kind::ribbon) return false;
  if (a.offset != b.offset || a.width != b.width || a.op.arity() != b.op.arity() || a.op.target != b.op.source)
    return false;
  a.op = canonical(cat_compose(a.op, b.op));
  ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return true;
}

// create, trivial-braid layers inside the three strands involved, then a cap
// on the new strand and its neighbour.
bool cancel_zigzag(Layers& ls, std::size_t i) {
  if (ls[i].kind != MetricLayer::Kind::create) return false;
  const int j = ls[i].offset;
  std::size_t t = i + 1;
  while (t < ls.size() && trivial_braid(ls[t])) ++t;
  if (t >= ls.size() || ls[t].kind != MetricLayer::Kind::annihilate) return false;
  const int k = ls[t].offset;
  if (k != j + 1 && k != j - 1) return false;
  const int lo = std::min(j, k);
  for (std::size_t s = i + 1; s < t; ++s)
    if (ls[s].offset < lo || ls[s].offset + ls[s].consumed() > lo + 3) return false;
  ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(t) + 1);
  return true;
}

// Moves the cap at i below the layer at i - 1 when they touch different strands.
bool slide_cap(Layers& ls, std::size_t i) {
  if (i == 0 || ls[i].kind != MetricLayer::Kind::annihilate) return false;
  MetricLayer &prev = ls[i - 1], &cap = ls[i];
  const int k = cap.offset;
  switch (prev.kind) {
    case MetricLayer::Kind::ribbon:
    case MetricLayer::Kind::inverse:
      if (prev.offset + prev.produced() <= k) break;
      if (prev.offset >= k + 2) {
        prev.offset -= 2;
        break;
      }
      return false;
    case MetricLayer::Kind::create:
      if (prev.offset + 2 <= k) {
        cap.offset -= 2;
        break;
      }
      if (prev.offset >= k + 2) {
        prev.offset -= 2;
        break;
      }
      return false;
    case MetricLayer::Kind::annihilate:
      // two caps side by side: the left one first
      if (k + 1 < prev.offset) {
        prev.offset -= 2;
        break;
      }
      return false;
  }
  std::swap(ls[i - 1], ls[i]);
  return true;
}

}  // namespace

std::string to_string(const MetricPropMorphism& m) {
  std::string out = fmt::format("metric m={} n={}", m.source(), m.target());
  print_layers(m, "  ", out);
  return out;
}

MetricPropMorphism zigzag_normalize(const MetricPropMorphism& m) {
  Layers ls = m.layers();
  for (MetricLayer& l : ls)
    if (l.kind == MetricLayer::Kind::inverse)
      l.inner = std::make_shared<const MetricPropMorphism>(zigzag_normalize(*l.inner));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < ls.size() && !changed; ++i)
      changed = drop_identity(ls, i) || merge_ribbons(ls, i) || cancel_zigzag(ls, i) || slide_cap(ls, i);
  }
  MetricPropMorphism out(m.source());
  for (MetricLayer& l : ls) out.push(std::move(l));
  return out;
}

namespace {

TLMorphism padded(const TLMorphism& block, int left, int right) {
  return tl_tensor(TLMorphism::identity(left), tl_tensor(block, TLMorphism::identity(right)));
}

}  // namespace

TLMorphism eval_metric(const TLModel& model, const MetricPropMorphism& m) {
  TLMorphism acc = TLMorphism::identity(m.source());
  int width = m.source();
  for (const MetricLayer& l : m.layers()) {
    TLMorphism block;
    switch (l.kind) {
      case MetricLayer::Kind::ribbon:
        block = l.width == 1 ? model.eval(l.op)
                             : model.eval(express(l.op), std::vector<int>(l.op.arity(), l.width));
        break;
      case MetricLayer::Kind::create: block = TLMorphism::cup(); break;
      case MetricLayer::Kind::annihilate: block = TLMorphism::cap(); break;
      case MetricLayer::Kind::inverse: {
        TLMorphism v = eval_metric(model, *l.inner);
        const int k = l.inner->source();
        TLMorphism id = TLMorphism::identity(k);
        const Matching& straight = id.terms().begin()->first;
        if (v.terms().size() != 1 || v.terms().begin()->first != straight || !v.terms().begin()->second.is_unit())
          throw MalformedInput("formal inverse of a morphism that is not a unit multiple of the identity");
        block = id.scaled(v.terms().begin()->second.unit_inverse());
        break;
      }
    }
    acc = model.compose(acc, padded(block, l.offset, width - l.offset - l.consumed()));
    width += l.produced() - l.consumed();
  }
  return acc;
}

MetricPropMorphism invariant_from_matching(int strands, const Matching& match) {
  if (static_cast<int>(match.size()) != strands || !is_planar(match, strands, 0))
    throw MalformedInput("not a planar matching of the given points");
  std::vector<int> alive(strands);
  for (int k = 0; k < strands; ++k) alive[k] = k;
  MetricPropMorphism out(strands);
  while (!alive.empty()) {
    std::size_t i = 0;
    while (match[alive[i]] != alive[i + 1]) ++i;
    MetricLayer l;
    l.kind = MetricLayer::Kind::annihilate;
    l.offset = static_cast<int>(i);
    out.push(std::move(l));
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i), alive.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
  return out;
}

MetricPropMorphism rotate_invariant(const MetricPropMorphism& psi, int steps, int w) {
  const int n = psi.source();
  if (psi.target() != 0 || w < 1 || n % w != 0) throw MalformedInput("rotation needs an invariant on whole bundles");
  const int blocks = n / w;
  if (blocks == 0) return psi;
  steps = ((steps % blocks) + blocks) % blocks;
  MetricPropMorphism cur = psi;
  for (int s = 0; s < steps; ++s) {
    MetricPropMorphism next(n);
    for (int k = 0; k < w; ++k) {
      MetricLayer l;
      l.kind = MetricLayer::Kind::create;
      l.offset = k;
      next.push(std::move(l));
    }
    for (MetricLayer l : cur.layers()) {
      l.offset += w;
      next.push(std::move(l));
    }
    for (int k = 0; k < w; ++k) {
      MetricLayer l;
      l.kind = MetricLayer::Kind::annihilate;
      l.offset = w - 1 - k;
      next.push(std::move(l));
    }
    cur = std::move(next);
  }
  return cur;
}

MetricPropMorphism act_on_invariant(const ParbMorphism& g, const MetricPropMorphism& psi, int w) {
  if (psi.source() != (g.arity() + 1) * w) throw CompositionError("invariant has the wrong number of legs");
  return metric_compose(MetricPropMorphism::ribbon(psi.source(), 0, g, w), psi);
}

namespace {

int position_of_one(const ParenWord& p) {
  std::vector<int> leaves = p.leaves();
  return static_cast<int>(std::find(leaves.begin(), leaves.end(), 1) - leaves.begin());
}

}  // namespace

MetricPropMorphism transpose(const ParbMorphism& f, const MetricPropMorphism& psi, int w) {
  const int blocks = f.arity() + 1;
  MetricPropMorphism rooted = rotate_invariant(psi, blocks - position_of_one(f.target) - 1, w);
  return rotate_invariant(act_on_invariant(f, rooted, w), position_of_one(f.source) + 1, w);
}

// ---- tangles ----

int TangleSlice::consumed() const {
  switch (kind) {
    case Kind::cap: return left + 2 + right;
    case Kind::cup: return left + right;
    case Kind::ribbon: return rb.strands();
  }
  return 0;
}

int TangleSlice::produced() const {
  switch (kind) {
    case Kind::cap: return left + right;
    case Kind::cup: return left + 2 + right;
    case Kind::ribbon: return rb.strands();
  }
  return 0;
}

bool operator==(const TangleSlice& a, const TangleSlice& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == TangleSlice::Kind::ribbon) return a.rb.braid == b.rb.braid && a.rb.twists == b.rb.twists;
  return a.left == b.left && a.right == b.right;
}

int TangleDiagram::target() const {
  int w = source;
  for (const TangleSlice& s : slices) w += s.produced() - s.consumed();
  return w;
}

void validate(const TangleDiagram& t) {
  int w = t.source;
  for (std::size_t k = 0; k < t.slices.size(); ++k) {
    const TangleSlice& s = t.slices[k];
    if (s.left < 0 || s.right < 0 || s.consumed() != w)
      throw MalformedInput(fmt::format("slice {} needs {} strands, {} arrive", k + 1, s.consumed(), w));
    w = s.produced();
  }
  if (t.objects && (t.objects->first.size() != t.source || t.objects->second.size() != w))
    throw MalformedInput("objects do not match the arities");
}

namespace {

RibbonBraid pad_rb(const RibbonBraid& rb, int left, int total) {
  std::vector<int> twists(total, 0);
  std::copy(rb.twists.begin(), rb.twists.end(), twists.begin() + left);
  return RibbonBraid(shift(rb.braid, left, total), std::move(twists));
}

TangleSlice padded_slice(TangleSlice s, int left, int right) {
  if (s.kind == TangleSlice::Kind::ribbon) {
    s.rb = pad_rb(s.rb, left, left + s.rb.strands() + right);
  } else {
    s.left += left;
    s.right += right;
  }
  return s;
}

}  // namespace

TangleDiagram tangle_stack(const TangleDiagram& a, const TangleDiagram& b) {
  if (a.target() != b.source) throw CompositionError("tangle arities do not match");
  TangleDiagram out = a;
  out.slices.insert(out.slices.end(), b.slices.begin(), b.slices.end());
  if (a.objects && b.objects) {
    if (a.objects->second != b.objects->first) throw CompositionError("tangle objects do not match");
    out.objects->second = b.objects->second;
  } else {
    out.objects.reset();
  }
  return out;
}

TangleDiagram tangle_juxtapose(const TangleDiagram& a, const TangleDiagram& b) {
  TangleDiagram out;
  out.source = a.source + b.source;
  for (const TangleSlice& s : a.slices) out.slices.push_back(padded_slice(s, 0, b.source));
  const int at = a.target();
  for (const TangleSlice& s : b.slices) out.slices.push_back(padded_slice(s, at, 0));
  return out;
}

std::string to_string(const TangleDiagram& t) {
  std::string out = fmt::format("tangle m={} n={}", t.source, t.target());
  if (t.objects) out += fmt::format("\nobjects: {} -> {}", t.objects->first.str(), t.objects->second.str());
  for (const TangleSlice& s : t.slices) {
    switch (s.kind) {
      case TangleSlice::Kind::cap: out += fmt::format("\ncap {} {}", s.left, s.right); break;
      case TangleSlice::Kind::cup: out += fmt::format("\ncup {} {}", s.left, s.right); break;
      case TangleSlice::Kind::ribbon: out += '\n' + to_string(s.rb); break;
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// Reads "<int> <int>" after a keyword.
std::pair<int, int> read_pair(std::string_view body, std::size_t pos) {
  int vals[2];
  const char* p = body.data();
  const char* end = body.data() + body.size();
  for (int& v : vals) {
    while (p < end && *p == ' ') ++p;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || v < 0) throw ParseError("expected a non-negative integer", pos + (p - body.data()));
    p = next;
  }
  while (p < end && *p == ' ') ++p;
  if (p != end) throw ParseError("unexpected text", pos + (p - body.data()));
  return {vals[0], vals[1]};
}

}  // namespace

TangleDiagram parse_tangle(std::string_view text) {
  TangleDiagram t;
  bool header = false;
  int declared_target = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find_first_of("\n;", start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    std::size_t lead = raw.find_first_not_of(" \t\r");
    std::size_t pos = start + (lead == std::string_view::npos ? 0 : lead);
    std::string_view line = trim(raw);
    start = stop + 1;
    if (line.empty()) continue;
    if (!header) {
      if (!starts_with(line, "tangle ")) throw ParseError("expected 'tangle m=.. n=..'", pos);
      std::string_view rest = trim(line.substr(7));
      if (!starts_with(rest, "m=")) throw ParseError("expected 'm='", pos + 7);
      std::size_t sp = rest.find(' ');
      if (sp == std::string_view::npos || !starts_with(trim(rest.substr(sp)), "n="))
        throw ParseError("expected 'n='", pos + 7);
      std::string both = std::string(rest.substr(2, sp - 2)) + " " + std::string(trim(rest.substr(sp)).substr(2));
      auto [m, n] = read_pair(both, pos + 9);
      t.source = m;
      declared_target = n;
      header = true;
      continue;
    }
    if (starts_with(line, "objects:")) {
      if (!t.slices.empty() || t.objects) throw ParseError("objects must follow the header", pos);
      std::string_view body = line.substr(8);
      std::size_t arrow = body.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected '->'", pos);
      t.objects.emplace(parse_paren(trim(body.substr(0, arrow))), parse_paren(trim(body.substr(arrow + 2))));
      continue;
    }
    TangleSlice s;
    if (starts_with(line, "cap ") || starts_with(line, "cup ")) {
      s.kind = line[1] == 'a' ? TangleSlice::Kind::cap : TangleSlice::Kind::cup;
      auto [l, r] = read_pair(line.substr(4), pos + 4);
      s.left = l;
      s.right = r;
    } else if (starts_with(line, "rbraid")) {
      try {
        s.rb = parse_rbraid(line);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + e.position());
      }
    } else {
      throw ParseError("expected cap, cup or rbraid", pos);
    }
    t.slices.push_back(std::move(s));
  }
  if (!header) throw ParseError("empty tangle", 0);
  validate(t);
  if (t.target() != declared_target)
    throw MalformedInput(fmt::format("declared n={} but the slices end with {} strands", declared_target, t.target()));
  return t;
}

TLMorphism eval_tangle(const TLModel& model, const TangleDiagram& t) {
  validate(t);
  TLMorphism acc = TLMorphism::identity(t.source);
  for (const TangleSlice& s : t.slices) {
    switch (s.kind) {
      case TangleSlice::Kind::cap: acc = model.compose(acc, padded(TLMorphism::cap(), s.left, s.right)); break;
      case TangleSlice::Kind::cup: acc = model.compose(acc, padded(TLMorphism::cup(), s.left, s.right)); break;
      case TangleSlice::Kind::ribbon: acc = model.compose(acc, model.eval(s.rb)); break;
    }
  }
  return acc;
}

RibbonBraid rb_cable(const RibbonBraid& rb, int w) {
  if (w < 1) throw MalformedInput("bundle width must be positive");
  const int n = rb.strands(), total = n * w;
  BraidWord braid(total);
  std::vector<int> twists(total);
  for (int p = 0; p < n; ++p) {
    if (rb.twists[p] != 0) braid *= shift(full_twist(w).pow(rb.twists[p]), p * w, total);
    std::fill(twists.begin() + p * w, twists.begin() + (p + 1) * w, rb.twists[p]);
  }
  braid *= cable(rb.braid, std::vector<int>(n, w));
  return RibbonBraid(std::move(braid), std::move(twists));
}

TangleDiagram turaev_functor(const MetricPropMorphism& m) {
  TangleDiagram out;
  out.source = m.source();
  int width = m.source();
  for (const MetricLayer& l : m.layers()) {
    TangleSlice s;
    const int right = width - l.offset - l.consumed();
    switch (l.kind) {
      case MetricLayer::Kind::ribbon:
        s.rb = pad_rb(rb_cable(l.op.rb, l.width), l.offset, width);
        break;
      case MetricLayer::Kind::create:
        s.kind = TangleSlice::Kind::cup;
        s.left = l.offset;
        s.right = right;
        break;
      case MetricLayer::Kind::annihilate:
        s.kind = TangleSlice::Kind::cap;
        s.left = l.offset;
        s.right = right;
        break;
      case MetricLayer::Kind::inverse:
        throw MalformedInput("a formal inverse has no tangle diagram");
    }
    out.slices.push_back(std::move(s));
    width += l.produced() - l.consumed();
  }
  return out;
}

// ---- GT on the duality ----

MetricPropMorphism nu_inverse(const GtElement& e) {
  MetricPropMorphism out = MetricPropMorphism::create(1, 0);
  out = metric_compose(out, MetricPropMorphism::ribbon(3, 0, gt_generator_image(e, Generator::alpha)));
  return metric_compose(out, MetricPropMorphism::annihilate(3, 1));
}

MetricPropMorphism rho_inverse(const GtElement& e) {
  MetricPropMorphism out = MetricPropMorphism::create(1, 1);
  out = metric_compose(out, MetricPropMorphism::ribbon(3, 0, gt_generator_image(e, Generator::alpha_inv)));
  return metric_compose(out, MetricPropMorphism::annihilate(3, 0));
}

namespace {

MetricPropMorphism act(const GtElement& e, const MetricPropMorphism& m, DualityRule rule,
                       const std::shared_ptr<const MetricPropMorphism>& correction) {
  MetricPropMorphism out(m.source());
  for (MetricLayer l : m.layers()) {
    switch (l.kind) {
      case MetricLayer::Kind::ribbon:
        l.op = gt_apply(e, l.op);
        break;
      case MetricLayer::Kind::create:
        break;
      case MetricLayer::Kind::annihilate: {
        MetricLayer fix;
        fix.kind = MetricLayer::Kind::inverse;
        fix.offset = rule == DualityRule::nu ? l.offset + 1 : l.offset;
        fix.inner = correction;
        out.push(std::move(fix));
        break;
      }
      case MetricLayer::Kind::inverse:
        l.inner = std::make_shared<const MetricPropMorphism>(act(e, *l.inner, rule, correction));
        break;
    }
    out.push(std::move(l));
  }
  return out;
}

}  // namespace

MetricPropMorphism gt_act_on_tangles(const GtElement& e, const MetricPropMorphism& m, DualityRule rule) {
  if (e.mode != GtElement::Mode::discrete) throw MalformedInput("the tangle action needs a discrete GT element");
  auto correction =
      std::make_shared<const MetricPropMorphism>(rule == DualityRule::nu ? nu_inverse(e) : rho_inverse(e));
  return act(e, m, rule, correction);
}

}  // namespace parb
