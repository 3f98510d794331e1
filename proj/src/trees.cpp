#include "parb/trees.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

namespace {

std::size_t subtree_end(const std::vector<int>& code, std::size_t pos) {
  int need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw MalformedInput("truncated tree code");
    need += code[pos++] == 0 ? 1 : -1;
  }
  return pos;
}

void check_labels(const std::vector<int>& labels) {
  std::vector<char> seen(labels.size() + 1, 0);
  for (int v : labels) {
    if (v < 1 || v > static_cast<int>(labels.size()) || seen[v]) throw MalformedInput("leaf labels must be 1..n");
    seen[v] = 1;
  }
}

}  // namespace

ParenWord ParenWord::from_code(std::vector<int> code) {
  if (code.empty() || subtree_end(code, 0) != code.size()) throw MalformedInput("bad tree code");
  std::vector<int> labels;
  for (int v : code)
    if (v != 0) labels.push_back(v);
  check_labels(labels);
  return ParenWord(std::move(code));
}

ParenWord ParenWord::join(const ParenWord& l, const ParenWord& r) {
  std::vector<int> code{0};
  code.insert(code.end(), l.code_.begin(), l.code_.end());
  code.insert(code.end(), r.code_.begin(), r.code_.end());
  return ParenWord(std::move(code));
}

ParenWord ParenWord::left_comb(const Permutation& order) {
  if (order.size() < 1) throw MalformedInput("empty leaf order");
  std::vector<int> code(static_cast<std::size_t>(order.size() - 1), 0);
  code.push_back(order(1));
  for (int k = 2; k <= order.size(); ++k) code.push_back(order(k));
  return ParenWord(std::move(code));
}

ParenWord ParenWord::right_comb(const Permutation& order) {
  if (order.size() < 1) throw MalformedInput("empty leaf order");
  std::vector<int> code;
  for (int k = 1; k < order.size(); ++k) {
    code.push_back(0);
    code.push_back(order(k));
  }
  code.push_back(order(order.size()));
  return ParenWord(std::move(code));
}

ParenWord ParenWord::left() const {
  if (is_leaf()) throw MalformedInput("leaf has no children");
  std::size_t mid = subtree_end(code_, 1);
  return ParenWord(std::vector<int>(code_.begin() + 1, code_.begin() + static_cast<std::ptrdiff_t>(mid)));
}

ParenWord ParenWord::right() const {
  if (is_leaf()) throw MalformedInput("leaf has no children");
  std::size_t mid = subtree_end(code_, 1);
  return ParenWord(std::vector<int>(code_.begin() + static_cast<std::ptrdiff_t>(mid), code_.end()));
}

std::vector<int> ParenWord::leaves() const {
  std::vector<int> out;
  for (int v : code_)
    if (v != 0) out.push_back(v);
  return out;
}

namespace {

void print_code(const std::vector<int>& code, std::size_t& pos, std::string& out, bool spaced) {
  int v = code[pos++];
  if (v != 0) {
    out += std::to_string(v);
    return;
  }
  out += '(';
  print_code(code, pos, out, spaced);
  if (spaced) out += ' ';
  print_code(code, pos, out, spaced);
  out += ')';
}

}  // namespace

std::string ParenWord::str() const {
  std::string out;
  std::size_t pos = 0;
  print_code(code_, pos, out, true);
  return out;
}

std::string ParenWord::compact() const {
  if (size() >= 10) return str();
  std::string out;
  std::size_t pos = 0;
  print_code(code_, pos, out, false);
  if (!is_leaf()) out = out.substr(1, out.size() - 2);
  return out;
}

std::size_t ParenWord::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : code_) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

ParenWord parse_paren(std::string_view s) {
  std::size_t i = 0;
  std::vector<int> code;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto rec = [&](auto& self) -> void {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    if (s[i] == '(') {
      ++i;
      code.push_back(0);
      self(self);
      self(self);
      skip();
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      return;
    }
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 100000) throw ParseError("label too large", start);
    }
    if (i == start) throw ParseError("expected label or '('", i);
    if (v == 0) throw ParseError("labels start at 1", start);
    code.push_back(static_cast<int>(v));
  };
  rec(rec);
  skip();
  if (i != s.size()) throw ParseError("unexpected trailing input", i);
  std::vector<int> labels;
  for (int v : code)
    if (v != 0) labels.push_back(v);
  try {
    check_labels(labels);
  } catch (const MalformedInput& e) {
    throw ParseError(e.what(), 0);
  }
  return ParenWord::from_code(std::move(code));
}

ParenWord graft(const ParenWord& s, const ParenWord& t, int i) {
  int n = s.size(), m = t.size();
  if (i < 1 || i > n) throw MalformedInput(fmt::format("graft position {} out of range 1..{}", i, n));
  std::vector<int> code;
  for (int v : s.code()) {
    if (v == 0) code.push_back(0);
    else if (v < i) code.push_back(v);
    else if (v > i) code.push_back(v + m - 1);
    else
      for (int u : t.code()) code.push_back(u == 0 ? 0 : u + i - 1);
  }
  return ParenWord::from_code(std::move(code));
}

Permutation forget_parens(const ParenWord& p) { return Permutation(p.leaves()); }

ParenWord relabel(const ParenWord& p, const Permutation& sigma) {
  if (sigma.size() != p.size()) throw MalformedInput("relabelling size mismatch");
  std::vector<int> code = p.code();
  for (int& v : code)
    if (v != 0) v = sigma(v);
  return ParenWord::from_code(std::move(code));
}

ParenWord shape_of(const ParenWord& p) {
  std::vector<int> code = p.code();
  int next = 1;
  for (int& v : code)
    if (v != 0) v = next++;
  return ParenWord::from_code(std::move(code));
}

std::vector<ParenWord> all_shapes(int leaves) {
  if (leaves < 1) throw MalformedInput("need at least one leaf");
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(leaves) + 1);
  by_size[1] = {{1}};
  for (int k = 2; k <= leaves; ++k)
    for (int a = 1; a < k; ++a)
      for (const auto& l : by_size[a])
        for (const auto& r : by_size[k - a]) {
          std::vector<int> code{0};
          code.insert(code.end(), l.begin(), l.end());
          code.insert(code.end(), r.begin(), r.end());
          by_size[k].push_back(std::move(code));
        }
  std::vector<ParenWord> out;
  for (auto code : by_size[leaves]) {
    int next = 1;
    for (int& v : code)
      if (v != 0) v = next++;
    out.push_back(ParenWord::from_code(std::move(code)));
  }
  return out;
}

std::vector<ParenWord> all_paren_words(int leaves) {
  std::vector<ParenWord> out;
  std::vector<int> perm(leaves);
  for (const auto& shape : all_shapes(leaves)) {
    std::iota(perm.begin(), perm.end(), 1);
    do {
      out.push_back(relabel(shape, Permutation(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::size_t catalan(int k) {
  std::size_t c = 1;
  for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

// ---- extended permutations ----

ExtendedPermutation::ExtendedPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) throw MalformedInput("not a bijection of {0..n}");
    seen[v] = 1;
  }
}

ExtendedPermutation ExtendedPermutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  std::iota(im.begin(), im.end(), 0);
  return ExtendedPermutation(std::move(im));
}

ExtendedPermutation ExtendedPermutation::rotation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) im[l] = (l + n) % (n + 1);
  return ExtendedPermutation(std::move(im));
}

ExtendedPermutation ExtendedPermutation::fixing_zero(const Permutation& p) {
  std::vector<int> im{0};
  im.insert(im.end(), p.images().begin(), p.images().end());
  return ExtendedPermutation(std::move(im));
}

ExtendedPermutation ExtendedPermutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) im[images_[k]] = static_cast<int>(k);
  return ExtendedPermutation(std::move(im));
}

ExtendedPermutation ExtendedPermutation::pow(int k) const {
  ExtendedPermutation base = k < 0 ? inverse() : *this;
  ExtendedPermutation r = identity(n());
  for (int j = 0; j < std::abs(k); ++j) r = r * base;
  return r;
}

ExtendedPermutation operator*(const ExtendedPermutation& s, const ExtendedPermutation& t) {
  if (s.n() != t.n()) throw MalformedInput("extended permutation size mismatch");
  std::vector<int> im(s.images_.size());
  for (std::size_t k = 0; k < im.size(); ++k) im[k] = s.images_[t.images_[k]];
  return ExtendedPermutation(std::move(im));
}

// ---- unrooted trees ----

namespace {

using Node = UnrootedTree::Node;

void collect(const Node& v, std::vector<int>& boundary, std::vector<int>& vertices) {
  if (v.is_leaf()) {
    boundary.push_back(v.label);
    return;
  }
  vertices.push_back(v.label);
  for (const auto& c : v.children) collect(c, boundary, vertices);
}

Node leaf_node(int label) { return Node{label, {}}; }

void print_node(const Node& v, std::string& out) {
  if (v.is_leaf()) {
    out += std::to_string(v.label);
    return;
  }
  out += '(';
  for (std::size_t k = 0; k < v.children.size(); ++k) {
    if (k) out += ' ';
    print_node(v.children[k], out);
  }
  out += ')';
}

bool find_path(const Node& v, int leaf, std::vector<std::size_t>& path) {
  if (v.is_leaf()) return v.label == leaf;
  for (std::size_t k = 0; k < v.children.size(); ++k) {
    path.push_back(k);
    if (find_path(v.children[k], leaf, path)) return true;
    path.pop_back();
  }
  return false;
}

// Re-roots at the leaf reached by `path`; `up` is the branch towards the old root.
Node reroot_along(const Node& v, const std::vector<std::size_t>& path, std::size_t depth, Node up) {
  std::size_t i = path[depth];
  Node turned{v.label, {}};
  for (std::size_t k = i + 1; k < v.children.size(); ++k) turned.children.push_back(v.children[k]);
  turned.children.push_back(std::move(up));
  for (std::size_t k = 0; k < i; ++k) turned.children.push_back(v.children[k]);
  const Node& next = v.children[i];
  if (next.is_leaf()) return turned;
  return reroot_along(next, path, depth + 1, std::move(turned));
}

void relabel_boundary(Node& v, const ExtendedPermutation& sigma) {
  if (v.is_leaf()) {
    v.label = sigma(v.label);
    return;
  }
  for (auto& c : v.children) relabel_boundary(c, sigma);
}

void shift_vertices(Node& v, int from, int by) {
  if (v.is_leaf()) return;
  if (v.label >= from) v.label += by;
  for (auto& c : v.children) shift_vertices(c, from, by);
}

void map_boundary(Node& v, const std::function<int(int)>& f) {
  if (v.is_leaf()) {
    v.label = f(v.label);
    return;
  }
  for (auto& c : v.children) map_boundary(c, f);
}

Node from_paren(const std::vector<int>& code, std::size_t& pos, int& next_vertex) {
  int v = code[pos++];
  if (v != 0) return leaf_node(v);
  Node n{next_vertex++, {}};
  n.children.push_back(from_paren(code, pos, next_vertex));
  n.children.push_back(from_paren(code, pos, next_vertex));
  return n;
}

void to_paren(const Node& v, std::vector<int>& code) {
  if (v.is_leaf()) {
    code.push_back(v.label);
    return;
  }
  if (v.children.size() != 2) throw MalformedInput("tree is not trivalent");
  code.push_back(0);
  to_paren(v.children[0], code);
  to_paren(v.children[1], code);
}

// Replaces the leaves of s (labels >= 1) by branches[label - 1].
Node plug(const Node& s, const std::vector<Node>& branches) {
  if (s.is_leaf()) return branches[static_cast<std::size_t>(s.label) - 1];
  Node r{s.label, {}};
  for (const auto& c : s.children) r.children.push_back(plug(c, branches));
  return r;
}

Node substitute_at(const Node& v, int vertex, const Node& s_top) {
  if (v.is_leaf()) return v;
  if (v.label == vertex) {
    Node s = s_top;
    shift_vertices(s, 1, vertex - 1);
    return plug(s, v.children);
  }
  Node r{v.label, {}};
  for (const auto& c : v.children) r.children.push_back(substitute_at(c, vertex, s_top));
  return r;
}

const Node* find_vertex(const Node& v, int vertex) {
  if (v.is_leaf()) return nullptr;
  if (v.label == vertex) return &v;
  for (const auto& c : v.children)
    if (const Node* f = find_vertex(c, vertex)) return f;
  return nullptr;
}

}  // namespace

UnrootedTree::UnrootedTree(Node top) : top_(std::move(top)) {
  std::vector<int> boundary, vertices;
  collect(top_, boundary, vertices);
  n_ = static_cast<int>(boundary.size());
  check_labels(boundary);
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (vs[k] != static_cast<int>(k) + 1) throw MalformedInput("vertex labels must be 1..k");
}

UnrootedTree UnrootedTree::corolla(int n) {
  if (n < 1) throw MalformedInput("corolla needs at least one leaf");
  if (n == 1) return edge();
  Node top{1, {}};
  for (int k = 1; k <= n; ++k) top.children.push_back(leaf_node(k));
  return UnrootedTree(std::move(top));
}

UnrootedTree UnrootedTree::edge() { return UnrootedTree(leaf_node(1)); }

int UnrootedTree::vertex_count() const {
  std::vector<int> boundary, vertices;
  collect(top_, boundary, vertices);
  return static_cast<int>(vertices.size());
}

int UnrootedTree::internal_edge_count() const { return std::max(0, vertex_count() - 1); }

int UnrootedTree::arity(int vertex) const {
  const Node* v = find_vertex(top_, vertex);
  if (!v) throw MalformedInput(fmt::format("no vertex {}", vertex));
  return static_cast<int>(v->children.size()) + 1;
}

std::string UnrootedTree::str() const {
  std::string out;
  print_node(top_, out);
  return out;
}

UnrootedTree parse_unrooted(std::string_view s) {
  std::size_t i = 0;
  int next_vertex = 1;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto rec = [&](auto& self) -> Node {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    if (s[i] == '(') {
      ++i;
      Node n{next_vertex++, {}};
      skip();
      while (i < s.size() && s[i] != ')') {
        n.children.push_back(self(self));
        skip();
      }
      if (i >= s.size()) throw ParseError("expected ')'", i);
      ++i;
      if (n.children.empty()) throw ParseError("empty vertex", i - 1);
      return n;
    }
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 100000) throw ParseError("label too large", start);
    }
    if (i == start) throw ParseError("expected label or '('", i);
    return leaf_node(static_cast<int>(v));
  };
  Node top = rec(rec);
  skip();
  if (i != s.size()) throw ParseError("unexpected trailing input", i);
  try {
    return UnrootedTree(std::move(top));
  } catch (const MalformedInput& e) {
    throw ParseError(e.what(), 0);
  }
}

UnrootedTree unroot(const ParenWord& p) {
  std::size_t pos = 0;
  int next_vertex = 1;
  return UnrootedTree(from_paren(p.code(), pos, next_vertex));
}

ParenWord reroot(const UnrootedTree& t) {
  std::vector<int> code;
  to_paren(t.top(), code);
  return ParenWord::from_code(std::move(code));
}

UnrootedTree sigma_plus_act(const ExtendedPermutation& sigma, const UnrootedTree& t) {
  int n = t.boundary_size() - 1;
  if (sigma.n() != n) throw MalformedInput("extended permutation size mismatch");
  Node top = t.top();
  relabel_boundary(top, sigma);
  int old_root = sigma(0);
  if (old_root == 0) return UnrootedTree(std::move(top));
  std::vector<std::size_t> path;
  if (top.is_leaf()) return UnrootedTree(leaf_node(old_root));  // the single edge
  find_path(top, 0, path);
  return UnrootedTree(reroot_along(top, path, 0, leaf_node(old_root)));
}

UnrootedTree tree_substitute(const UnrootedTree& t, int vertex, const UnrootedTree& s) {
  int a = t.arity(vertex);
  if (a != s.boundary_size())
    throw MalformedInput(fmt::format("vertex {} has arity {} but the inserted tree has {} boundary edges", vertex, a,
                                     s.boundary_size()));
  int k = s.vertex_count();
  Node top = t.top();
  shift_vertices(top, vertex + 1, k - 1);
  return UnrootedTree(substitute_at(top, vertex, s.top()));
}

UnrootedTree unrooted_graft(const UnrootedTree& t, int i, const UnrootedTree& s) {
  int n = t.boundary_size() - 1, m = s.boundary_size() - 1;
  if (i < 1 || i > n) throw MalformedInput(fmt::format("graft position {} out of range 1..{}", i, n));
  Node inner = s.top();
  shift_vertices(inner, 1, t.vertex_count());
  map_boundary(inner, [&](int l) { return l + i - 1; });
  Node top = t.top();
  std::vector<std::size_t> path;
  find_path(top, i, path);
  map_boundary(top, [&](int l) { return l > i ? l + m - 1 : l; });
  if (path.empty()) return UnrootedTree(inner);
  std::function<void(Node&, std::size_t)> put = [&](Node& v, std::size_t depth) {
    if (depth + 1 == path.size()) {
      v.children[path[depth]] = inner;
      return;
    }
    put(v.children[path[depth]], depth + 1);
  };
  put(top, 0);
  return UnrootedTree(std::move(top));
}

}  // namespace parb

namespace parb {

Permutation block_relabelling(const Permutation& sigma, const Permutation& tau, int i) {
  int n = sigma.size(), m = tau.size();
  if (i < 1 || i > n) throw MalformedInput("block position out of range");
  int si = sigma(i);
  std::vector<int> im(static_cast<std::size_t>(n + m - 1));
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    int target = sigma(k) < si ? sigma(k) : sigma(k) + m - 1;
    im[k < i ? k - 1 : k + m - 2] = target;
  }
  for (int j = 1; j <= m; ++j) im[i + j - 2] = si - 1 + tau(j);
  return Permutation(std::move(im));
}

}  // namespace parb
