#include "parb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw MalformedInput("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw MalformedInput("negative permutation size");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw MalformedInput(fmt::format("transposition ({} {}) out of range", i, i + 1));
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_one_line(std::string_view s) {
  std::vector<int> im;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw MalformedInput("unterminated permutation");
    std::size_t i = 1;
    while (i + 1 < s.size()) {
      while (i + 1 < s.size() && s[i] == ' ') ++i;
      if (i + 1 >= s.size()) break;
      int v = 0;
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw MalformedInput("bad permutation entry");
      while (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      im.push_back(v);
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw MalformedInput("bad permutation digit");
      im.push_back(c - '0');
    }
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r = identity(size());
  for (int k = 0; k < size(); ++k) r.images_[images_[k] - 1] = k + 1;
  return r;
}

Permutation Permutation::then(const Permutation& after) const {
  if (after.size() != size()) throw MalformedInput("permutation size mismatch");
  Permutation r = identity(size());
  for (int k = 0; k < size(); ++k) r.images_[k] = after.images_[images_[k] - 1];
  return r;
}

std::string Permutation::one_line() const {
  std::string out;
  if (size() < 10) {
    for (int v : images_) out += static_cast<char>('0' + v);
    return out;
  }
  out = "[";
  for (int k = 0; k < size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(images_[k]);
  }
  return out + "]";
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 0) throw MalformedInput("negative strand count");
  for (const Letter& l : letters_) {
    if (l.gen < 1 || l.gen >= strands_)
      throw MalformedInput(fmt::format("generator s{} out of range for {} strands", l.gen, strands_));
    if (l.sign != 1 && l.sign != -1) throw MalformedInput("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::generator(int strands, int i, int sign) { return BraidWord(strands, {{i, sign}}); }

BraidWord BraidWord::operator*(const BraidWord& o) const {
  BraidWord r = *this;
  r *= o;
  return r;
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
  if (o.strands_ != strands_) throw MalformedInput("strand count mismatch");
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(strands_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->gen, -it->sign});
  return r;
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord r(strands_);
  for (int j = 0; j < std::abs(k); ++j) r *= base;
  return r;
}

// ---- Garside machinery on 0-based permutation braids ----

namespace {

using Perm = std::vector<int>;  // bottom position k -> top position p[k], 0-based

Perm delta_perm(int n) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

bool is_identity(const Perm& p) {
  for (int k = 0; k < static_cast<int>(p.size()); ++k)
    if (p[k] != k) return false;
  return true;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (int k = 0; k < static_cast<int>(p.size()); ++k) r[p[k]] = k;
  return r;
}

// A -> A s_i
void append_crossing(Perm& p, int i) {
  for (int& v : p) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
}

// A -> s_i^-1 A
void strip_crossing(Perm& p, int i) { std::swap(p[i], p[i + 1]); }

bool starts_with(const Perm& p, int i) { return p[i] > p[i + 1]; }

Perm flip(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm r(n);
  for (int k = 0; k < n; ++k) r[k] = n - 1 - p[n - 1 - k];
  return r;
}

struct Engine {
  int n;
  int inf = 0;
  std::vector<Perm> factors;

  // Restores left-weightedness after a new factor was appended on the right.
  void append(Perm b) {
    if (is_identity(b)) return;
    factors.push_back(std::move(b));
    for (int j = static_cast<int>(factors.size()) - 2; j >= 0; --j) {
      Perm& left = factors[j];
      Perm& right = factors[j + 1];
      Perm left_inv = inverse(left);
      bool moved = false;
      bool again = true;
      while (again) {
        again = false;
        for (int i = 0; i + 1 < n; ++i) {
          // i must start `right` and not already finish `left`.
          if (starts_with(right, i) && left_inv[i] < left_inv[i + 1]) {
            append_crossing(left, i);
            strip_crossing(right, i);
            left_inv = inverse(left);
            again = moved = true;
          }
        }
      }
      if (is_identity(right)) factors.erase(factors.begin() + j + 1);
      if (!moved) break;
    }
    Perm delta = delta_perm(n);
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead] == delta) ++lead;
    if (lead) {
      inf += static_cast<int>(lead);
      factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));
    }
  }

  void times_delta_inverse() {
    --inf;
    for (Perm& f : factors) f = flip(f);
  }

  void letter(const Letter& l) {
    int i = l.gen - 1;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    if (l.sign > 0) {
      append_crossing(p, i);
      append(std::move(p));
    } else {
      // s_i^-1 = Delta^-1 (Delta s_i^-1)
      times_delta_inverse();
      Perm rest = delta_perm(n);
      append_crossing(rest, i);
      append(std::move(rest));
    }
  }
};

Permutation to_public(const Perm& p) {
  std::vector<int> im(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) im[k] = p[k] + 1;
  return Permutation(std::move(im));
}

Perm to_private(const Permutation& p) {
  Perm r(p.size());
  for (int k = 0; k < p.size(); ++k) r[k] = p.images()[k] - 1;
  return r;
}

Engine load(const GarsideNormalForm& nf) {
  Engine e{nf.strands, 0, {}};
  e.inf = nf.infimum;
  for (const auto& f : nf.factors) e.factors.push_back(to_private(f));
  return e;
}

GarsideNormalForm store(const Engine& e) {
  GarsideNormalForm nf;
  nf.strands = e.n;
  nf.infimum = e.inf;
  for (const auto& f : e.factors) nf.factors.push_back(to_public(f));
  return nf;
}

}  // namespace

std::size_t GarsideNormalForm::hash() const {
  std::size_t h = std::hash<int>{}(strands) * 0x9e3779b97f4a7c15ULL ^ std::hash<int>{}(infimum);
  for (const auto& f : factors)
    for (int v : f.images()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

GarsideNormalForm garside_multiply(const GarsideNormalForm& nf, const BraidWord& w) {
  if (nf.strands != w.strands()) throw MalformedInput("strand count mismatch");
  if (w.strands() <= 1) return nf;
  Engine e = load(nf);
  for (const Letter& l : w.letters()) e.letter(l);
  return store(e);
}

GarsideNormalForm garside_normal_form(const BraidWord& w) {
  GarsideNormalForm nf;
  nf.strands = w.strands();
  return garside_multiply(nf, w);
}

BraidWord permutation_braid(const Permutation& p) {
  Perm q = to_private(p);
  int n = p.size();
  std::vector<Letter> letters;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(q, i)) {
        letters.push_back({i + 1, 1});
        strip_crossing(q, i);
        found = true;
        break;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord half_twist(int strands) { return permutation_braid(to_public(delta_perm(strands))); }

BraidWord canonical_word(const GarsideNormalForm& nf) {
  BraidWord w = half_twist(nf.strands).pow(nf.infimum);
  for (const auto& f : nf.factors) w *= permutation_braid(f);
  return w;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) return false;
  return garside_normal_form(a) == garside_normal_form(b);
}

Permutation underlying_permutation(const BraidWord& w) {
  Perm p(w.strands());
  std::iota(p.begin(), p.end(), 0);
  for (const Letter& l : w.letters()) append_crossing(p, l.gen - 1);
  return to_public(p);
}

BraidWord pure_braid_generator(int i, int j, int strands) {
  if (i < 1 || i >= j || j > strands)
    throw MalformedInput(fmt::format("pure braid x{}{} invalid for {} strands", i, j, strands));
  std::vector<Letter> letters;
  for (int k = j - 1; k > i; --k) letters.push_back({k, 1});
  letters.push_back({i, 1});
  letters.push_back({i, 1});
  for (int k = i + 1; k < j; ++k) letters.push_back({k, -1});
  return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int m) {
  if (m < 1) throw MalformedInput("full twist needs at least one strand");
  std::vector<Letter> row;
  for (int i = 1; i < m; ++i) row.push_back({i, 1});
  return BraidWord(m, std::move(row)).pow(m);
}

namespace {

// Block of width a at offset o crossing over the adjacent block of width b.
void block_crossing(std::vector<Letter>& out, int o, int a, int b) {
  for (int k = a - 1; k >= 0; --k)
    for (int g = o + k + 1; g <= o + k + b; ++g) out.push_back({g, 1});
}

}  // namespace

BraidWord cable(const BraidWord& w, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != w.strands()) throw MalformedInput("cable widths length mismatch");
  std::vector<int> cur = widths;
  int total = 0;
  for (int x : widths) {
    if (x < 0) throw MalformedInput("negative cable width");
    total += x;
  }
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    int i = l.gen - 1;
    int o = std::accumulate(cur.begin(), cur.begin() + i, 0);
    int a = cur[i], b = cur[i + 1];
    if (l.sign > 0) {
      block_crossing(out, o, a, b);
    } else {
      std::vector<Letter> pos;
      block_crossing(pos, o, b, a);
      for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back({it->gen, -1});
    }
    std::swap(cur[i], cur[i + 1]);
  }
  return BraidWord(total, std::move(out));
}

BraidWord shift(const BraidWord& w, int offset, int strands) {
  if (offset < 0 || offset + w.strands() > strands) throw MalformedInput("shift out of range");
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) out.push_back({l.gen + offset, l.sign});
  return BraidWord(strands, std::move(out));
}

std::string tokens_string(const std::vector<Letter>& letters) {
  if (letters.empty()) return "(id)";
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += fmt::format("s{}{}", l.gen, l.sign < 0 ? "^-1" : "");
  }
  return out;
}

std::string to_string(const BraidWord& w) { return fmt::format("braid n={}: {}", w.strands(), tokens_string(w.letters())); }

BraidWord parse_braid(std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto expect = [&](std::string_view lit) {
    if (s.substr(i, lit.size()) != lit) throw ParseError(fmt::format("expected '{}'", lit), i);
    i += lit.size();
  };
  auto number = [&]() {
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 1000000) throw ParseError("number too large", start);
    }
    if (i == start) throw ParseError("expected number", start);
    return static_cast<int>(v);
  };

  skip();
  expect("braid n=");
  int n = number();
  if (n < 1) throw ParseError("strand count must be positive", i);
  expect(":");
  skip();
  std::vector<Letter> letters;
  if (s.substr(i, 4) == "(id)") {
    i += 4;
    skip();
    if (i != s.size()) throw ParseError("unexpected input after (id)", i);
    return BraidWord(n);
  }
  while (i < s.size()) {
    std::size_t start = i;
    expect("s");
    int g = number();
    int sign = 1;
    if (s.substr(i, 3) == "^-1") {
      sign = -1;
      i += 3;
    }
    if (g < 1 || g >= n) throw ParseError(fmt::format("generator s{} out of range", g), start);
    letters.push_back({g, sign});
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) throw ParseError("expected whitespace", i);
    skip();
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace parb
