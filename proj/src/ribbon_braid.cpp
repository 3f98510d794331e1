#include "parb/ribbon_braid.hpp"

#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

RibbonBraid::RibbonBraid(BraidWord b, std::vector<int> t) : braid(std::move(b)), twists(std::move(t)) {
  if (static_cast<int>(twists.size()) != braid.strands()) throw MalformedInput("twist vector length mismatch");
}

RibbonBraid::RibbonBraid(BraidWord b) : braid(std::move(b)), twists(braid.strands(), 0) {}

RibbonBraid RibbonBraid::identity(int strands) { return RibbonBraid(BraidWord(strands)); }

RibbonBraid RibbonBraid::crossing(int strands, int i, int sign) {
  return RibbonBraid(BraidWord::generator(strands, i, sign));
}

RibbonBraid RibbonBraid::twist(int strands, int i, int power) {
  if (i < 1 || i > strands) throw MalformedInput(fmt::format("twist t{} out of range", i));
  RibbonBraid r = identity(strands);
  r.twists[i - 1] = power;
  return r;
}

int RibbonBraid::twist_sum() const { return std::accumulate(twists.begin(), twists.end(), 0); }

RibbonBraid rb_compose(const RibbonBraid& a, const RibbonBraid& b) {
  if (a.strands() != b.strands()) throw MalformedInput("strand count mismatch");
  Permutation pa = underlying_permutation(a.braid);
  RibbonBraid r(a.braid * b.braid, a.twists);
  for (int p = 1; p <= a.strands(); ++p) r.twists[p - 1] += b.twists[pa(p) - 1];
  return r;
}

RibbonBraid operator*(const RibbonBraid& a, const RibbonBraid& b) { return rb_compose(a, b); }

RibbonBraid rb_inverse(const RibbonBraid& a) {
  Permutation pa = underlying_permutation(a.braid);
  RibbonBraid r(a.braid.inverse());
  for (int p = 1; p <= a.strands(); ++p) r.twists[pa(p) - 1] = -a.twists[p - 1];
  return r;
}

RibbonBraid rb_pow(const RibbonBraid& a, int k) {
  RibbonBraid base = k < 0 ? rb_inverse(a) : a;
  RibbonBraid r = RibbonBraid::identity(a.strands());
  for (int j = 0; j < std::abs(k); ++j) r = r * base;
  return r;
}

bool rb_equals(const RibbonBraid& a, const RibbonBraid& b) {
  return a.twists == b.twists && braid_equal(a.braid, b.braid);
}

RibbonBraid rb_canonical(const RibbonBraid& a) {
  return RibbonBraid(canonical_word(garside_normal_form(a.braid)), a.twists);
}

std::string to_string(const RibbonBraid& r) {
  std::string body;
  for (int p = 0; p < r.strands(); ++p)
    for (int k = 0; k < std::abs(r.twists[p]); ++k) {
      if (!body.empty()) body += ' ';
      body += fmt::format("t{}{}", p + 1, r.twists[p] < 0 ? "^-1" : "");
    }
  if (!r.braid.empty()) {
    if (!body.empty()) body += ' ';
    body += tokens_string(r.braid.letters());
  }
  if (body.empty()) body = "(id)";
  return fmt::format("rbraid n={}: {}", r.strands(), body);
}

RibbonBraid parse_rbraid(std::string_view s) {
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
  expect("rbraid n=");
  int n = number();
  if (n < 1) throw ParseError("strand count must be positive", i);
  expect(":");
  skip();
  RibbonBraid r = RibbonBraid::identity(n);
  if (s.substr(i, 4) == "(id)") {
    i += 4;
    skip();
    if (i != s.size()) throw ParseError("unexpected input after (id)", i);
    return r;
  }
  while (i < s.size()) {
    std::size_t start = i;
    char kind = s[i];
    if (kind != 's' && kind != 't') throw ParseError("expected 's' or 't'", i);
    ++i;
    int g = number();
    int sign = 1;
    if (s.substr(i, 3) == "^-1") {
      sign = -1;
      i += 3;
    }
    if (kind == 's') {
      if (g < 1 || g >= n) throw ParseError(fmt::format("generator s{} out of range", g), start);
      r = r * RibbonBraid::crossing(n, g, sign);
    } else {
      if (g < 1 || g > n) throw ParseError(fmt::format("twist t{} out of range", g), start);
      r = r * RibbonBraid::twist(n, g, sign);
    }
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) throw ParseError("expected whitespace", i);
    skip();
  }
  return r;
}

}  // namespace parb
