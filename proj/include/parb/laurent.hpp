#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parb {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("laurent coefficient overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("laurent coefficient overflow");
  return r;
}
}  // namespace detail

// Integer Laurent polynomial in N commuting variables; zero terms never stored.
template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, std::int64_t>;

  Laurent() = default;
  Laurent(std::int64_t c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponent{}] = c;
  }

  static Laurent monomial(std::int64_t c, const Exponent& e) {
    Laurent r;
    if (c != 0) r.terms_[e] = c;
    return r;
  }
  static Laurent variable(std::size_t i, int power = 1) {
    Exponent e{};
    e[i] = power;
    return monomial(1, e);
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  // Units of Z[x^±] are exactly ±monomials.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }
  Laurent unit_inverse() const {
    if (!is_unit()) throw std::domain_error("laurent polynomial is not a unit");
    Exponent e = terms_.begin()->first;
    for (auto& x : e) x = -x;
    return monomial(terms_.begin()->second, e);
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, detail::checked_mul(ca, cb));
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

  Laurent pow(int k) const {
    if (k < 0) return unit_inverse().pow(-k);
    Laurent r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Exponents in descending lexicographic order, e.g. "-A^2 - A^-2".
  std::string str(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::int64_t c = it->second;
      bool neg = c < 0;
      std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        int e = it->first[i];
        if (e == 0) continue;
        mono += names[i];
        if (e != 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag);
        out += mono;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [e, c] : terms_) {
      for (int x : e) h = (h ^ static_cast<std::size_t>(x + 0x1000)) * 0x100000001b3ULL;
      h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
    }
    return h;
  }

 private:
  void add_term(const Exponent& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

// One variable A: the Temperley-Lieb ground ring.
using LaurentA = Laurent<1>;

inline LaurentA A_pow(int k) { return LaurentA::variable(0, k); }
inline std::string to_string(const LaurentA& p) { return p.str({"A"}); }

// Parses the output of to_string, e.g. "-A^2 - A^-2", "3", "2A^-1 + A".
LaurentA parse_laurent(std::string_view text);

}  // namespace parb
