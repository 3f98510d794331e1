#include "parb/laurent.hpp"

#include <cctype>

#include "parb/error.hpp"

namespace parb {

LaurentA parse_laurent(std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> std::int64_t {
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected integer", start);
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = detail::checked_add(detail::checked_mul(v, 10), s[i++] - '0');
    return neg ? -v : v;
  };

  LaurentA result;
  skip();
  if (s.substr(i) == "0") return result;
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '-' || s[i] == '+') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int();
      have_coeff = true;
    }
    int exp = 0;
    if (i < s.size() && s[i] == 'A') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = static_cast<int>(read_int());
      }
    } else if (!have_coeff) {
      throw ParseError("expected term", i);
    }
    result += LaurentA::monomial(sign * coeff, {exp});
  }
  if (first) throw ParseError("empty polynomial", 0);
  return result;
}

}  // namespace parb
