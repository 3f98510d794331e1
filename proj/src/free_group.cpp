#include "parb/free_group.hpp"

#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "parb/error.hpp"

namespace parb {

namespace {

char symbol_name(int rank, int symbol) {
  if (rank == 2) return symbol == 0 ? 'x' : 'y';
  return static_cast<char>('a' + symbol);
}

int symbol_index(int rank, char c) {
  if (rank == 2) {
    if (c == 'x') return 0;
    if (c == 'y') return 1;
    return -1;
  }
  int k = c - 'a';
  return k >= 0 && k < rank ? k : -1;
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<FreeLetter> letters) : rank_(rank) {
  if (rank < 1 || rank > 26) throw MalformedInput("free group rank must be in 1..26");
  for (const FreeLetter& l : letters) {
    if (l.symbol < 0 || l.symbol >= rank || (l.sign != 1 && l.sign != -1))
      throw MalformedInput("free letter out of range");
    if (!letters_.empty() && letters_.back().symbol == l.symbol && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int rank, int symbol, int power) {
  std::vector<FreeLetter> l(static_cast<std::size_t>(std::abs(power)), FreeLetter{symbol, power > 0 ? 1 : -1});
  return FreeWord(rank, std::move(l));
}

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> l;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back({it->symbol, -it->sign});
  return FreeWord(rank_, std::move(l));
}

FreeWord FreeWord::pow(int k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out(rank_);
  for (int j = 0; j < std::abs(k); ++j) out = out * base;
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw MalformedInput("free group rank mismatch");
  std::vector<FreeLetter> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(a.rank_, std::move(l));
}

std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t k = 0; k < l.size();) {
    std::size_t run = 1;
    while (k + run < l.size() && l[k + run] == l[k]) ++run;
    if (!out.empty()) out += ' ';
    out += symbol_name(w.rank(), l[k].symbol);
    int power = static_cast<int>(run) * l[k].sign;
    if (power != 1) out += fmt::format("^{}", power);
    k += run;
  }
  return out;
}

FreeWord parse_free_word(std::string_view s, int rank) {
  std::vector<FreeLetter> letters;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if ((c == 'e' && rank == 2) || c == '1') {
      ++i;
      any = true;
      continue;
    }
    int sym = symbol_index(rank, c);
    if (sym < 0) throw ParseError(fmt::format("unexpected '{}' in free word", c), i);
    ++i;
    int power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      auto [ptr, ec] = std::from_chars(s.data() + start + (s[start] == '+' ? 1 : 0), s.data() + i, power);
      if (ec != std::errc() || ptr != s.data() + i) throw ParseError("bad exponent", start);
      if (std::abs(power) > 100000) throw ParseError("exponent too large", start);
    }
    for (int k = 0; k < std::abs(power); ++k) letters.push_back({sym, power > 0 ? 1 : -1});
    any = true;
  }
  if (!any) throw ParseError("empty free word", 0);
  return FreeWord(rank, std::move(letters));
}

}  // namespace parb
