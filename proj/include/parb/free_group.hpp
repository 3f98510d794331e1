#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parb {

struct FreeLetter {
  int symbol = 0;  // 0-based
  int sign = 1;
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

// Freely reduced word in the free group on `rank` symbols.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank, std::vector<FreeLetter> letters = {});
  static FreeWord generator(int rank, int symbol, int power = 1);

  int rank() const { return rank_; }
  const std::vector<FreeLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(int k) const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  // Image under the homomorphism sending symbol k to images[k].
  template <class T, class Mul, class Inv>
  T substitute(const std::vector<T>& images, const T& one, Mul mul, Inv inv) const {
    std::vector<T> inverses;
    inverses.reserve(images.size());
    for (const T& v : images) inverses.push_back(inv(v));
    T out = one;
    for (const FreeLetter& l : letters_) out = mul(out, l.sign > 0 ? images[l.symbol] : inverses[l.symbol]);
    return out;
  }

 private:
  int rank_ = 2;
  std::vector<FreeLetter> letters_;
};

// Symbols print as x, y for rank 2 and a, b, c, ... otherwise; the empty word is "e".
std::string to_string(const FreeWord& w);
// Accepts "x y^-1 x^3", "x*y", "e" or "1".
FreeWord parse_free_word(std::string_view text, int rank = 2);

}  // namespace parb
