#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parb {

// Bijection of {1..n}, stored as its image list.  Products are diagrammatic:
// (p * q)(k) = q(p(k)), so that the permutation of a braid word is multiplicative.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Swaps i and i+1.
  static Permutation adjacent(int n, int i);
  static Permutation from_one_line(std::string_view digits);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  Permutation then(const Permutation& after) const;
  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

  // "231" when n < 10, otherwise "[10 2 ...]".
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct Letter {
  int gen = 1;   // 1-based Artin generator index
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Word in the Artin generators of Br_n.  Letters are read bottom to top, and
// the positive generator s_i takes strand i over strand i+1.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  static BraidWord generator(int strands, int i, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord& operator*=(const BraidWord& o);
  BraidWord inverse() const;
  BraidWord pow(int k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

// Left-greedy Garside normal form Delta^infimum * A_1 ... A_k, where each A_j is a
// permutation braid given by its permutation.
struct GarsideNormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
  friend auto operator<=>(const GarsideNormalForm&, const GarsideNormalForm&) = default;
  std::size_t hash() const;
};

GarsideNormalForm garside_normal_form(const BraidWord& w);
// Normal form of nf * w without re-reading nf.
GarsideNormalForm garside_multiply(const GarsideNormalForm& nf, const BraidWord& w);
// Canonical braid word of a normal form.
BraidWord canonical_word(const GarsideNormalForm& nf);
// Positive permutation braid realising p.
BraidWord permutation_braid(const Permutation& p);
BraidWord half_twist(int strands);

bool braid_equal(const BraidWord& a, const BraidWord& b);

// Bottom position k ends at top position pi(k); letter signs are ignored.
Permutation underlying_permutation(const BraidWord& w);

// x_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_braid_generator(int i, int j, int strands);
// (s_1 ... s_{m-1})^m.
BraidWord full_twist(int m);
// Replaces the strand starting at bottom position k by widths[k-1] parallel strands.
BraidWord cable(const BraidWord& w, const std::vector<int>& widths);
// Places w on strands offset+1 .. offset+w.strands() of a braid on `strands` strands.
BraidWord shift(const BraidWord& w, int offset, int strands);

std::string to_string(const BraidWord& w);
std::string tokens_string(const std::vector<Letter>& letters);
BraidWord parse_braid(std::string_view text);

}  // namespace parb

template <>
struct std::hash<parb::GarsideNormalForm> {
  std::size_t operator()(const parb::GarsideNormalForm& nf) const { return nf.hash(); }
};
