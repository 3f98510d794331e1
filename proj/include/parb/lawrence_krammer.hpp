#pragma once

#include <cstddef>
#include <vector>

#include "parb/braid.hpp"
#include "parb/laurent.hpp"

namespace parb {

// Ring Z[q^±1, t^±1]; variable 0 is q, variable 1 is t.
using LaurentQT = Laurent<2>;

class LKMatrix {
 public:
  LKMatrix() = default;
  explicit LKMatrix(std::size_t dim);
  static LKMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  LaurentQT& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const LaurentQT& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  friend LKMatrix operator*(const LKMatrix& a, const LKMatrix& b);
  friend bool operator==(const LKMatrix&, const LKMatrix&) = default;
  std::size_t hash() const;

  LaurentQT determinant() const;

 private:
  std::size_t dim_ = 0;
  std::vector<LaurentQT> entries_;
};

// Lawrence-Krammer representation of Br_n on the free module with basis
// v_{jk}, 1 <= j < k <= n.  Faithful, so it decides the word problem.
class LawrenceKrammer {
 public:
  explicit LawrenceKrammer(int strands);

  int strands() const { return strands_; }
  std::size_t dim() const { return static_cast<std::size_t>(strands_ * (strands_ - 1) / 2); }

  const LKMatrix& generator(int i, int sign) const;
  LKMatrix image(const BraidWord& w) const;

 private:
  int strands_;
  std::vector<LKMatrix> positive_;
  std::vector<LKMatrix> negative_;
};

}  // namespace parb
