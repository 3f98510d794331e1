#include "parb/lawrence_krammer.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "parb/error.hpp"

namespace parb {

LKMatrix::LKMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

LKMatrix LKMatrix::identity(std::size_t dim) {
  LKMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = LaurentQT(1);
  return m;
}

LKMatrix operator*(const LKMatrix& a, const LKMatrix& b) {
  if (a.dim_ != b.dim_) throw MalformedInput("matrix size mismatch");
  LKMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const LaurentQT& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) {
        const LaurentQT& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

std::size_t LKMatrix::hash() const {
  std::size_t h = dim_;
  for (const auto& e : entries_) h = (h ^ e.hash()) * 0x100000001b3ULL;
  return h;
}

LaurentQT LKMatrix::determinant() const {
  if (dim_ == 0) return LaurentQT(1);
  if (dim_ > 20) throw std::length_error("determinant dimension too large");
  std::unordered_map<std::uint32_t, LaurentQT> memo;
  auto rec = [&](auto& self, std::uint32_t mask) -> LaurentQT {
    std::size_t row = dim_ - static_cast<std::size_t>(std::popcount(mask));
    if (mask == 0) return LaurentQT(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    LaurentQT sum;
    int seen = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!(mask >> c & 1U)) continue;
      const LaurentQT& a = at(row, c);
      if (!a.is_zero()) {
        LaurentQT term = a * self(self, mask & ~(1U << c));
        if (seen % 2) sum -= term;
        else sum += term;
      }
      ++seen;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, (1U << dim_) - 1);
}

namespace {

LKMatrix inverse_of_unimodular(const LKMatrix& m) {
  std::size_t d = m.dim();
  LaurentQT det_inv = m.determinant().unit_inverse();
  LKMatrix inv(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      LKMatrix minor(d - 1);
      for (std::size_t i = 0, mi = 0; i < d; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < d; ++j) {
          if (j == c) continue;
          minor.at(mi, mj++) = m.at(i, j);
        }
        ++mi;
      }
      LaurentQT cof = minor.determinant() * det_inv;
      inv.at(c, r) = (r + c) % 2 ? -cof : cof;
    }
  if (!(m * inv == LKMatrix::identity(d))) throw std::logic_error("matrix inversion failed");
  return inv;
}

}  // namespace

LawrenceKrammer::LawrenceKrammer(int strands) : strands_(strands) {
  if (strands < 1) throw MalformedInput("strand count must be positive");
  const std::size_t d = dim();
  auto idx = [&](int j, int k) {
    // 1 <= j < k <= n, row-major over pairs
    std::size_t before = 0;
    for (int a = 1; a < j; ++a) before += static_cast<std::size_t>(strands_ - a);
    return before + static_cast<std::size_t>(k - j - 1);
  };
  const LaurentQT q = LaurentQT::variable(0);
  const LaurentQT t = LaurentQT::variable(1);
  const LaurentQT one(1);

  for (int i = 1; i < strands_; ++i) {
    LKMatrix m(d);
    for (int j = 1; j <= strands_; ++j)
      for (int k = j + 1; k <= strands_; ++k) {
        std::size_t col = idx(j, k);
        auto put = [&](int a, int b, const LaurentQT& c) { m.at(idx(a, b), col) += c; };
        if (i == j && i == k - 1) {
          put(j, k, -(t * q * q));
        } else if (i == j - 1) {
          put(i, k, q);
          put(i, j, q * q - q);
          put(j, k, one - q);
        } else if (i == j) {
          put(j + 1, k, one);
        } else if (i == k - 1) {
          put(j, i, q);
          put(j, k, one - q);
          put(i, k, -(q * q - q) * t);
        } else if (i == k) {
          put(j, k + 1, one);
        } else {
          put(j, k, one);
        }
      }
    negative_.push_back(inverse_of_unimodular(m));
    positive_.push_back(std::move(m));
  }
}

const LKMatrix& LawrenceKrammer::generator(int i, int sign) const {
  if (i < 1 || i >= strands_) throw MalformedInput("generator out of range");
  return sign > 0 ? positive_[i - 1] : negative_[i - 1];
}

LKMatrix LawrenceKrammer::image(const BraidWord& w) const {
  if (w.strands() != strands_) throw MalformedInput("strand count mismatch");
  LKMatrix r = LKMatrix::identity(dim());
  for (const Letter& l : w.letters()) r = r * generator(l.gen, l.sign);
  return r;
}

}  // namespace parb
