#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "parb/free_group.hpp"

namespace parb {

// Truncated noncommutative polynomials in letters X_0..X_{k-1}, where X_u stands
// for u - 1 in a completed group algebra.  Letters carry levels; a monomial is
// normal when levels never increase left to right.  For letters g, u with
// level(g) < level(u), g u g^-1 is a word in the letters of u's level, which
// gives the commutation rule
//   X_g X_u = Q + X_u X_g + Q X_g,  Q = (g u g^-1 - 1) - X_u.
// With a single level this is the free algebra.
class SeriesAlgebra {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, mpq_class>;

  // conjugates[g][u] = g u g^-1 as a word in the letters (rank = letter count);
  // only consulted when level[g] < level[u].
  SeriesAlgebra(std::vector<std::string> names, std::vector<int> levels, int degree,
                std::vector<std::vector<FreeWord>> conjugates = {});
  static std::shared_ptr<const SeriesAlgebra> free(std::vector<std::string> names, int degree);

  int letters() const { return static_cast<int>(names_.size()); }
  int degree() const { return degree_; }
  const std::string& name(int u) const { return names_[u]; }
  bool is_free() const { return free_; }

  // Product of two normal-form term maps.
  Terms multiply(const Terms& a, const Terms& b) const;

 private:
  const Terms& normal_form(const Monomial& m) const;

  std::vector<std::string> names_;
  std::vector<int> levels_;
  int degree_;
  bool free_ = true;
  std::vector<std::vector<Terms>> corrections_;  // Q for (g, u)
  mutable std::mutex lock_;
  mutable std::map<Monomial, Terms> cache_;
};

class Series {
 public:
  using Terms = SeriesAlgebra::Terms;

  Series() = default;
  explicit Series(std::shared_ptr<const SeriesAlgebra> alg, Terms terms = {});
  static Series constant(std::shared_ptr<const SeriesAlgebra> alg, const mpq_class& c);
  static Series one(std::shared_ptr<const SeriesAlgebra> alg) { return constant(std::move(alg), 1); }
  // X_u
  static Series letter(std::shared_ptr<const SeriesAlgebra> alg, int u);
  // 1 + X_u, the group element u
  static Series group_letter(std::shared_ptr<const SeriesAlgebra> alg, int u);

  const std::shared_ptr<const SeriesAlgebra>& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  mpq_class constant_term() const;
  bool is_zero() const { return terms_.empty(); }
  // Component of the given degree.
  Series homogeneous(int degree) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scaled(const mpq_class& c) const;
  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  // The following require constant term 1.
  Series inverse() const;
  Series power(const mpq_class& q) const;
  Series log() const;
  // Requires constant term 0.
  Series exp() const;

  std::string str() const;

 private:
  std::shared_ptr<const SeriesAlgebra> alg_;
  Terms terms_;
};

// Image of a word when symbol k is sent to the group-like element images[k].
Series magnus(const FreeWord& w, const std::vector<Series>& images);
// f(a, b, ..): every X_k of f replaced by images[k] - 1.
Series substitute(const Series& f, const std::vector<Series>& images);
// Every homogeneous component of a free-algebra series is a Lie polynomial.
bool is_lie(const Series& s);
// Group-like for the coproduct in which log(1 + X_k) is primitive, so that
// Magnus images of words qualify: after X_k -> exp(X_k) - 1 the log is Lie.
bool is_group_like(const Series& s);

}  // namespace parb
