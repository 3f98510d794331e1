#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "parb/free_group.hpp"
#include "parb/parb.hpp"
#include "parb/report.hpp"
#include "parb/series.hpp"

namespace parb {

inline constexpr int max_truncation_degree = 8;

// Free algebra on X, Y truncated at the given degree (shared per degree).
std::shared_ptr<const SeriesAlgebra> free_xy_algebra(int degree);
// Truncated group algebra of PB4 in the combed letters
// x12 | x13 x23 | x14 x24 x34, with levels 2, 3, 4.
std::shared_ptr<const SeriesAlgebra> combed_pb4_algebra(int degree);
// x -> 1 + X, y -> 1 + Y.
Series magnus_xy(const FreeWord& w, int degree);

struct GtElement {
  enum class Mode { discrete, truncated };

  Mode mode = Mode::discrete;
  mpq_class lambda = 1;
  FreeWord word{2};            // discrete f; for truncated elements, the word f came from, if any
  std::optional<Series> series;  // truncated f
  bool has_word = true;

  static GtElement discrete(long lambda, FreeWord f);
  static GtElement truncated(mpq_class lambda, Series f);
  static GtElement truncated(mpq_class lambda, const FreeWord& f, int degree);
  static GtElement identity() { return discrete(1, FreeWord(2)); }
  static GtElement identity(int degree) { return truncated(1, FreeWord(2), degree); }

  bool is_discrete() const { return mode == Mode::discrete; }
  long lambda_int() const;
  mpq_class mu() const { return (lambda - 1) / 2; }
  int degree() const;
  const Series& f_series() const;
};

// Same element viewed in truncated mode.
GtElement to_truncated(const GtElement& e, int degree);

// Where the mu-powers sit in relation (II), with z = (xy)^-1.  Only the
// drinfeld placement rejects (3, e), which does not preserve the hexagons.
enum class HexagonConvention {
  displayed,  // x^mu f(x,y) y^mu f(y,z) z^mu f(z,x) = 1
  drinfeld,   // f(x,y) x^mu f(z,x) z^mu f(y,z) y^mu = 1
};

CheckReport gt_check_discrete(const GtElement& e, HexagonConvention c = HexagonConvention::drinfeld);
CheckReport gt_check_truncated(const GtElement& e, HexagonConvention c = HexagonConvention::drinfeld);

// (l1, f1)(l2, f2) = (l1 l2, f1(f2 x^l2 f2^-1, y^l2) f2).
GtElement gt_multiply(const GtElement& a, const GtElement& b);

// Image of a generator: beta^lambda, tau^lambda, f(x12, x23) alpha.  Discrete only.
ParbMorphism gt_generator_image(const GtElement& e, Generator g);
ParbMorphism gt_apply(const GtElement& e, const OperadExpr& expr);
ParbMorphism gt_apply(const GtElement& e, const ParbMorphism& f);

// Images of both sides of (T), (H1), (H2), (P).  Discrete only.
CheckReport check_preserves_parb(const GtElement& e);
// The induced endomorphism commutes with the rotation on tau, beta, alpha,
// together with the commutation facts used to prove it.  Discrete only.
CheckReport check_cyclic_lift(const GtElement& e);

// "gt lambda=<int|rational> f=<word>"; with a degree the element is truncated.
GtElement parse_gt(std::string_view text, std::optional<int> truncated_degree = std::nullopt);
std::string to_string(const GtElement& e);

}  // namespace parb
