#pragma once

#include <map>
#include <string>
#include <vector>

#include "parb/laurent.hpp"
#include "parb/parb.hpp"

namespace parb {

// Perfect matching of the boundary of an m -> n diagram.  Bottom points are
// 0..m-1 left to right, top points m..m+n-1 left to right; entry k is the
// partner of point k.
using Matching = std::vector<int>;

// Non-crossing matchings of m + n points in canonical (lexicographic) order.
std::vector<Matching> tl_basis(int m, int n);
bool is_planar(const Matching& match, int m, int n);

// Linear combination of planar matchings; closed loops are never stored.
class TLMorphism {
 public:
  using Terms = std::map<Matching, LaurentA>;

  TLMorphism() = default;
  TLMorphism(int m, int n, Terms terms = {});
  static TLMorphism identity(int n);
  static TLMorphism cup();  // 0 -> 2
  static TLMorphism cap();  // 2 -> 0
  static TLMorphism matching(int m, int n, Matching match, LaurentA coefficient = 1);
  // 2 -> 2, cap below a cup
  static TLMorphism hook();
  static TLMorphism scalar(const LaurentA& c) { return TLMorphism(0, 0, {{Matching{}, c}}); }

  int source() const { return m_; }
  int target() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentA coefficient(const Matching& match) const;

  TLMorphism operator+(const TLMorphism& o) const;
  TLMorphism operator-(const TLMorphism& o) const;
  TLMorphism scaled(const LaurentA& c) const;
  friend bool operator==(const TLMorphism&, const TLMorphism&) = default;

 private:
  int m_ = 0, n_ = 0;
  Terms terms_;
};

TLMorphism tl_tensor(const TLMorphism& a, const TLMorphism& b);
// Stacking with closed loops counted: (matching, loops) -> coefficient.
std::map<std::pair<Matching, int>, LaurentA> tl_compose_counting(const TLMorphism& a, const TLMorphism& b);
// a then b, each loop contributing delta.
TLMorphism tl_compose(const TLMorphism& a, const TLMorphism& b, const LaurentA& delta);

// 0 -> 2w nested cups and 2w -> 0 nested caps.
TLMorphism nested_cup(int w);
TLMorphism nested_cap(int w);

// Rows indexed by tl_basis(m, n); "tl m=.. n=..", then "<matching> : <coefficient>".
std::string to_string(const TLMorphism& f);
TLMorphism parse_tl(std::string_view text);
std::string matching_string(const Matching& match);

using TLMatrix = std::vector<std::vector<LaurentA>>;

// Expansion of the morphisms images[j] in tl_basis(m, n): entry [row][j].
TLMatrix tl_matrix(const std::vector<TLMorphism>& images);
// Cyclic relabelling of the points of an N -> 0 morphism: point i moves to i + shift.
TLMorphism rotate_legs(const TLMorphism& psi, int shift);

// The Kauffman skein model: s_i goes to A id + A^-1 hook (the opposite with flip).
// The loop value and the twist scalar are solved, not assumed.
class TLModel {
 public:
  explicit TLModel(bool flip = false);

  bool flipped() const { return flip_; }
  const LaurentA& loop_value() const { return delta_; }
  const LaurentA& twist_scalar() const { return twist_; }
  // Whether theta_{2} = (theta x theta) c c with theta_2 the closure of the cabled crossing.
  bool balancing_holds() const { return balancing_; }

  TLMorphism compose(const TLMorphism& a, const TLMorphism& b) const { return tl_compose(a, b, delta_); }
  TLMorphism crossing(int sign = 1) const;
  TLMorphism eval(const BraidWord& w) const;
  TLMorphism eval(const RibbonBraid& rb) const;
  TLMorphism eval(const ParbMorphism& f) const { return eval(f.rb); }

  // Right partial closure of an (X x X) -> (X x X) morphism, X of width w.
  TLMorphism right_closure(const TLMorphism& f, int w) const;
  // Bundle of width p crossing over a bundle of width q.
  TLMorphism cabled_crossing(int p, int q, int sign = 1) const;
  // Twist on a bundle of width w: the closure of the cabled crossing.
  TLMorphism bundle_twist(int w, int sign = 1) const;

  // Generator-wise evaluation with the given width for each input label;
  // operadic insertion is evaluated as the inner morphism followed by the
  // outer one at the bundled width.
  TLMorphism eval(const OperadExpr& e, const std::vector<int>& widths) const;
  TLMorphism eval(const OperadExpr& e) const;

  // Action of f by precomposition on Hom(V^(n+1), 0), V a bundle of width w and
  // the last block the root: psi -> (f x id_V) then psi.  Columns follow tl_basis.
  TLMatrix invariant_action(const ParbMorphism& f, int w) const;
  // The action of f conjugated by the leg rotations that make label 1 the root,
  // on the source and target sides.
  TLMatrix rotated_action(const ParbMorphism& f, int w) const;

 private:
  bool flip_;
  LaurentA delta_;
  LaurentA twist_;
  bool balancing_ = false;
};

}  // namespace parb
