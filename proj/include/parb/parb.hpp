#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "parb/ribbon_braid.hpp"
#include "parb/trees.hpp"

namespace parb {

// Morphism of PaRB(n).  The strand starting at bottom position p ends at top
// position pi(p), and carries the same label at both ends.
struct ParbMorphism {
  ParenWord source;
  ParenWord target;
  RibbonBraid rb;

  ParbMorphism() = default;
  ParbMorphism(ParenWord s, ParenWord t, RibbonBraid r);

  int arity() const { return source.size(); }
  static ParbMorphism identity(const ParenWord& object);
};

struct CorbMorphism {
  Permutation source;
  Permutation target;
  RibbonBraid rb;

  CorbMorphism() = default;
  CorbMorphism(Permutation s, Permutation t, RibbonBraid r);

  int arity() const { return source.size(); }
  static CorbMorphism identity(const Permutation& object);
};

bool parb_equal(const ParbMorphism& a, const ParbMorphism& b);
bool corb_equal(const CorbMorphism& a, const CorbMorphism& b);

// Target object forced by a source and a ribbon braid, on a given shape.
ParenWord transported_target(const ParenWord& source, const BraidWord& braid, const ParenWord& target_shape);

// f then g.
ParbMorphism cat_compose(const ParbMorphism& f, const ParbMorphism& g);
ParbMorphism parb_inverse(const ParbMorphism& f);
// Inserts g at the input labelled i.
ParbMorphism operadic_compose(const ParbMorphism& f, const ParbMorphism& g, int i);
// Right action: every label k becomes sigma(k).
ParbMorphism sigma_act(const Permutation& sigma, const ParbMorphism& f);
// Braid word replaced by its canonical form.
ParbMorphism canonical(const ParbMorphism& f);

CorbMorphism cat_compose(const CorbMorphism& f, const CorbMorphism& g);
CorbMorphism operadic_compose(const CorbMorphism& f, const CorbMorphism& g, int i);
CorbMorphism sigma_act(const Permutation& sigma, const CorbMorphism& f);
// Block substitution of leaf orders: entry i of s replaced by the shifted t.
Permutation substitute_order(const Permutation& s, const Permutation& t, int i);

CorbMorphism forget_brackets(const ParbMorphism& f);
ParbMorphism lift(const CorbMorphism& f, const ParenWord& source_shape, const ParenWord& target_shape);

std::string to_string(const ParbMorphism& f);

// ---- free expressions ----

enum class Generator { mu, id, beta, beta_inv, tau, tau_inv, alpha, alpha_inv };

std::string_view generator_name(Generator g);
Generator generator_inverse(Generator g);
ParbMorphism generator_value(Generator g);

class OperadExpr {
 public:
  enum class Kind { generator, compose, operadic, relabel };

  static OperadExpr gen(Generator g);
  // a then b
  static OperadExpr compose(OperadExpr a, OperadExpr b);
  static OperadExpr operadic(OperadExpr f, OperadExpr g, int i);
  static OperadExpr relabel(Permutation sigma, OperadExpr f);

  Kind kind() const { return node_->kind; }
  Generator generator() const { return node_->gen; }
  int index() const { return node_->index; }
  const Permutation& perm() const { return node_->perm; }
  const OperadExpr& first() const { return *node_->a; }
  const OperadExpr& second() const { return *node_->b; }

  // Number of generator leaves.
  std::size_t size() const { return node_->size; }

 private:
  struct Node {
    Kind kind = Kind::generator;
    Generator gen = Generator::id;
    int index = 0;
    Permutation perm;
    std::shared_ptr<const OperadExpr> a, b;
    std::size_t size = 1;
  };
  explicit OperadExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Throws CompositionError naming the offending node path.
ParbMorphism eval_expr(const OperadExpr& e);
// Evaluation with the generators sent to the given morphisms.
ParbMorphism eval_expr(const OperadExpr& e, const std::function<ParbMorphism(Generator)>& generators);
OperadExpr expr_inverse(const OperadExpr& e);
// Postfix text: generators push, "." composes, "o<i>" inserts, "perm[..]*" relabels.
std::string to_string(const OperadExpr& e);
OperadExpr parse_expr(std::string_view text);

// Identity on a parenthesised permutation.
OperadExpr identity_expr(const ParenWord& object);
// The associator applied at the top of the tree with branches x, y, z (labels 1..n
// in leaf order).
OperadExpr associator_expr(const ParenWord& x, const ParenWord& y, const ParenWord& z, int sign);

// The defining relations (T), (H1), (H2), (P) as pairs of expressions.
struct Relation {
  std::string name;
  std::string lhs;
  std::string rhs;
};
const std::vector<Relation>& defining_relations();

enum class Waypoint { left_comb, right_comb };
// Re-bracketing between two objects with the same leaf order.
OperadExpr rebracket_expr(const ParenWord& from, const ParenWord& to, Waypoint w = Waypoint::left_comb);
// Building blocks of express: the waypoint with a given leaf order, a twist on the
// standard waypoint, and a crossing of positions k, k+1 from the standard waypoint
// to the waypoint with leaf order (k k+1).
ParenWord waypoint_object(Waypoint w, const Permutation& order);
OperadExpr twist_step_expr(int n, int position, int sign, Waypoint w = Waypoint::left_comb);
OperadExpr crossing_step_expr(int n, int k, int sign, Waypoint w = Waypoint::left_comb);
// An expression evaluating to f.
OperadExpr express(const ParbMorphism& f, Waypoint w = Waypoint::left_comb);

}  // namespace parb
