#pragma once

#include "parb/parb.hpp"

namespace parb {

// Boundary rotation l -> l-1 (mod n+1) followed by re-rooting at the new 0.
ParenWord z_on_object(const ParenWord& p, int power = 1);

// Images of the generators under the power-th iterate of the rotation.
OperadExpr z_on_generator(Generator g, int power = 1);
int expr_arity(const OperadExpr& e);
OperadExpr z_on_expr(const OperadExpr& e, int power = 1);

// Computed as eval(z_on_expr(express(f, w))).
ParbMorphism z_on_morphism(const ParbMorphism& f, int power = 1, Waypoint w = Waypoint::left_comb);

// Same result as z_on_morphism, assembled from cached images of the elementary
// steps of express.  Arity at most 6.
ParbMorphism z_fast(const ParbMorphism& f, int power = 1);

// The displayed rotation formulas in arity n >= 3 carry an extra relabelling by
// the cycle 23..n1, which turns the rotation into the boundary transposition (0 1).
Permutation display_relabelling(int n);
ParbMorphism z_displayed(const ParbMorphism& f);

}  // namespace parb
