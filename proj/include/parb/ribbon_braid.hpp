#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parb/braid.hpp"

namespace parb {

// Element of RB_n = Br_n x| Z^n.  twists[p] is the twist on the strand that starts
// at bottom position p+1.  The pair (b, t) equals (id, t) * (b, 0).
struct RibbonBraid {
  BraidWord braid;
  std::vector<int> twists;

  RibbonBraid() = default;
  RibbonBraid(BraidWord b, std::vector<int> t);
  explicit RibbonBraid(BraidWord b);

  static RibbonBraid identity(int strands);
  static RibbonBraid crossing(int strands, int i, int sign = 1);
  static RibbonBraid twist(int strands, int i, int power = 1);

  int strands() const { return braid.strands(); }
  int twist_sum() const;
};

RibbonBraid rb_compose(const RibbonBraid& a, const RibbonBraid& b);
RibbonBraid rb_inverse(const RibbonBraid& a);
bool rb_equals(const RibbonBraid& a, const RibbonBraid& b);
RibbonBraid rb_pow(const RibbonBraid& a, int k);
RibbonBraid operator*(const RibbonBraid& a, const RibbonBraid& b);

// Same element, braid part replaced by its canonical Garside word.
RibbonBraid rb_canonical(const RibbonBraid& a);

std::string to_string(const RibbonBraid& r);
RibbonBraid parse_rbraid(std::string_view text);

}  // namespace parb
