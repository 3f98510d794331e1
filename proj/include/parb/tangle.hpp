#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parb/gt.hpp"
#include "parb/parb.hpp"
#include "parb/tl.hpp"

namespace parb {

// ---- envelope ----

// Morphism m -> n of the envelope prop of PaRB: one operation per output and
// the input wires feeding it.  Stored canonically: the inputs of each part,
// taken in increasing wire order, carry its labels 1, 2, ...
class EnvMorphism {
 public:
  struct Wire {
    int part;
    int label;
  };

  // wiring[j] says which part and label input wire j feeds.
  static EnvMorphism make(std::vector<ParbMorphism> parts, const std::vector<Wire>& wiring);
  static EnvMorphism identity(int n);
  // f as a morphism arity(f) -> 1.
  static EnvMorphism embed(const ParbMorphism& f);
  // Wire j feeds output p(j) through an identity.
  static EnvMorphism permutation(const Permutation& p);

  int source() const { return static_cast<int>(part_of_.size()); }
  int target() const { return static_cast<int>(parts_.size()); }
  const std::vector<ParbMorphism>& parts() const { return parts_; }
  const std::vector<int>& part_of() const { return part_of_; }
  std::vector<int> inputs_of(int part) const;

 private:
  std::vector<ParbMorphism> parts_;
  std::vector<int> part_of_;
};

// a then b; each part of b is fully composed with the parts of a feeding it.
EnvMorphism env_compose(const EnvMorphism& a, const EnvMorphism& b);
EnvMorphism env_tensor(const EnvMorphism& a, const EnvMorphism& b);
bool env_equal(const EnvMorphism& a, const EnvMorphism& b);
std::string to_string(const EnvMorphism& e);

// ---- metric prop ----

class MetricPropMorphism;

// One layer acts on a block of strands starting at `offset`; strands outside
// the block pass straight through.
struct MetricLayer {
  enum class Kind { ribbon, create, annihilate, inverse };

  Kind kind = Kind::ribbon;
  int offset = 0;
  // ribbon: a PaRB morphism with every label a bundle of `width` strands
  ParbMorphism op;
  int width = 1;
  // inverse: formal inverse of an endomorphism
  std::shared_ptr<const MetricPropMorphism> inner;

  int consumed() const;
  int produced() const;
};

class MetricPropMorphism {
 public:
  explicit MetricPropMorphism(int strands = 0) : source_(strands), target_(strands) {}

  static MetricPropMorphism ribbon(int strands, int offset, ParbMorphism f, int width = 1);
  // b: two new strands at positions k, k+1.
  static MetricPropMorphism create(int strands, int k);
  // d: strands k, k+1 joined; `strands` counts the input.
  static MetricPropMorphism annihilate(int strands, int k);
  static MetricPropMorphism inverse(int strands, int offset, const MetricPropMorphism& inner);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<MetricLayer>& layers() const { return layers_; }

  MetricPropMorphism& push(MetricLayer layer);

 private:
  int source_;
  int target_;
  std::vector<MetricLayer> layers_;
};

// a then b.
MetricPropMorphism metric_compose(const MetricPropMorphism& a, const MetricPropMorphism& b);
MetricPropMorphism metric_tensor(const MetricPropMorphism& a, const MetricPropMorphism& b);
bool metric_equal(const MetricPropMorphism& a, const MetricPropMorphism& b);
std::string to_string(const MetricPropMorphism& m);

// Identity layers dropped, ribbon layers merged, caps slid below disjoint
// layers and zig-zags cancelled, through trivial-braid layers, to a fixed point.
MetricPropMorphism zigzag_normalize(const MetricPropMorphism& m);

TLMorphism eval_metric(const TLModel& model, const MetricPropMorphism& m);

// An N -> 0 morphism made of caps with the given planar matching.
MetricPropMorphism invariant_from_matching(int strands, const Matching& match);
// Moves the last bundle of width w to the front, `steps` times, by bending
// it around with a nested cup and cap.
MetricPropMorphism rotate_invariant(const MetricPropMorphism& psi, int steps, int w);
// (g x id_V) then psi, with V of width w.
MetricPropMorphism act_on_invariant(const ParbMorphism& g, const MetricPropMorphism& psi, int w);
// f acting on the invariant psi through the duality: rotate psi so label 1 of
// the target sits at the root, precompose with f, rotate back.  Under any
// evaluation this agrees with act_on_invariant(z(f), psi, w).
MetricPropMorphism transpose(const ParbMorphism& f, const MetricPropMorphism& psi, int w);

// ---- tangles ----

struct TangleSlice {
  enum class Kind { cap, cup, ribbon };

  Kind kind = Kind::ribbon;
  // cap / cup: strands to the left and right of the pair
  int left = 0;
  int right = 0;
  RibbonBraid rb;

  int consumed() const;
  int produced() const;
  friend bool operator==(const TangleSlice& a, const TangleSlice& b);
};

struct TangleDiagram {
  int source = 0;
  std::vector<TangleSlice> slices;
  std::optional<std::pair<ParenWord, ParenWord>> objects;

  int target() const;
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

// Throws MalformedInput on arity mismatch.
void validate(const TangleDiagram& t);
TangleDiagram tangle_stack(const TangleDiagram& a, const TangleDiagram& b);
TangleDiagram tangle_juxtapose(const TangleDiagram& a, const TangleDiagram& b);

// "tangle m=.. n=..", an optional "objects: <paren> -> <paren>" line, then one
// slice per line: "cap k l", "cup k l" or an rbraid.
std::string to_string(const TangleDiagram& t);
TangleDiagram parse_tangle(std::string_view text);

TLMorphism eval_tangle(const TLModel& model, const TangleDiagram& t);

// Framed cabling: every strand becomes w parallel strands, a twist becomes a
// full twist of the bundle with one twist on each strand.
RibbonBraid rb_cable(const RibbonBraid& rb, int w);

// Slice sequence of a metric morphism.  Formal inverses have no diagram and
// raise MalformedInput.
TangleDiagram turaev_functor(const MetricPropMorphism& m);

// ---- GT on the duality ----

enum class DualityRule {
  nu,   // d -> (id x nu) then d
  rho,  // d -> (rho x id) then d
};

// nu^-1 = (b x id) F(alpha) (id x d) and rho^-1 = (id x b) F(alpha)^-1 (d x id), on one strand.
MetricPropMorphism nu_inverse(const GtElement& e);
MetricPropMorphism rho_inverse(const GtElement& e);

MetricPropMorphism gt_act_on_tangles(const GtElement& e, const MetricPropMorphism& m,
                                     DualityRule rule = DualityRule::nu);

}  // namespace parb
