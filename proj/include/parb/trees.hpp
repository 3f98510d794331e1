#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "parb/braid.hpp"

namespace parb {

// Rooted planar binary tree with leaves labelled 1..n, stored in prefix order:
// 0 marks an internal vertex, a positive entry is a leaf label.
class ParenWord {
 public:
  ParenWord() : code_{1} {}
  static ParenWord leaf() { return ParenWord(); }
  static ParenWord from_code(std::vector<int> code);
  static ParenWord join(const ParenWord& left, const ParenWord& right);  // labels taken as given
  // Left comb ((..(p1 p2) p3) ..) pn with the given leaf order.
  static ParenWord left_comb(const Permutation& order);
  static ParenWord right_comb(const Permutation& order);

  const std::vector<int>& code() const { return code_; }
  int size() const { return (static_cast<int>(code_.size()) + 1) / 2; }
  bool is_leaf() const { return code_.size() == 1; }
  // Children of the top vertex; requires !is_leaf().
  ParenWord left() const;
  ParenWord right() const;

  std::vector<int> leaves() const;
  // "((1 2) 3)"
  std::string str() const;
  // "(12)3"; requires every label < 10.
  std::string compact() const;

  friend bool operator==(const ParenWord&, const ParenWord&) = default;
  friend auto operator<=>(const ParenWord&, const ParenWord&) = default;
  std::size_t hash() const;

 private:
  explicit ParenWord(std::vector<int> code) : code_(std::move(code)) {}
  std::vector<int> code_;
};

ParenWord parse_paren(std::string_view text);

// Replaces leaf i of s by t; labels of t move to i..i+m-1, later labels of s shift by m-1.
ParenWord graft(const ParenWord& s, const ParenWord& t, int i);
// Leaf labels read left to right.
Permutation forget_parens(const ParenWord& p);
// Right action: label k becomes sigma(k).
ParenWord relabel(const ParenWord& p, const Permutation& sigma);
// Same shape, leaves labelled 1..n left to right.
ParenWord shape_of(const ParenWord& p);

std::vector<ParenWord> all_shapes(int leaves);
std::vector<ParenWord> all_paren_words(int leaves);
std::size_t catalan(int k);

// Bijection of {0..n}.  Products are function composition: (s * t)(k) = s(t(k)).
class ExtendedPermutation {
 public:
  ExtendedPermutation() : images_{0} {}
  explicit ExtendedPermutation(std::vector<int> images);
  static ExtendedPermutation identity(int n);
  // l -> l-1 mod n+1
  static ExtendedPermutation rotation(int n);
  // Extends a permutation of {1..n} by fixing 0.
  static ExtendedPermutation fixing_zero(const Permutation& p);

  int n() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }
  ExtendedPermutation inverse() const;
  ExtendedPermutation pow(int k) const;
  friend ExtendedPermutation operator*(const ExtendedPermutation& s, const ExtendedPermutation& t);
  friend bool operator==(const ExtendedPermutation&, const ExtendedPermutation&) = default;

 private:
  std::vector<int> images_;
};

// Planar tree, vertices of any arity >= 2 (as rooted vertices), boundary edges
// labelled bijectively by {0..n}.  Stored rooted at the boundary edge labelled 0.
class UnrootedTree {
 public:
  struct Node {
    int label = 0;                // boundary label for a leaf, vertex label otherwise
    std::vector<Node> children;  // empty for a leaf; clockwise after the edge to the root
    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  UnrootedTree() = default;
  // top: the node adjacent to the boundary edge labelled 0.
  explicit UnrootedTree(Node top);

  static UnrootedTree corolla(int n);  // one vertex, boundary 0..n in planar order
  static UnrootedTree edge();          // boundary {0, 1}, no vertices

  const Node& top() const { return top_; }
  int boundary_size() const { return n_ + 1; }
  int vertex_count() const;
  int internal_edge_count() const;
  // Half-edge count of the vertex with the given label.
  int arity(int vertex) const;

  // Serialized rooted at 0, e.g. "((1 2) 3)" or "(1 2 3)".
  std::string str() const;

  friend bool operator==(const UnrootedTree&, const UnrootedTree&) = default;

 private:
  Node top_;
  int n_ = 1;
};

UnrootedTree parse_unrooted(std::string_view text);

// Root edge gets label 0, vertices labelled 1.. in prefix order.
UnrootedTree unroot(const ParenWord& p);
// Reads the tree as rooted at the edge labelled 0; requires trivalent vertices.
ParenWord reroot(const UnrootedTree& t);

// Relabels boundary edge l to sigma(l), then re-roots at the new 0.
UnrootedTree sigma_plus_act(const ExtendedPermutation& sigma, const UnrootedTree& t);

// Vertex substitution: the half-edges at `vertex` (0 towards the root edge, then
// clockwise) are glued to the boundary edges of s with the same labels.  Vertex
// labels of s follow at vertex..vertex+k-1; later vertex labels shift.
UnrootedTree tree_substitute(const UnrootedTree& t, int vertex, const UnrootedTree& s);
// Glues the root edge of s to boundary edge i of t, with the operadic label shift.
UnrootedTree unrooted_graft(const UnrootedTree& t, int i, const UnrootedTree& s);

}  // namespace parb

template <>
struct std::hash<parb::ParenWord> {
  std::size_t operator()(const parb::ParenWord& p) const { return p.hash(); }
};

namespace parb {

// Permutation rho of the labels of graft(s, t, i) with
// relabel(graft(s, t, i), rho) == graft(relabel(s, sigma), relabel(t, tau), sigma(i)).
Permutation block_relabelling(const Permutation& sigma, const Permutation& tau, int i);

}  // namespace parb
