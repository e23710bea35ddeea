#pragma once
// Distributive lattices, represented as the lattice of order ideals
// (down-sets) of a finite base poset.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hibi/budget.hpp"
#include "hibi/errors.hpp"
#include "hibi/poset.hpp"

namespace hibi {

using IdealMask = std::uint64_t;  // bit v set = base element v in the ideal

// subset-lexicographic order: compare sorted index lists; the set owning the
// lowest differing bit is smaller
bool subset_lex_less(IdealMask a, IdealMask b);

// join = union, meet = intersection, rank = ideal cardinality. Elements are
// sorted by (rank, subset-lex), so index 0 is the empty ideal and the last
// index is the full one.
class DistLattice {
 public:
  // All down-sets of base. Throws CapError past budget.max_lattice_elements
  // or when base has more than 64 elements.
  static DistLattice birkhoff(const Poset& base, const Budget& budget = {});

  const Poset& base() const { return base_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return base_.size(); }  // rank of the top element
  IdealMask ideal(int e) const { return elements_[e]; }
  int rank_of(int e) const;
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int index_of(IdealMask m) const;  // -1 when absent

  bool leq(int a, int b) const { return (elements_[a] & ~elements_[b]) == 0; }
  int join(int a, int b) const;
  int meet(int a, int b) const;

  // cover pairs (lower, upper), sorted; compatible with rank order
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int e) const { return up_[e]; }
  const std::vector<int>& lower_covers(int e) const { return down_[e]; }

  std::string element_name(int e) const;  // "{p1,p2}" with base names
  std::string serialize() const;          // canonical text form

 private:
  Poset base_;
  std::vector<IdealMask> elements_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::pair<int, int>> covers_;
  std::unordered_map<IdealMask, int> index_;
};

// Integer labels on the Hasse edges of a lattice. out[e][k] labels the edge
// from e to upper_covers(e)[k].
struct EdgeLabeling {
  std::vector<std::vector<int>> out;

  int label(const DistLattice& L, int lower, int upper) const;
};

// Induced subposet on the elements covering exactly one element (the
// principal ideals); isomorphic to base, base names preserved.
Poset join_irreducibles(const DistLattice& L);

// Cover pair whose two rank layers are singletons in L.
struct CutEdge {
  int lower, upper;
};
std::vector<CutEdge> cut_edges(const DistLattice& L);

// [x, y] as a lattice in its own right, re-based on its own
// join-irreducibles (the induced subposet of base on ideal(y) - ideal(x)).
// Requires x <= y.
DistLattice interval(const DistLattice& L, int x, int y);

// Slicing L at every cut edge. Segments appear bottom to top; a segment
// with at most two elements (point or single edge) is degenerate and
// contributes regularity 0. Non-degenerate segments have no cut edges.
struct Decomposition {
  struct Segment {
    int lo, hi;  // element indices in the parent lattice
    bool degenerate;
    DistLattice block;
  };
  std::vector<Segment> segments;
  std::vector<CutEdge> cuts;
};
Decomposition decompose(const DistLattice& L);

// The non-degenerate blocks of decompose(); each is simple.
std::vector<DistLattice> simple_blocks(const DistLattice& L);

}  // namespace hibi
