#pragma once
// Planarity detection, grid embedding, the EL edge labeling built from the
// most-upper chain, and the two planar regularity computations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/bigint.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// Injective order-compatible map into the grid: x <= y iff coord(x) <=
// coord(y) componentwise, covers increment one coordinate, bottom at (0,0).
struct PlanarEmbedding {
  std::vector<std::pair<int, int>> coord;  // per lattice element, (i, j)
  std::vector<int> chain1, chain2;         // base indices; i counts chain1 hits
};

struct EmbedResult {
  std::optional<PlanarEmbedding> embedding;
  std::vector<int> witness;  // a 3-antichain in the base poset when not planar

  bool planar() const { return embedding.has_value(); }
};

// Partitions the base poset into two chains when its width is at most 2 and
// maps each ideal to its intersection sizes; otherwise reports a witness
// antichain. The returned embedding is checked against all its invariants.
EmbedResult try_embed(const DistLattice& L);

// Saturated chain from bottom to top; vertices are element indices.
struct MaximalChain {
  std::vector<int> vertices;

  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
};

// The unique maximal chain staying weakly above every element column-wise:
// from each vertex step vertically (j+1) when possible, else horizontally.
MaximalChain upper_chain(const DistLattice& L, const PlanarEmbedding& emb);

// Labels every edge by the label of the parallel upper-chain edge: vertical
// edges share labels per row gap, horizontal edges per column gap. Along the
// upper chain the labels read 1..d+1.
EdgeLabeling build_labeling(const DistLattice& L, const PlanarEmbedding& emb);

// Positions t (1-based) where consecutive edge labels strictly decrease.
DescentSet chain_descents(const MaximalChain& c, const DistLattice& L,
                          const EdgeLabeling& lam);

enum class CornerKind { Straight, UpperCorner, LowerCorner };

// Shape of the chain at interior vertex t: vertical-then-horizontal is an
// upper corner, horizontal-then-vertical a lower corner.
CornerKind classify_corner(const MaximalChain& c, int t,
                           const PlanarEmbedding& emb);

// Replaces lower corners carrying a descent by the opposite corner of their
// square until no descent remains; the result is the upper chain.
MaximalChain straighten(const MaximalChain& c, const DistLattice& L,
                        const EdgeLabeling& lam, const PlanarEmbedding& emb);

struct ElVerdict {
  bool ok = true;
  int x = -1, y = -1;  // counterexample interval on failure
  std::string detail;
};

// EL property over every interval [x, y]: exactly one weakly increasing
// saturated chain, and it is strictly lex-least among the interval's chains.
ElVerdict verify_el(const DistLattice& L, const EdgeLabeling& lam);

struct DescentMax {
  int value = 0;
  MaximalChain witness;
};

// Maximum descent-set cardinality over all maximal chains, by DP over Hasse
// edges; the witness is the lex-least optimal chain.
DescentMax max_descent_cardinality(const DistLattice& L,
                                   const EdgeLabeling& lam);

// Cover diamond: bottom at (i,j), east (i+1,j), north (i,j+1), top (i+1,j+1).
struct Square {
  int bottom, east, north, top;
};

// Staircase of squares, top corner of one to bottom corner of the next,
// joined by saturated connector chains (empty when the corners coincide).
struct CyclicSublattice {
  std::vector<Square> squares;
  // connectors[k] runs from top of square k to bottom of square k+1,
  // endpoints included; a length-1 entry marks coinciding corners.
  std::vector<std::vector<int>> connectors;
};

struct SquaresMax {
  int value = 0;
  CyclicSublattice witness;
};

// Longest chain of squares under the precedence top(S) <= bottom(S'), with
// an explicit saturated connector required between consecutive squares.
SquaresMax max_cyclic_squares(const DistLattice& L,
                              const PlanarEmbedding& emb);

// Number of maximal chains with weakly increasing labels; 1 for every EL
// labeling (the upper chain alone).
BigInt count_descent_free_chains(const DistLattice& L,
                                 const EdgeLabeling& lam);

}  // namespace hibi
