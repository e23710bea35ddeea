#pragma once
// h-vector of the ideal lattice two independent ways: descent statistics of
// linear extensions, and the f-to-h transform of the order complex.

#include <map>
#include <string>
#include <vector>

#include "hibi/bigint.hpp"
#include "hibi/budget.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// beta[S] = number of linear extensions with descent set S. The total over
// all S equals the number of maximal chains of the ideal lattice.
struct FlagBeta {
  std::map<DescentSet, BigInt> beta;

  BigInt total() const;
  std::string records() const;  // "beta {1,3}: 5" lines, sets in stable order
};

// Coefficients of the Hilbert series numerator, trailing zeros trimmed.
// h[0] = 1 for every nonempty lattice.
struct HVector {
  std::vector<BigInt> h;

  int deg() const { return static_cast<int>(h.size()) - 1; }
  std::string str() const;  // "1 4 1"

  friend bool operator==(const HVector&, const HVector&) = default;
};

// f[k] = number of chains of k elements in the lattice; f[0] = 1 counts the
// empty chain. The last index is the common cardinality of maximal chains.
struct FVector {
  std::vector<BigInt> f;
};

// Tallies descent sets over all linear extensions of p under the canonical
// natural labeling (or an explicit one). Throws CapError past
// budget.max_extensions.
FlagBeta flag_beta(const Poset& p, const Budget& budget = {});
FlagBeta flag_beta(const Poset& p, const NaturalLabeling& lab,
                   const Budget& budget = {});

// h_k = sum of beta[S] over |S| = k.
HVector h_from_beta(const FlagBeta& fb);

// Chain counts by cardinality via DP over the comparability order.
FVector f_vector(const DistLattice& L);

// Inclusion-exclusion transform; the independent oracle for h_from_beta.
// Throws std::invalid_argument if a negative coefficient appears (the input
// was not the f-vector of a pure shellable complex).
HVector h_from_f(const FVector& fv);

// Index of the last nonzero entry; the regularity of the ideal lattice.
int regularity_from_h(const HVector& h);

BigInt count_maximal_chains(const DistLattice& L);

// Tallies descent sets over all maximal chains of L under an edge labeling;
// equals flag_beta of the base poset when lam is the planar labeling.
FlagBeta beta_via_chains(const DistLattice& L, const EdgeLabeling& lam,
                         const Budget& budget = {});

}  // namespace hibi
