#pragma once
// Top-level regularity dispatcher: cut-edge decomposition, method selection
// per block, closed forms, bounds, and the exhaustive verification sweep.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/budget.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/lattice.hpp"
#include "hibi/planar.hpp"
#include "hibi/poset.hpp"

namespace hibi {

enum class Method {
  BooleanClosedForm,
  PlanarFormula,
  HVector,
  BoundsOnly,
  AdditiveComposition,
};

const char* method_name(Method m);

struct BlockReport {
  Method method = Method::HVector;
  std::optional<int> value;
  int lower = 0, upper = 0;
  int lattice_size = 0;
  int base_size = 0;
  std::vector<std::string> certificate;  // witness lines, human-readable
};

struct RegularityReport {
  std::optional<int> value;
  int lower = 0, upper = 0;  // equal to value when it is present
  // antichain and dimension bounds for the whole lattice; may be strict
  int theorem_lower = 0, theorem_upper = 0;
  Method method = Method::AdditiveComposition;
  std::vector<BlockReport> blocks;
  std::vector<std::string> cut_names;  // "lower -> upper" per cut edge

  std::string str() const;      // human-readable report
  std::string records() const;  // "key: value" lines, deterministic
};

// Decomposes along cut edges; per block the Boolean closed form, the planar
// square formula, or the h-vector, degrading to bounds past the budget.
// The composite value is the block sum when every block resolved exactly.
RegularityReport regularity(const DistLattice& L, const Budget& budget = {});

// (width - 1, |P| - 1) from the base poset; brackets the exact value.
std::pair<int, int> nonplanar_bounds(const Poset& p);

int boolean_regularity(int n);  // lattice of an n-antichain: n - 1
int cyclic_regularity(int r);   // staircase with r squares: r

// Base poset of the staircase lattice with `squares` diamonds joined through
// connector chains of the given lengths (squares - 1 entries, zeros allowed).
Poset cyclic_poset(int squares, const std::vector<int>& connector_lengths);

struct LinResVerdict {
  bool linear = false;
  int a = -1;  // grid parameter when linear
  std::string reason;
};

// True exactly when the base poset is one isolated point plus one chain of
// a >= 1 elements, i.e. the lattice is the 2 x (a+1) grid.
LinResVerdict has_linear_resolution(const DistLattice& L,
                                    const Budget& budget = {});

struct SweepStats {
  int size = 0;
  int posets = 0;
  int planar_blocks = 0;
  int nonplanar_blocks = 0;
  int failures = 0;
};

struct SweepResult {
  std::vector<SweepStats> per_size;
  std::vector<std::string> failure_notes;  // offending poset text + reason

  bool ok() const { return failure_notes.empty(); }
  std::string table() const;    // human-readable summary
  std::string records() const;  // machine lines, deterministic
};

// Runs every regularity path over all non-isomorphic posets with up to
// max_n elements (max_n <= 8) and cross-checks them against each other.
SweepResult sweep_corpus(int max_n, const Budget& budget = {});

}  // namespace hibi
