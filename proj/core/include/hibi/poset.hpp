#pragma once
// Finite posets: parsing, linear extensions, descent sets, antichains.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hibi/budget.hpp"
#include "hibi/errors.hpp"

namespace hibi {

// A set of positions from [1..63]; descent sets of extensions and chains.
class DescentSet {
 public:
  DescentSet() = default;
  explicit DescentSet(std::uint64_t mask) : mask_(mask) {}

  void add(int i) { mask_ |= std::uint64_t{1} << i; }
  bool contains(int i) const { return (mask_ >> i) & 1; }
  int size() const;
  std::uint64_t mask() const { return mask_; }
  std::vector<int> members() const;
  std::string str() const;  // "{1,3}"; "{}" when empty

  friend bool operator==(DescentSet a, DescentSet b) { return a.mask_ == b.mask_; }
  // order by (cardinality, members smallest-first); used for stable reports
  friend bool operator<(DescentSet a, DescentSet b);

 private:
  std::uint64_t mask_ = 0;
};

class Poset {
 public:
  Poset() = default;  // empty ground set; arises from degenerate intervals

  // relations are strict pairs a < b of indices into names; the transitive
  // closure and the cover relation are computed here.
  // Throws CycleError if the relations are not antisymmetric.
  Poset(std::vector<std::string> names,
        const std::vector<std::pair<int, int>>& relations);

  int size() const { return n_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  bool less(int a, int b) const { return less_[static_cast<size_t>(a) * n_ + b] != 0; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

  // cover pairs (a, b), a covered by b, sorted by (a, b)
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> minimal_elements() const;
  bool is_chain() const;
  bool is_antichain() const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> less_;  // n x n strict-order matrix
  std::vector<std::pair<int, int>> covers_;
};

// Grammar: statements separated by newlines or ';'. A bare NAME declares an
// isolated element; "a<b" declares a relation (closure applied); "#" starts a
// comment. Names match [A-Za-z0-9_]+. Throws ParseError / CycleError.
Poset parse_poset(const std::string& text);

// Enumerates linear extensions in lexicographic order of element indices
// (backtracking over currently-minimal elements in index order). visit may
// return false to stop. Returns the number of extensions visited.
std::uint64_t for_each_linear_extension(
    const Poset& p, const std::function<bool(std::span<const int>)>& visit);

// Materialized enumeration; throws CapError past budget.max_extensions.
std::vector<std::vector<int>> linear_extensions(const Poset& p,
                                                const Budget& budget = {});

// First extension in enumeration order: repeatedly remove the
// smallest-index minimal element.
std::vector<int> canonical_extension(const Poset& p);

// Order-preserving bijection onto 1..n.
struct NaturalLabeling {
  std::vector<int> label;  // element index -> 1..n
};

NaturalLabeling canonical_labeling(const Poset& p);

// Up to k distinct natural labelings, the canonical one first. k >= 1.
std::vector<NaturalLabeling> natural_labelings_sample(const Poset& p, int k);

// Positions i in [1..n-1] with label(e_i) > label(e_{i+1}) (1-based).
DescentSet descent_set(std::span<const int> extension, const NaturalLabeling& lab);

// Disjoint union a ⊔ b. Colliding names on the b side get '_' appended
// until unique, so the result is always well formed.
Poset disjoint_union(const Poset& a, const Poset& b);

// Ordinal sum a ⊕ b: every element of a below every element of b.
Poset ordinal_sum(const Poset& a, const Poset& b);

// Chain c0 < c1 < ... of the given length; antichain(n) is n isolated
// elements a0..a{n-1}. prefix prepends to each generated name.
Poset chain_poset(int n, const std::string& prefix = "c");
Poset antichain_poset(int n, const std::string& prefix = "a");

// Text in the parse_poset grammar; parse_poset(to_input_text(p)) rebuilds p
// with the same element order.
std::string to_input_text(const Poset& p);

struct AntichainResult {
  int size = 0;
  std::vector<int> witness;  // one maximum antichain, ascending indices
};

// Exact maximum antichain via branch and bound; deterministic witness.
AntichainResult max_antichain(const Poset& p);
int max_antichain_size(const Poset& p);

}  // namespace hibi
