#pragma once
// Canonical forms and exhaustive enumeration of non-isomorphic posets.

#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// Encoding of the strict-order matrix minimized over all relabelings that
// respect an iterated neighborhood refinement; equal strings iff isomorphic.
std::string canonical_form(const Poset& p);

// All non-isomorphic posets with exactly n elements (n <= 10), named
// p0..p{n-1}, sorted by canonical form. max_width > 0 filters to posets
// whose maximum antichain is at most max_width.
std::vector<Poset> poset_census(int n, int max_width = 0);

}  // namespace hibi
