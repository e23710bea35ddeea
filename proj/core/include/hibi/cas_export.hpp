#pragma once
// Join-meet binomial generators, the squarefree initial ideal, and exports:
// computer-algebra scripts and Hasse diagram graph files.

#include <string>
#include <utility>
#include <vector>

#include "hibi/lattice.hpp"
#include "hibi/planar.hpp"

namespace hibi {

// ab - (a v b)(a ^ b) for an incomparable pair; both monomials are distinct
// squarefree quadrics.
struct BinomialGenerator {
  int a, b;  // incomparable, a < b by element index
  int join, meet;
};

// One generator per unordered incomparable pair, pairs in ascending order.
std::vector<BinomialGenerator> joinmeet_generators(const DistLattice& L);

// Monomials of the reverse-lex initial ideal: exactly the incomparable
// pairs, in the same order as joinmeet_generators.
std::vector<std::pair<int, int>> initial_ideal(const DistLattice& L);

// "x_0_2" from the sorted base indices of the ideal; "x_e" for the bottom.
std::string variable_name(const DistLattice& L, int e);

enum class Dialect { Generic, Macaulay2 };

// "generic" or "macaulay2"; throws std::invalid_argument otherwise.
Dialect parse_dialect(const std::string& name);

// Self-contained script: variable order (the canonical element order, a
// linear extension of the lattice), the ideal, a regularity query.
// Byte-identical output per (lattice, dialect).
std::string export_cas_script(const DistLattice& L, Dialect dialect);

// Graphviz text, ranks as layers; an embedding pins node positions and a
// labeling annotates the edges.
std::string export_hasse_graph(const DistLattice& L,
                               const PlanarEmbedding* emb = nullptr,
                               const EdgeLabeling* lam = nullptr);

// FNV-1a 64-bit digest as 16 hex characters; stable export file stems.
std::string content_hash(const std::string& data);

}  // namespace hibi
