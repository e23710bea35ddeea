#include "hibi/cas_export.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hibi {

std::vector<BinomialGenerator> joinmeet_generators(const DistLattice& L) {
  std::vector<BinomialGenerator> gens;
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b) {
      if (L.leq(a, b) || L.leq(b, a)) continue;
      gens.push_back({a, b, L.join(a, b), L.meet(a, b)});
    }
  return gens;
}

std::vector<std::pair<int, int>> initial_ideal(const DistLattice& L) {
  std::vector<std::pair<int, int>> mons;
  for (const BinomialGenerator& g : joinmeet_generators(L))
    mons.emplace_back(g.a, g.b);
  return mons;
}

std::string variable_name(const DistLattice& L, int e) {
  IdealMask m = L.ideal(e);
  if (m == 0) return "x_e";
  std::string name = "x";
  while (m) {
    name += "_" + std::to_string(std::countr_zero(m));
    m &= m - 1;
  }
  return name;
}

Dialect parse_dialect(const std::string& name) {
  if (name == "generic") return Dialect::Generic;
  if (name == "macaulay2") return Dialect::Macaulay2;
  throw std::invalid_argument("unsupported dialect: " + name);
}

namespace {

std::string generic_script(const DistLattice& L) {
  std::vector<BinomialGenerator> gens = joinmeet_generators(L);
  std::ostringstream out;
  out << "# join-meet ideal of a distributive lattice on " << L.size()
      << " elements\n";
  out << "# variable order (a linear extension of the lattice):\n";
  out << "ring K[";
  for (int e = 0; e < L.size(); ++e)
    out << (e ? ", " : "") << variable_name(L, e);
  out << "]\n";
  if (gens.empty()) {
    out << "# the lattice is a chain: the ideal is zero\n";
    out << "ideal I = (0)\n";
  } else {
    out << "ideal I = (\n";
    for (size_t i = 0; i < gens.size(); ++i) {
      const BinomialGenerator& g = gens[i];
      out << "  " << variable_name(L, g.a) << "*" << variable_name(L, g.b)
          << " - " << variable_name(L, g.meet) << "*"
          << variable_name(L, g.join) << (i + 1 < gens.size() ? "," : "")
          << "\n";
    }
    out << ")\n";
    out << "# reverse-lex initial ideal: " << gens.size()
        << " squarefree quadratic monomials, one per incomparable pair\n";
  }
  out << "query regularity(K[...]/I)\n";
  return out.str();
}

std::string macaulay2_script(const DistLattice& L) {
  std::vector<BinomialGenerator> gens = joinmeet_generators(L);
  std::ostringstream out;
  out << "-- join-meet ideal of a distributive lattice on " << L.size()
      << " elements\n";
  out << "-- t_i is element i in (rank, subset-lex) order:\n";
  for (int e = 0; e < L.size(); ++e)
    out << "-- t_" << e << " = " << L.element_name(e) << "\n";
  out << "R = QQ[t_0..t_" << L.size() - 1 << "];\n";
  if (gens.empty()) {
    out << "I = ideal(0_R); -- the lattice is a chain: the ideal is zero\n";
  } else {
    out << "I = ideal(\n";
    for (size_t i = 0; i < gens.size(); ++i) {
      const BinomialGenerator& g = gens[i];
      out << "  t_" << g.a << "*t_" << g.b << "-t_" << g.meet << "*t_"
          << g.join << (i + 1 < gens.size() ? "," : "") << "\n";
    }
    out << ");\n";
  }
  out << "print regularity comodule I\n";
  return out.str();
}

}  // namespace

std::string export_cas_script(const DistLattice& L, Dialect dialect) {
  switch (dialect) {
    case Dialect::Generic: return generic_script(L);
    case Dialect::Macaulay2: return macaulay2_script(L);
  }
  throw std::invalid_argument("unsupported dialect");
}

std::string export_hasse_graph(const DistLattice& L,
                               const PlanarEmbedding* emb,
                               const EdgeLabeling* lam) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int e = 0; e < L.size(); ++e) {
    out << "  n" << e << " [label=\"" << L.element_name(e) << "\"";
    if (emb)
      out << ", pos=\"" << emb->coord[e].first << ","
          << emb->coord[e].second << "!\"";
    out << "];\n";
  }
  if (!emb) {
    for (int r = 0; r <= L.rank(); ++r) {
      out << "  { rank=same;";
      for (int e = 0; e < L.size(); ++e)
        if (L.rank_of(e) == r) out << " n" << e << ";";
      out << " }\n";
    }
  }
  for (int v = 0; v < L.size(); ++v) {
    const std::vector<int>& ups = L.upper_covers(v);
    for (size_t k = 0; k < ups.size(); ++k) {
      out << "  n" << v << " -> n" << ups[k];
      if (lam) out << " [label=\"" << lam->out[v][k] << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string content_hash(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace hibi
