#include "hibi/regularity.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "hibi/census.hpp"

namespace hibi {

const char* method_name(Method m) {
  switch (m) {
    case Method::BooleanClosedForm: return "boolean-closed-form";
    case Method::PlanarFormula: return "planar-formula";
    case Method::HVector: return "h-vector";
    case Method::BoundsOnly: return "bounds-only";
    case Method::AdditiveComposition: return "additive-composition";
  }
  return "?";
}

std::pair<int, int> nonplanar_bounds(const Poset& p) {
  if (p.size() == 0) return {0, 0};
  return {std::max(max_antichain_size(p) - 1, 0), std::max(p.size() - 1, 0)};
}

int boolean_regularity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  return n - 1;
}

int cyclic_regularity(int r) {
  if (r < 0) throw std::invalid_argument("square count must be nonnegative");
  return r;
}

Poset cyclic_poset(int squares, const std::vector<int>& connector_lengths) {
  if (squares < 1) throw std::invalid_argument("need at least one square");
  if (static_cast<int>(connector_lengths.size()) != squares - 1)
    throw std::invalid_argument("need squares - 1 connector lengths");
  Poset acc = antichain_poset(2, "q0_");
  for (int k = 1; k < squares; ++k) {
    int c = connector_lengths[k - 1];
    if (c < 0) throw std::invalid_argument("connector length must be >= 0");
    if (c > 0)
      acc = ordinal_sum(acc, chain_poset(c, "c" + std::to_string(k) + "_"));
    acc = ordinal_sum(acc, antichain_poset(2, "q" + std::to_string(k) + "_"));
  }
  return acc;
}

namespace {

std::string name_list(const DistLattice& L, const std::vector<int>& elems) {
  std::string out;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += L.element_name(elems[i]);
  }
  return out;
}

BlockReport analyze_block(const DistLattice& B, const Budget& budget) {
  BlockReport br;
  br.lattice_size = B.size();
  br.base_size = B.base().size();
  const Poset& base = B.base();

  if (base.is_antichain() && base.size() >= 1) {
    br.method = Method::BooleanClosedForm;
    br.value = boolean_regularity(base.size());
    br.lower = br.upper = *br.value;
    br.certificate.push_back("boolean lattice of rank " +
                             std::to_string(base.size()));
    return br;
  }

  EmbedResult er = try_embed(B);
  if (er.planar()) {
    const PlanarEmbedding& emb = *er.embedding;
    EdgeLabeling lam = build_labeling(B, emb);
    SquaresMax sm = max_cyclic_squares(B, emb);
    DescentMax dm = max_descent_cardinality(B, lam);
    br.method = Method::PlanarFormula;
    br.value = sm.value;
    br.lower = br.upper = sm.value;
    br.certificate.push_back("squares: " + std::to_string(sm.value));
    for (size_t k = 0; k < sm.witness.squares.size(); ++k) {
      const Square& s = sm.witness.squares[k];
      br.certificate.push_back(
          "square " + std::to_string(k + 1) + ": " +
          name_list(B, {s.bottom, s.east, s.north, s.top}));
    }
    br.certificate.push_back("descent chain: " +
                             name_list(B, dm.witness.vertices));
    return br;
  }

  try {
    FlagBeta fb = flag_beta(base, budget);
    HVector h = h_from_beta(fb);
    int r = regularity_from_h(h);
    br.method = Method::HVector;
    br.value = r;
    br.lower = br.upper = r;
    br.certificate.push_back("h: " + h.str());
    // first extension in enumeration order realizing deg h
    NaturalLabeling lab = canonical_labeling(base);
    std::vector<int> best;
    for_each_linear_extension(base, [&](std::span<const int> ext) {
      if (descent_set(ext, lab).size() == r) {
        best.assign(ext.begin(), ext.end());
        return false;
      }
      return true;
    });
    std::string line = "extension:";
    for (int v : best) line += " " + base.name(v);
    br.certificate.push_back(line);
  } catch (const CapError&) {
    auto [lo, hi] = nonplanar_bounds(base);
    br.method = Method::BoundsOnly;
    br.lower = lo;
    br.upper = hi;
    AntichainResult ac = max_antichain(base);
    std::string line = "witness antichain:";
    for (int v : ac.witness) line += " " + base.name(v);
    br.certificate.push_back(line);
  }
  return br;
}

}  // namespace

RegularityReport regularity(const DistLattice& L, const Budget& budget) {
  RegularityReport rep;
  auto [tl, tu] = nonplanar_bounds(L.base());
  rep.theorem_lower = tl;
  rep.theorem_upper = tu;

  Decomposition dec = decompose(L);
  for (const CutEdge& ce : dec.cuts)
    rep.cut_names.push_back(L.element_name(ce.lower) + " -> " +
                            L.element_name(ce.upper));

  bool all_exact = true;
  int sum = 0, lo = 0, hi = 0;
  for (const auto& seg : dec.segments) {
    if (seg.degenerate) continue;
    BlockReport br = analyze_block(seg.block, budget);
    if (br.value) {
      sum += *br.value;
      lo += *br.value;
      hi += *br.value;
    } else {
      all_exact = false;
      lo += br.lower;
      hi += br.upper;
    }
    rep.blocks.push_back(std::move(br));
  }

  if (rep.blocks.size() == 1 && dec.cuts.empty())
    rep.method = rep.blocks[0].method;
  else if (all_exact)
    rep.method = Method::AdditiveComposition;
  else
    rep.method = Method::BoundsOnly;
  if (all_exact) {
    rep.value = sum;
    rep.lower = rep.upper = sum;
  } else {
    rep.lower = lo;
    rep.upper = hi;
  }
  return rep;
}

std::string RegularityReport::str() const {
  std::ostringstream out;
  if (value) {
    out << "value: " << *value;
    if (theorem_lower != *value || theorem_upper != *value)
      out << ", bounds: [" << theorem_lower << ", " << theorem_upper << "]";
  } else {
    out << "bounds: [" << lower << ", " << upper << "]";
  }
  out << " (" << method_name(method) << ")\n";
  if (!cut_names.empty()) {
    out << "cut edges: " << cut_names.size() << "\n";
    for (const std::string& c : cut_names) out << "  " << c << "\n";
  }
  bool composite = blocks.size() != 1 || method == Method::AdditiveComposition;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const BlockReport& b = blocks[i];
    if (composite) {
      out << "block " << i + 1 << ": ";
      if (b.value)
        out << "value " << *b.value;
      else
        out << "bounds [" << b.lower << ", " << b.upper << "]";
      out << " (" << method_name(b.method) << "), elements "
          << b.lattice_size << "\n";
    }
    for (const std::string& line : b.certificate)
      out << (composite ? "    " : "  ") << line << "\n";
  }
  return out.str();
}

std::string RegularityReport::records() const {
  std::ostringstream out;
  out << "method: " << method_name(method) << "\n";
  if (value) out << "value: " << *value << "\n";
  out << "lower: " << lower << "\n";
  out << "upper: " << upper << "\n";
  out << "theorem-lower: " << theorem_lower << "\n";
  out << "theorem-upper: " << theorem_upper << "\n";
  out << "cuts: " << cut_names.size() << "\n";
  out << "blocks: " << blocks.size() << "\n";
  for (size_t i = 0; i < blocks.size(); ++i) {
    const BlockReport& b = blocks[i];
    out << "block " << i << " method: " << method_name(b.method) << "\n";
    if (b.value) out << "block " << i << " value: " << *b.value << "\n";
    out << "block " << i << " lower: " << b.lower << "\n";
    out << "block " << i << " upper: " << b.upper << "\n";
    out << "block " << i << " elements: " << b.lattice_size << "\n";
    for (const std::string& line : b.certificate)
      out << "block " << i << " cert: " << line << "\n";
  }
  return out.str();
}

LinResVerdict has_linear_resolution(const DistLattice& L,
                                    const Budget& budget) {
  const Poset& P = L.base();
  if (P.is_chain())
    return {false, -1,
            "join-meet ideal is zero (chain lattice); the resolution is "
            "trivial, covering the a = 0 grid reading"};

  // grid pattern: one isolated point, the rest a single chain
  for (int v = 0; v < P.size(); ++v) {
    bool isolated = true;
    for (int u = 0; u < P.size() && isolated; ++u)
      if (u != v && P.comparable(u, v)) isolated = false;
    if (!isolated) continue;
    bool rest_chain = true;
    for (int a = 0; a < P.size() && rest_chain; ++a)
      for (int b = a + 1; b < P.size() && rest_chain; ++b)
        if (a != v && b != v && !P.comparable(a, b)) rest_chain = false;
    if (rest_chain) {
      int a = P.size() - 1;
      return {true, a,
              "base is an isolated point plus a chain of " +
                  std::to_string(a) + " elements: the 2 x " +
                  std::to_string(a + 1) + " grid"};
    }
  }

  if (max_antichain_size(P) >= 3)
    return {false, -1,
            "three pairwise incomparable join-irreducibles force "
            "regularity >= 2"};

  RegularityReport rep = regularity(L, budget);
  if (!rep.value)
    return {false, -1, "regularity not resolved within budget; not a grid"};
  if (*rep.value >= 2)
    return {false, -1,
            "regularity " + std::to_string(*rep.value) + " exceeds 1"};
  if (cut_edges(L).empty())
    return {false, -1,
            "regularity 1 on a simple non-grid lattice: characterization "
            "violated, please report"};
  return {false, -1,
          "regularity 1 arises only through cut-edge composition here; the "
          "grid characterization concerns simple lattices"};
}

SweepResult sweep_corpus(int max_n, const Budget& budget) {
  if (max_n < 1 || max_n > 8)
    throw std::invalid_argument("sweep supports 1 <= max size <= 8");
  SweepResult res;
  for (int n = 1; n <= max_n; ++n) {
    SweepStats st;
    st.size = n;
    for (const Poset& p : poset_census(n)) {
      ++st.posets;
      std::vector<std::string> why;
      DistLattice L = DistLattice::birkhoff(p, budget);

      HVector h1 = h_from_beta(flag_beta(p, budget));
      HVector h2 = h_from_f(f_vector(L));
      int exact = regularity_from_h(h1);
      if (h1 != h2)
        why.push_back("h-vector paths disagree: " + h1.str() + " vs " +
                      h2.str());

      RegularityReport rep = regularity(L, budget);
      if (rep.value && *rep.value != exact)
        why.push_back("dispatcher value " + std::to_string(*rep.value) +
                      " != h-vector value " + std::to_string(exact));
      if (!(rep.theorem_lower <= exact && exact <= rep.theorem_upper))
        why.push_back("bounds [" + std::to_string(rep.theorem_lower) + ", " +
                      std::to_string(rep.theorem_upper) +
                      "] miss exact value " + std::to_string(exact));

      for (const DistLattice& B : simple_blocks(L)) {
        EmbedResult er = try_embed(B);
        if (er.planar()) {
          ++st.planar_blocks;
          EdgeLabeling lam = build_labeling(B, *er.embedding);
          int sqv = max_cyclic_squares(B, *er.embedding).value;
          int dsc = max_descent_cardinality(B, lam).value;
          int hv = regularity_from_h(h_from_beta(flag_beta(B.base(), budget)));
          if (!(sqv == dsc && dsc == hv))
            why.push_back("three-way equality violated: squares " +
                          std::to_string(sqv) + ", descents " +
                          std::to_string(dsc) + ", deg h " +
                          std::to_string(hv));
        } else {
          ++st.nonplanar_blocks;
        }
      }

      LinResVerdict lv = has_linear_resolution(L, budget);
      bool simple = cut_edges(L).empty();
      if (simple) {
        bool expect = exact == 1 && !p.is_chain();
        if (lv.linear != expect)
          why.push_back("linear-resolution misclassification: " + lv.reason);
      } else if (lv.linear) {
        why.push_back("composite lattice classified as a grid");
      }

      if (!why.empty()) {
        ++st.failures;
        std::string note = "poset:\n" + to_input_text(p);
        for (const std::string& w : why) note += "  " + w + "\n";
        res.failure_notes.push_back(std::move(note));
      }
    }
    res.per_size.push_back(st);
  }
  return res;
}

std::string SweepResult::table() const {
  std::ostringstream out;
  out << "size  posets  planar-blocks  nonplanar-blocks  failures\n";
  int tp = 0, tf = 0;
  for (const SweepStats& st : per_size) {
    out << "   " << st.size << "  " << st.posets << "  " << st.planar_blocks
        << "  " << st.nonplanar_blocks << "  " << st.failures << "\n";
    tp += st.posets;
    tf += st.failures;
  }
  out << "total: " << tp << " posets, " << tf << " failures\n";
  for (const std::string& f : failure_notes) out << f;
  return out.str();
}

std::string SweepResult::records() const {
  std::ostringstream out;
  for (const SweepStats& st : per_size)
    out << "size " << st.size << ": posets " << st.posets
        << ", planar-blocks " << st.planar_blocks << ", nonplanar-blocks "
        << st.nonplanar_blocks << ", failures " << st.failures << "\n";
  int tf = 0;
  for (const SweepStats& st : per_size) tf += st.failures;
  out << "total-failures: " << tf << "\n";
  return out.str();
}

}  // namespace hibi
