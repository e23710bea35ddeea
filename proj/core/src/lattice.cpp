#include "hibi/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <unordered_set>

namespace hibi {

bool subset_lex_less(IdealMask a, IdealMask b) {
  if (a == b) return false;
  IdealMask d = a ^ b;
  IdealMask low = d & (~d + 1);
  return (a & low) != 0;
}

int DistLattice::rank_of(int e) const { return std::popcount(elements_[e]); }

int DistLattice::index_of(IdealMask m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int DistLattice::join(int a, int b) const {
  int e = index_of(elements_[a] | elements_[b]);
  assert(e >= 0);
  return e;
}

int DistLattice::meet(int a, int b) const {
  int e = index_of(elements_[a] & elements_[b]);
  assert(e >= 0);
  return e;
}

DistLattice DistLattice::birkhoff(const Poset& base, const Budget& budget) {
  const int n = base.size();
  if (n > 64)
    throw CapError("birkhoff: base posets above 64 elements are unsupported");
  std::vector<IdealMask> pred(n, 0);
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < n; ++a)
      if (base.less(a, v)) pred[v] |= IdealMask{1} << a;

  std::unordered_set<IdealMask> seen;
  std::vector<IdealMask> work{0};
  seen.insert(0);
  while (!work.empty()) {
    IdealMask cur = work.back();
    work.pop_back();
    for (int v = 0; v < n; ++v) {
      if ((cur >> v) & 1) continue;
      if ((pred[v] & cur) != pred[v]) continue;  // v addable iff all its predecessors present
      IdealMask nxt = cur | (IdealMask{1} << v);
      if (seen.insert(nxt).second) {
        if (seen.size() > budget.max_lattice_elements)
          throw CapError("lattice size guard exceeded (" +
                         std::to_string(budget.max_lattice_elements) + " elements)");
        work.push_back(nxt);
      }
    }
  }

  DistLattice L;
  L.base_ = base;
  L.elements_.assign(seen.begin(), seen.end());
  std::sort(L.elements_.begin(), L.elements_.end(), [](IdealMask a, IdealMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return subset_lex_less(a, b);
  });
  L.index_.reserve(L.elements_.size() * 2);
  for (int e = 0; e < L.size(); ++e) L.index_.emplace(L.elements_[e], e);

  L.up_.resize(L.size());
  L.down_.resize(L.size());
  for (int e = 0; e < L.size(); ++e) {
    IdealMask cur = L.elements_[e];
    for (int v = 0; v < n; ++v) {
      if ((cur >> v) & 1) continue;
      if ((pred[v] & cur) != pred[v]) continue;
      int f = L.index_of(cur | (IdealMask{1} << v));
      assert(f >= 0);
      L.up_[e].push_back(f);
      L.down_[f].push_back(e);
      L.covers_.push_back({e, f});
    }
  }
  // ascending v yields ascending target index within a rank; covers_ comes
  // out sorted by (lower, upper), down_ by pushing in ascending e
  assert(std::is_sorted(L.covers_.begin(), L.covers_.end()));
  return L;
}

std::string DistLattice::element_name(int e) const {
  std::string s = "{";
  bool first = true;
  for (IdealMask m = elements_[e]; m != 0; m &= m - 1) {
    if (!first) s += ",";
    s += base_.name(std::countr_zero(m));
    first = false;
  }
  return s + "}";
}

std::string DistLattice::serialize() const {
  std::ostringstream out;
  out << "lattice elements=" << size() << " rank=" << rank() << "\n";
  out << "base";
  for (const auto& nm : base_.names()) out << ' ' << nm;
  out << "\n";
  for (int e = 0; e < size(); ++e) {
    out << "element " << e << " =";
    if (elements_[e] == 0) {
      out << " -";
    } else {
      bool first = true;
      for (IdealMask m = elements_[e]; m != 0; m &= m - 1) {
        out << (first ? " " : ",") << std::countr_zero(m);
        first = false;
      }
    }
    out << "\n";
  }
  for (auto [a, b] : covers_) out << "cover " << a << ' ' << b << "\n";
  return out.str();
}

int EdgeLabeling::label(const DistLattice& L, int lower, int upper) const {
  const std::vector<int>& ups = L.upper_covers(lower);
  for (size_t k = 0; k < ups.size(); ++k)
    if (ups[k] == upper) return out[lower][k];
  assert(false && "not a cover pair");
  return -1;
}

Poset join_irreducibles(const DistLattice& L) {
  const Poset& base = L.base();
  std::vector<int> ji;
  for (int e = 0; e < L.size(); ++e)
    if (L.lower_covers(e).size() == 1) ji.push_back(e);

  std::vector<std::string> names;
  names.reserve(ji.size());
  for (int e : ji) {
    // a principal ideal has a unique maximal element: its generator
    int gen = -1;
    for (IdealMask m = L.ideal(e); m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      IdealMask below = IdealMask{1} << v;
      for (int a = 0; a < base.size(); ++a)
        if (base.less(a, v)) below |= IdealMask{1} << a;
      if (below == L.ideal(e)) {
        gen = v;
        break;
      }
    }
    assert(gen >= 0);
    names.push_back(base.name(gen));
  }

  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < static_cast<int>(ji.size()); ++i)
    for (int j = 0; j < static_cast<int>(ji.size()); ++j)
      if (i != j && L.ideal(ji[i]) != L.ideal(ji[j]) &&
          (L.ideal(ji[i]) & ~L.ideal(ji[j])) == 0)
        rels.emplace_back(i, j);
  return Poset(std::move(names), rels);
}

std::vector<CutEdge> cut_edges(const DistLattice& L) {
  std::vector<int> layer(L.rank() + 1, 0);
  for (int e = 0; e < L.size(); ++e) ++layer[L.rank_of(e)];
  std::vector<CutEdge> out;
  for (auto [a, b] : L.covers())
    if (layer[L.rank_of(a)] == 1 && layer[L.rank_of(b)] == 1)
      out.push_back({a, b});
  return out;
}

DistLattice interval(const DistLattice& L, int x, int y) {
  if (!L.leq(x, y)) throw std::invalid_argument("interval: x <= y required");
  IdealMask window = L.ideal(y) & ~L.ideal(x);
  const Poset& base = L.base();
  std::vector<int> keep;
  for (IdealMask m = window; m != 0; m &= m - 1) keep.push_back(std::countr_zero(m));
  std::vector<std::string> names;
  for (int v : keep) names.push_back(base.name(v));
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      if (base.less(keep[i], keep[j])) rels.emplace_back(i, j);
  return DistLattice::birkhoff(Poset(std::move(names), rels));
}

Decomposition decompose(const DistLattice& L) {
  Decomposition dec;
  dec.cuts = cut_edges(L);
  int lo = L.bottom();
  auto push_segment = [&](int a, int b) {
    Decomposition::Segment seg;
    seg.lo = a;
    seg.hi = b;
    seg.degenerate = (L.rank_of(b) - L.rank_of(a)) <= 1;
    seg.block = interval(L, a, b);
    dec.segments.push_back(std::move(seg));
  };
  for (const CutEdge& c : dec.cuts) {
    push_segment(lo, c.lower);
    lo = c.upper;
  }
  push_segment(lo, L.top());
#ifndef NDEBUG
  for (const auto& seg : dec.segments)
    if (!seg.degenerate) assert(cut_edges(seg.block).empty());
#endif
  return dec;
}

std::vector<DistLattice> simple_blocks(const DistLattice& L) {
  std::vector<DistLattice> out;
  for (auto& seg : decompose(L).segments)
    if (!seg.degenerate) out.push_back(std::move(seg.block));
  return out;
}

}  // namespace hibi
