#include "hibi/hilbert.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hibi {

BigInt FlagBeta::total() const {
  BigInt t = 0;
  for (const auto& [s, c] : beta) t += c;
  return t;
}

std::string FlagBeta::records() const {
  std::ostringstream out;
  for (const auto& [s, c] : beta)
    out << "beta " << s.str() << ": " << c << "\n";
  return out.str();
}

std::string HVector::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << h[i];
  return out.str();
}

FlagBeta flag_beta(const Poset& p, const Budget& budget) {
  return flag_beta(p, canonical_labeling(p), budget);
}

FlagBeta flag_beta(const Poset& p, const NaturalLabeling& lab,
                   const Budget& budget) {
  FlagBeta fb;
  std::uint64_t seen = 0;
  bool capped = false;
  for_each_linear_extension(p, [&](std::span<const int> ext) {
    if (++seen > budget.max_extensions) {
      capped = true;
      return false;
    }
    fb.beta[descent_set(ext, lab)] += 1;
    return true;
  });
  if (capped) throw CapError("linear extension count exceeds budget");
  return fb;
}

HVector h_from_beta(const FlagBeta& fb) {
  HVector hv;
  for (const auto& [s, c] : fb.beta) {
    size_t k = static_cast<size_t>(s.size());
    if (hv.h.size() <= k) hv.h.resize(k + 1, 0);
    hv.h[k] += c;
  }
  while (hv.h.size() > 1 && hv.h.back() == 0) hv.h.pop_back();
  return hv;
}

FVector f_vector(const DistLattice& L) {
  const int n = L.size();
  const int D = L.rank() + 1;  // elements in a maximal chain
  // endat[k][v] = chains of k elements with largest element v
  std::vector<std::vector<BigInt>> endat(
      static_cast<size_t>(D) + 1, std::vector<BigInt>(n, 0));
  for (int v = 0; v < n; ++v) endat[1][v] = 1;
  for (int k = 2; k <= D; ++k)
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (L.leq(u, v)) endat[k][v] += endat[k - 1][u];
  FVector fv;
  fv.f.assign(static_cast<size_t>(D) + 1, 0);
  fv.f[0] = 1;
  for (int k = 1; k <= D; ++k)
    for (int v = 0; v < n; ++v) fv.f[k] += endat[k][v];
  return fv;
}

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

HVector h_from_f(const FVector& fv) {
  const int D = static_cast<int>(fv.f.size()) - 1;
  HVector hv;
  hv.h.assign(static_cast<size_t>(D) + 1, 0);
  for (int j = 0; j <= D; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term = binomial(D - i, j - i) * fv.f[i];
      if ((j - i) % 2)
        acc -= term;
      else
        acc += term;
    }
    if (acc < 0)
      throw std::invalid_argument(
          "negative h-coefficient: input is not the f-vector of an ideal "
          "lattice order complex");
    hv.h[j] = acc;
  }
  while (hv.h.size() > 1 && hv.h.back() == 0) hv.h.pop_back();
  return hv;
}

int regularity_from_h(const HVector& h) {
  for (int k = static_cast<int>(h.h.size()) - 1; k >= 0; --k)
    if (h.h[k] != 0) return k;
  return 0;
}

BigInt count_maximal_chains(const DistLattice& L) {
  std::vector<BigInt> ways(L.size(), 0);
  ways[L.bottom()] = 1;
  for (auto [u, v] : L.covers()) ways[v] += ways[u];
  return ways[L.top()];
}

FlagBeta beta_via_chains(const DistLattice& L, const EdgeLabeling& lam,
                         const Budget& budget) {
  FlagBeta fb;
  std::uint64_t seen = 0;
  std::vector<int> labels;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == L.top()) {
      if (++seen > budget.max_extensions)
        throw CapError("maximal chain count exceeds budget");
      DescentSet s;
      for (size_t t = 1; t < labels.size(); ++t)
        if (labels[t - 1] > labels[t]) s.add(static_cast<int>(t));
      fb.beta[s] += 1;
      return;
    }
    const std::vector<int>& ups = L.upper_covers(v);
    for (size_t k = 0; k < ups.size(); ++k) {
      labels.push_back(lam.out[v][k]);
      self(self, ups[k]);
      labels.pop_back();
    }
  };
  dfs(dfs, L.bottom());
  return fb;
}

}  // namespace hibi
