#include "hibi/planar.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hibi {

namespace {

// saturating counter: any value >= 2 already refutes uniqueness, so clamping
// keeps the checks exact
constexpr std::uint64_t kSat = std::uint64_t{1} << 60;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s > kSat ? kSat : s;
}

void check_embedding(const DistLattice& L, const PlanarEmbedding& emb) {
  const int n = L.size();
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < n; ++e)
    if (!seen.insert(emb.coord[e]).second)
      throw std::logic_error("embedding is not injective");
  if (emb.coord[L.bottom()] != std::pair<int, int>{0, 0})
    throw std::logic_error("bottom element not at the origin");
  for (auto [u, v] : L.covers()) {
    int di = emb.coord[v].first - emb.coord[u].first;
    int dj = emb.coord[v].second - emb.coord[u].second;
    if (!((di == 1 && dj == 0) || (di == 0 && dj == 1)))
      throw std::logic_error("cover edge does not step one unit");
  }
  if (n > 4096) return;  // quadratic comparability check at desk scale only
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool geom = emb.coord[a].first <= emb.coord[b].first &&
                  emb.coord[a].second <= emb.coord[b].second;
      if (geom != L.leq(a, b))
        throw std::logic_error("embedding is not order-compatible");
    }
}

}  // namespace

EmbedResult try_embed(const DistLattice& L) {
  const Poset& P = L.base();
  const int n = P.size();
  AntichainResult ac = max_antichain(P);
  if (ac.size >= 3) {
    EmbedResult r;
    r.witness.assign(ac.witness.begin(), ac.witness.begin() + 3);
    return r;
  }

  // width <= 2: the incomparability graph is triangle-free and perfect,
  // hence bipartite; its components are 2-colored independently
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !P.comparable(a, b)) adj[a].push_back(b);

  std::vector<int> side(n, -1);
  IdealMask m1 = 0, m2 = 0;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    if (adj[s].empty()) {
      side[s] = 0;
      m1 |= IdealMask{1} << s;
      continue;
    }
    std::vector<int> comp{s}, stack{s};
    side[s] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (side[w] == -1) {
          side[w] = side[v] ^ 1;
          comp.push_back(w);
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          throw std::logic_error(
              "incomparability graph of a width-2 poset is not bipartite");
        }
      }
    }
    std::vector<int> s0, s1;
    for (int v : comp) (side[v] ? s1 : s0).push_back(v);
    // the smaller side joins chain1; s0 holds the component's smallest
    // index, which ties send to chain2
    bool s0_to_c1 = s0.size() < s1.size();
    for (int v : (s0_to_c1 ? s0 : s1)) m1 |= IdealMask{1} << v;
    for (int v : (s0_to_c1 ? s1 : s0)) m2 |= IdealMask{1} << v;
  }

  PlanarEmbedding emb;
  emb.coord.resize(L.size());
  for (int e = 0; e < L.size(); ++e) {
    IdealMask id = L.ideal(e);
    emb.coord[e] = {std::popcount(id & m1), std::popcount(id & m2)};
  }
  auto chain_sorted = [&](IdealMask m) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1) out.push_back(v);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return P.less(a, b); });
    return out;
  };
  emb.chain1 = chain_sorted(m1);
  emb.chain2 = chain_sorted(m2);
  check_embedding(L, emb);

  EmbedResult r;
  r.embedding = std::move(emb);
  return r;
}

MaximalChain upper_chain(const DistLattice& L, const PlanarEmbedding& emb) {
  MaximalChain c;
  int v = L.bottom();
  c.vertices.push_back(v);
  while (v != L.top()) {
    int next = -1;
    for (int w : L.upper_covers(v))
      if (emb.coord[w].second == emb.coord[v].second + 1) next = w;
    if (next == -1) {
      if (L.upper_covers(v).empty())
        throw std::logic_error("non-top element without upper cover");
      next = L.upper_covers(v)[0];
    }
    c.vertices.push_back(next);
    v = next;
  }
  return c;
}

EdgeLabeling build_labeling(const DistLattice& L, const PlanarEmbedding& emb) {
  MaximalChain c0 = upper_chain(L, emb);
  auto [imax, jmax] = emb.coord[L.top()];
  // label t sits on the unique c0 edge crossing a given row or column gap
  std::vector<int> vlab(static_cast<size_t>(jmax) + 1, 0);
  std::vector<int> hlab(static_cast<size_t>(imax) + 1, 0);
  for (size_t t = 1; t < c0.vertices.size(); ++t) {
    auto [pi, pj] = emb.coord[c0.vertices[t - 1]];
    auto [ci, cj] = emb.coord[c0.vertices[t]];
    if (cj == pj + 1)
      vlab[pj] = static_cast<int>(t);
    else
      hlab[pi] = static_cast<int>(t);
  }
  EdgeLabeling lam;
  lam.out.resize(L.size());
  for (int v = 0; v < L.size(); ++v) {
    auto [vi, vj] = emb.coord[v];
    for (int w : L.upper_covers(v)) {
      int lab = (emb.coord[w].second == vj + 1) ? vlab[vj] : hlab[vi];
      if (lab == 0) throw std::logic_error("edge with no parallel c0 edge");
      lam.out[v].push_back(lab);
    }
  }
  return lam;
}

DescentSet chain_descents(const MaximalChain& c, const DistLattice& L,
                          const EdgeLabeling& lam) {
  DescentSet s;
  for (size_t t = 1; t + 1 < c.vertices.size(); ++t) {
    int l1 = lam.label(L, c.vertices[t - 1], c.vertices[t]);
    int l2 = lam.label(L, c.vertices[t], c.vertices[t + 1]);
    if (l1 > l2) s.add(static_cast<int>(t));
  }
  return s;
}

CornerKind classify_corner(const MaximalChain& c, int t,
                           const PlanarEmbedding& emb) {
  if (t < 1 || t + 1 >= static_cast<int>(c.vertices.size()))
    throw std::out_of_range("corner position out of range");
  auto [pi, pj] = emb.coord[c.vertices[t - 1]];
  auto [ci, cj] = emb.coord[c.vertices[t]];
  auto [ni, nj] = emb.coord[c.vertices[t + 1]];
  if (cj == pj + 1 && ni == ci + 1) return CornerKind::UpperCorner;
  if (ci == pi + 1 && nj == cj + 1) return CornerKind::LowerCorner;
  return CornerKind::Straight;
}

MaximalChain straighten(const MaximalChain& c, const DistLattice& L,
                        const EdgeLabeling& lam, const PlanarEmbedding& emb) {
  std::map<std::pair<int, int>, int> at;
  for (int e = 0; e < L.size(); ++e) at[emb.coord[e]] = e;
  MaximalChain cur = c;
  for (;;) {
    const std::vector<int>& vs = cur.vertices;
    int t = -1;
    for (size_t k = 1; k + 1 < vs.size(); ++k) {
      int l1 = lam.label(L, vs[k - 1], vs[k]);
      int l2 = lam.label(L, vs[k], vs[k + 1]);
      if (l1 > l2) {
        t = static_cast<int>(k);
        break;
      }
    }
    if (t == -1) return cur;
    // a descent only occurs at a lower corner; swap it for the opposite
    // corner of its square, which strictly lowers the label sequence
    if (classify_corner(cur, t, emb) != CornerKind::LowerCorner)
      throw std::logic_error("descent at a vertex that is not a lower corner");
    std::pair<int, int> target{emb.coord[vs[t - 1]].first,
                               emb.coord[vs[t + 1]].second};
    auto it = at.find(target);
    if (it == at.end())
      throw std::logic_error("replacement vertex missing from the lattice");
    cur.vertices[t] = it->second;
  }
}

ElVerdict verify_el(const DistLattice& L, const EdgeLabeling& lam) {
  const int n = L.size();
  int maxlab = 0;
  for (const auto& labs : lam.out)
    for (int l : labs) maxlab = std::max(maxlab, l);

  for (int x = 0; x < n; ++x) {
    // per-source DP up the covers: cnt[v][l] counts weakly increasing chains
    // from x to v whose last label is l (0 is the start sentinel); seq[v] is
    // the lex-least label sequence of any chain x..v, att[v] its multiplicity
    std::vector<std::vector<std::uint64_t>> cnt(n);
    std::vector<std::vector<int>> seq(n);
    std::vector<std::uint64_t> att(n, 0);
    std::vector<char> reach(n, 0);
    cnt[x].assign(static_cast<size_t>(maxlab) + 1, 0);
    cnt[x][0] = 1;
    att[x] = 1;
    reach[x] = 1;
    for (int v = x; v < n; ++v) {
      if (!reach[v]) continue;
      std::uint64_t total = 0;
      std::vector<std::uint64_t> pre(static_cast<size_t>(maxlab) + 1, 0);
      for (int l = 0; l <= maxlab; ++l) {
        total = sat_add(total, cnt[v][l]);
        pre[l] = total;
      }
      if (v != x) {
        if (total != 1) {
          std::ostringstream msg;
          msg << "interval has " << (total >= kSat ? std::string(">=many")
                                                   : std::to_string(total))
              << " weakly increasing chains";
          return {false, x, v, msg.str()};
        }
        if (att[v] != 1)
          return {false, x, v, "lexicographically least chain is not unique"};
        for (size_t k = 1; k < seq[v].size(); ++k)
          if (seq[v][k - 1] > seq[v][k])
            return {false, x, v, "lexicographically least chain has a descent"};
      }
      const std::vector<int>& ups = L.upper_covers(v);
      for (size_t k = 0; k < ups.size(); ++k) {
        int w = ups[k], l = lam.out[v][k];
        if (cnt[w].empty()) cnt[w].assign(static_cast<size_t>(maxlab) + 1, 0);
        cnt[w][l] = sat_add(cnt[w][l], pre[l]);
        std::vector<int> cand = seq[v];
        cand.push_back(l);
        if (!reach[w] || cand < seq[w]) {
          seq[w] = std::move(cand);
          att[w] = att[v];
        } else if (cand == seq[w]) {
          att[w] = sat_add(att[w], att[v]);
        }
        reach[w] = 1;
      }
    }
  }
  return {};
}

DescentMax max_descent_cardinality(const DistLattice& L,
                                   const EdgeLabeling& lam) {
  const int n = L.size();
  DescentMax res;
  res.witness.vertices.push_back(L.bottom());
  if (n == 1) return res;

  // bwd[v][k]: most descents on a chain suffix starting with the edge from v
  // to its k-th upper cover
  std::vector<std::vector<int>> bwd(n);
  for (int v = n - 1; v >= 0; --v) {
    const std::vector<int>& ups = L.upper_covers(v);
    bwd[v].assign(ups.size(), 0);
    for (size_t k = 0; k < ups.size(); ++k) {
      int w = ups[k], le = lam.out[v][k];
      int best = 0;
      for (size_t k2 = 0; k2 < L.upper_covers(w).size(); ++k2)
        best = std::max(best, bwd[w][k2] + (le > lam.out[w][k2] ? 1 : 0));
      bwd[v][k] = best;
    }
  }

  int v = L.bottom(), k = 0;
  for (size_t k2 = 1; k2 < bwd[v].size(); ++k2)
    if (bwd[v][k2] > bwd[v][k]) k = static_cast<int>(k2);
  res.value = bwd[v][k];
  // greedy walk keeps the target value, smallest successor first, so the
  // witness is the lex-least optimal chain
  for (;;) {
    int w = L.upper_covers(v)[k];
    res.witness.vertices.push_back(w);
    if (w == L.top()) break;
    int le = lam.out[v][k], need = bwd[v][k], nk = -1;
    for (size_t k2 = 0; k2 < L.upper_covers(w).size(); ++k2)
      if (bwd[w][k2] + (le > lam.out[w][k2] ? 1 : 0) == need) {
        nk = static_cast<int>(k2);
        break;
      }
    assert(nk != -1);
    v = w;
    k = nk;
  }
  return res;
}

SquaresMax max_cyclic_squares(const DistLattice& L,
                              const PlanarEmbedding& emb) {
  std::map<std::pair<int, int>, int> at;
  for (int e = 0; e < L.size(); ++e) at[emb.coord[e]] = e;
  auto find = [&](int i, int j) {
    auto it = at.find({i, j});
    return it == at.end() ? -1 : it->second;
  };

  std::vector<Square> sq;
  for (int e = 0; e < L.size(); ++e) {
    auto [i, j] = emb.coord[e];
    int ee = find(i + 1, j), nn = find(i, j + 1), tt = find(i + 1, j + 1);
    if (ee != -1 && nn != -1 && tt != -1) sq.push_back({e, ee, nn, tt});
  }
  SquaresMax res;
  if (sq.empty()) return res;

  // squares are in ascending rank of their bottoms, so a <= b whenever
  // square a precedes square b; plain DP yields the longest staircase
  auto prec = [&](int a, int b) {
    auto [ti, tj] = emb.coord[sq[a].top];
    auto [bi, bj] = emb.coord[sq[b].bottom];
    return ti <= bi && tj <= bj;
  };
  const int m = static_cast<int>(sq.size());
  std::vector<int> dp(m, 1), parent(m, -1);
  int besti = 0;
  for (int b = 0; b < m; ++b) {
    for (int a = 0; a < b; ++a)
      if (prec(a, b) && dp[a] + 1 > dp[b]) {
        dp[b] = dp[a] + 1;
        parent[b] = a;
      }
    if (dp[b] > dp[besti]) besti = b;
  }

  std::vector<int> picked;
  for (int c = besti; c != -1; c = parent[c]) picked.push_back(c);
  std::reverse(picked.begin(), picked.end());

  auto connector = [&](int from, int to) {
    std::vector<int> path{from};
    int cur = from;
    while (cur != to) {
      int nxt = -1;
      for (int w : L.upper_covers(cur))
        if (L.leq(w, to)) {
          nxt = w;
          break;
        }
      if (nxt == -1)
        throw std::logic_error(
            "no saturated connector between comparable square corners");
      path.push_back(nxt);
      cur = nxt;
    }
    return path;
  };

  res.value = dp[besti];
  for (size_t i = 0; i < picked.size(); ++i) {
    res.witness.squares.push_back(sq[picked[i]]);
    if (i + 1 < picked.size())
      res.witness.connectors.push_back(
          connector(sq[picked[i]].top, sq[picked[i + 1]].bottom));
  }
  return res;
}

BigInt count_descent_free_chains(const DistLattice& L,
                                 const EdgeLabeling& lam) {
  const int n = L.size();
  int maxlab = 0;
  for (const auto& labs : lam.out)
    for (int l : labs) maxlab = std::max(maxlab, l);
  std::vector<std::vector<BigInt>> cnt(
      n, std::vector<BigInt>(static_cast<size_t>(maxlab) + 1, 0));
  cnt[L.bottom()][0] = 1;
  for (int v = 0; v < n; ++v) {
    BigInt run = 0;
    std::vector<BigInt> pre(static_cast<size_t>(maxlab) + 1);
    for (int l = 0; l <= maxlab; ++l) {
      run += cnt[v][l];
      pre[l] = run;
    }
    const std::vector<int>& ups = L.upper_covers(v);
    for (size_t k = 0; k < ups.size(); ++k)
      cnt[ups[k]][lam.out[v][k]] += pre[lam.out[v][k]];
  }
  BigInt total = 0;
  for (int l = 0; l <= maxlab; ++l) total += cnt[L.top()][l];
  return total;
}

}  // namespace hibi
