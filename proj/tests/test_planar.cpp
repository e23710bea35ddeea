#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hibi/census.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/planar.hpp"
#include "hibi/regularity.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {
DistLattice grid(int a, int b) {
  // lattice of a chain pair: the a x b grid
  return DistLattice::birkhoff(
      disjoint_union(chain_poset(a - 1, "r"), chain_poset(b - 1, "c")));
}

// every embedding invariant, re-checked from outside the library
void check_embedding(const DistLattice& L, const PlanarEmbedding& emb) {
  REQUIRE(emb.coord.size() == (size_t)L.size());
  std::set<std::pair<int, int>> seen;
  for (auto c : emb.coord) CHECK(seen.insert(c).second);
  CHECK(emb.coord[L.bottom()] == std::pair<int, int>{0, 0});
  for (auto [u, v] : L.covers()) {
    int di = emb.coord[v].first - emb.coord[u].first;
    int dj = emb.coord[v].second - emb.coord[u].second;
    CHECK(di + dj == 1);
    CHECK(di * dj == 0);
  }
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      CHECK(L.leq(x, y) == (emb.coord[x].first <= emb.coord[y].first &&
                            emb.coord[x].second <= emb.coord[y].second));
  // the two chains partition the base
  std::set<int> members(emb.chain1.begin(), emb.chain1.end());
  members.insert(emb.chain2.begin(), emb.chain2.end());
  CHECK(members.size() == (size_t)L.base().size());
  CHECK(emb.chain1.size() + emb.chain2.size() == (size_t)L.base().size());
  for (const auto* side : {&emb.chain1, &emb.chain2})
    for (size_t i = 0; i + 1 < side->size(); ++i)
      CHECK(L.base().less((*side)[i], (*side)[i + 1]));
}
}  // namespace

TEST_SUITE("planar") {

TEST_CASE("wide posets are rejected with a witness") {
  for (const char* text : {"a\nb\nc", "p1<p4\np2<p4\np2<p5\np3<p5"}) {
    DistLattice L = DistLattice::birkhoff(parse_poset(text));
    EmbedResult er = try_embed(L);
    CHECK_FALSE(er.planar());
    REQUIRE(er.witness.size() == 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        CHECK_FALSE(L.base().comparable(er.witness[i], er.witness[j]));
  }
}

TEST_CASE("embeddings exist and satisfy the invariants on the narrow corpus") {
  int embedded = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : poset_census(n, 2)) {
      DistLattice L = DistLattice::birkhoff(p);
      EmbedResult er = try_embed(L);
      REQUIRE(er.planar());
      check_embedding(L, *er.embedding);
      ++embedded;
    }
  CHECK(embedded == 118);
}

TEST_CASE("chain lattice embeds on one axis") {
  // a chain has an edgeless incomparability graph, so every element lands
  // on the first chain and the second coordinate stays zero
  DistLattice L = DistLattice::birkhoff(chain_poset(4));
  EmbedResult er = try_embed(L);
  REQUIRE(er.planar());
  check_embedding(L, *er.embedding);
  for (int e = 0; e < L.size(); ++e) {
    CHECK(er.embedding->coord[e].first == e);
    CHECK(er.embedding->coord[e].second == 0);
  }
}

TEST_CASE("upper chain is the unique descent-free chain") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {4, 5}}) {
    DistLattice L = grid(a, b);
    EmbedResult er = try_embed(L);
    REQUIRE(er.planar());
    const PlanarEmbedding& emb = *er.embedding;
    EdgeLabeling lam = build_labeling(L, emb);
    MaximalChain c0 = upper_chain(L, emb);
    REQUIRE(c0.vertices.front() == L.bottom());
    REQUIRE(c0.vertices.back() == L.top());
    // labels along the upper chain read 1, 2, ..., d+1
    for (size_t t = 0; t + 1 < c0.vertices.size(); ++t)
      CHECK(lam.label(L, c0.vertices[t], c0.vertices[t + 1]) == (int)t + 1);
    CHECK(chain_descents(c0, L, lam).size() == 0);
    CHECK(count_descent_free_chains(L, lam) == 1);
    CHECK(straighten(c0, L, lam, emb) == c0);
  }
}

TEST_CASE("every maximal chain straightens to the upper chain") {
  for (const DistLattice& L :
       {grid(3, 3), DistLattice::birkhoff(cyclic_poset(2, {0}))}) {
    EmbedResult er = try_embed(L);
    REQUIRE(er.planar());
    EdgeLabeling lam = build_labeling(L, *er.embedding);
    MaximalChain c0 = upper_chain(L, *er.embedding);
    for (const auto& vs : oracle::maximal_chains(L)) {
      MaximalChain c{vs};
      CHECK(straighten(c, L, lam, *er.embedding) == c0);
    }
  }
}

TEST_CASE("corner classification") {
  DistLattice L = grid(3, 3);
  EmbedResult er = try_embed(L);
  REQUIRE(er.planar());
  const PlanarEmbedding& emb = *er.embedding;
  // walk east twice, then north twice: one lower corner in the middle
  auto at = [&](int i, int j) {
    for (int e = 0; e < L.size(); ++e)
      if (emb.coord[e] == std::pair<int, int>{i, j}) return e;
    REQUIRE(false);
    return -1;
  };
  MaximalChain c{{at(0, 0), at(1, 0), at(2, 0), at(2, 1), at(2, 2)}};
  CHECK(classify_corner(c, 1, emb) == CornerKind::Straight);
  CHECK(classify_corner(c, 2, emb) == CornerKind::LowerCorner);
  CHECK(classify_corner(c, 3, emb) == CornerKind::Straight);
  MaximalChain u{{at(0, 0), at(0, 1), at(1, 1), at(1, 2), at(2, 2)}};
  CHECK(classify_corner(u, 1, emb) == CornerKind::UpperCorner);
  CHECK(classify_corner(u, 2, emb) == CornerKind::LowerCorner);
  CHECK_THROWS_AS(classify_corner(c, 0, emb), std::out_of_range);
  CHECK_THROWS_AS(classify_corner(c, 4, emb), std::out_of_range);
}

TEST_CASE("el property holds for the built labeling") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : poset_census(n, 2)) {
      DistLattice L = DistLattice::birkhoff(p);
      EmbedResult er = try_embed(L);
      REQUIRE(er.planar());
      ElVerdict v = verify_el(L, build_labeling(L, *er.embedding));
      CHECK(v.ok);
    }
}

TEST_CASE("el check detects a broken labeling") {
  DistLattice L = grid(2, 3);
  // constant labels make every chain weakly increasing
  EdgeLabeling flat;
  flat.out.resize(L.size());
  for (int e = 0; e < L.size(); ++e)
    flat.out[e].assign(L.upper_covers(e).size(), 1);
  ElVerdict v = verify_el(L, flat);
  CHECK_FALSE(v.ok);
  CHECK(!v.detail.empty());
  CHECK(L.leq(v.x, v.y));
  CHECK(count_descent_free_chains(L, flat) == count_maximal_chains(L));
}

TEST_CASE("max descents: values and witness discipline") {
  struct Row {
    Poset base;
    int want;
  };
  const Row rows[] = {
      {disjoint_union(chain_poset(1, "r"), chain_poset(3, "c")), 1},
      {cyclic_poset(2, {0}), 2},
      {cyclic_poset(3, {1, 1}), 3},
      {chain_poset(5), 0},
  };
  for (const Row& row : rows) {
    DistLattice L = DistLattice::birkhoff(row.base);
    EmbedResult er = try_embed(L);
    REQUIRE(er.planar());
    EdgeLabeling lam = build_labeling(L, *er.embedding);
    DescentMax dm = max_descent_cardinality(L, lam);
    CHECK(dm.value == row.want);
    // witness is a maximal chain attaining the value
    CHECK(dm.witness.vertices.front() == L.bottom());
    CHECK(dm.witness.vertices.back() == L.top());
    for (size_t t = 0; t + 1 < dm.witness.vertices.size(); ++t) {
      const auto& ups = L.upper_covers(dm.witness.vertices[t]);
      CHECK(std::find(ups.begin(), ups.end(), dm.witness.vertices[t + 1]) !=
            ups.end());
    }
    CHECK(chain_descents(dm.witness, L, lam).size() == row.want);
    // and the value is the definitional maximum
    CHECK(dm.value == oracle::regularity(row.base));
  }
}

TEST_CASE("cyclic sublattices: counts and structure") {
  struct Row {
    Poset base;
    int want;
  };
  const Row rows[] = {
      {antichain_poset(2), 1},
      {disjoint_union(chain_poset(1, "r"), chain_poset(5, "c")), 1},
      {cyclic_poset(2, {0}), 2},
      {cyclic_poset(3, {1, 1}), 3},
      {cyclic_poset(4, {2, 0, 1}), 4},
  };
  for (const Row& row : rows) {
    DistLattice L = DistLattice::birkhoff(row.base);
    EmbedResult er = try_embed(L);
    REQUIRE(er.planar());
    const PlanarEmbedding& emb = *er.embedding;
    SquaresMax sm = max_cyclic_squares(L, emb);
    CHECK(sm.value == row.want);
    REQUIRE(sm.witness.squares.size() == (size_t)row.want);
    REQUIRE(sm.witness.connectors.size() == (size_t)(row.want - 1));
    for (const Square& s : sm.witness.squares) {
      auto [i, j] = emb.coord[s.bottom];
      CHECK(emb.coord[s.east] == std::pair<int, int>{i + 1, j});
      CHECK(emb.coord[s.north] == std::pair<int, int>{i, j + 1});
      CHECK(emb.coord[s.top] == std::pair<int, int>{i + 1, j + 1});
    }
    for (size_t k = 0; k + 1 < sm.witness.squares.size(); ++k) {
      const auto& conn = sm.witness.connectors[k];
      REQUIRE(!conn.empty());
      CHECK(conn.front() == sm.witness.squares[k].top);
      CHECK(conn.back() == sm.witness.squares[k + 1].bottom);
      for (size_t t = 0; t + 1 < conn.size(); ++t) {
        CHECK(L.leq(conn[t], conn[t + 1]));
        CHECK(L.rank_of(conn[t + 1]) == L.rank_of(conn[t]) + 1);
      }
    }
  }
}

TEST_CASE("coinciding square corners give a one-entry connector") {
  DistLattice L = DistLattice::birkhoff(cyclic_poset(2, {0}));
  EmbedResult er = try_embed(L);
  REQUIRE(er.planar());
  SquaresMax sm = max_cyclic_squares(L, *er.embedding);
  REQUIRE(sm.witness.connectors.size() == 1);
  CHECK(sm.witness.connectors[0].size() == 1);
  CHECK(sm.witness.squares[0].top == sm.witness.squares[1].bottom);
}

TEST_CASE("three planar statistics agree across the narrow corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : poset_census(n, 2)) {
      DistLattice L = DistLattice::birkhoff(p);
      EmbedResult er = try_embed(L);
      REQUIRE(er.planar());
      EdgeLabeling lam = build_labeling(L, *er.embedding);
      int squares = max_cyclic_squares(L, *er.embedding).value;
      int descents = max_descent_cardinality(L, lam).value;
      int degh = regularity_from_h(h_from_beta(flag_beta(p)));
      CHECK(squares == descents);
      CHECK(descents == degh);
    }
}

}  // TEST_SUITE
