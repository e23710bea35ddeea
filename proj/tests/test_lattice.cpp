#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "hibi/census.hpp"
#include "hibi/errors.hpp"
#include "hibi/lattice.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {
// bare declarations pin the element order to p1..p5
const char* kExampleText = "p1\np2\np3\np4\np5\np1<p4\np2<p4\np2<p5\np3<p5\n";
}

TEST_SUITE("lattice") {

TEST_CASE("birkhoff enumerates exactly the down-sets") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : poset_census(n)) {
      DistLattice L = DistLattice::birkhoff(p);
      std::set<IdealMask> got;
      for (int e = 0; e < L.size(); ++e) got.insert(L.ideal(e));
      CHECK(got == oracle::downsets(p));
    }

  CHECK(DistLattice::birkhoff(parse_poset(kExampleText)).size() == 13);
  CHECK(DistLattice::birkhoff(chain_poset(4)).size() == 5);
  CHECK(DistLattice::birkhoff(antichain_poset(3)).size() == 8);
}

TEST_CASE("element order, rank, indexing") {
  DistLattice L = DistLattice::birkhoff(parse_poset(kExampleText));
  CHECK(L.rank() == 5);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == L.size() - 1);
  CHECK(L.ideal(L.bottom()) == 0);
  CHECK(L.rank_of(L.top()) == 5);

  for (int e = 0; e + 1 < L.size(); ++e) {
    int ra = L.rank_of(e), rb = L.rank_of(e + 1);
    CHECK(ra <= rb);
    if (ra == rb) CHECK(subset_lex_less(L.ideal(e), L.ideal(e + 1)));
  }
  for (int e = 0; e < L.size(); ++e) CHECK(L.index_of(L.ideal(e)) == e);
  CHECK(L.index_of(IdealMask{1} << 3) == -1);  // {p4} is not a down-set
}

TEST_CASE("leq is containment; join and meet are union and intersection") {
  DistLattice L = DistLattice::birkhoff(parse_poset(kExampleText));
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      CHECK(L.leq(a, b) == ((L.ideal(a) & ~L.ideal(b)) == 0));
      int j = L.join(a, b), m = L.meet(a, b);
      CHECK(L.ideal(j) == (L.ideal(a) | L.ideal(b)));
      CHECK(L.ideal(m) == (L.ideal(a) & L.ideal(b)));
      // absorption
      CHECK(L.meet(a, j) == a);
      CHECK(L.join(a, m) == a);
    }
  // distributivity over all triples
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      for (int c = 0; c < L.size(); ++c)
        CHECK(L.join(a, L.meet(b, c)) ==
              L.meet(L.join(a, b), L.join(a, c)));
}

TEST_CASE("covers match the order-theoretic definition") {
  for (const char* text : {kExampleText, "a\nb\nc"}) {
    DistLattice L = DistLattice::birkhoff(parse_poset(text));
    CHECK(L.covers() == oracle::covers(L));
    // adjacency lists agree with the pair list
    std::vector<std::pair<int, int>> from_lists;
    for (int e = 0; e < L.size(); ++e) {
      for (int u : L.upper_covers(e)) from_lists.emplace_back(e, u);
      for (int d : L.lower_covers(e)) CHECK(L.leq(d, e));
    }
    std::sort(from_lists.begin(), from_lists.end());
    CHECK(from_lists == L.covers());
  }
}

TEST_CASE("join irreducibles recover the base poset") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : poset_census(n)) {
      DistLattice L = DistLattice::birkhoff(p);
      Poset q = join_irreducibles(L);
      REQUIRE(q.size() == p.size());
      CHECK(canonical_form(q) == canonical_form(p));
    }

  Poset p = parse_poset(kExampleText);
  Poset q = join_irreducibles(DistLattice::birkhoff(p));
  // names carry over; relations agree through the name correspondence
  std::vector<int> to_p(q.size());
  for (int v = 0; v < q.size(); ++v) {
    auto it = std::find(p.names().begin(), p.names().end(), q.name(v));
    REQUIRE(it != p.names().end());
    to_p[v] = (int)(it - p.names().begin());
  }
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      CHECK(q.less(a, b) == p.less(to_p[a], to_p[b]));
}

TEST_CASE("element names") {
  DistLattice L = DistLattice::birkhoff(parse_poset(kExampleText));
  CHECK(L.element_name(L.bottom()) == "{}");
  int mid = L.index_of(0b11);  // {p1,p2}, both minimal
  REQUIRE(mid >= 0);
  CHECK(L.element_name(mid) == "{p1,p2}");
  CHECK(L.element_name(L.top()) == "{p1,p2,p3,p4,p5}");
}

TEST_CASE("cut edges and decomposition: chain") {
  DistLattice L = DistLattice::birkhoff(chain_poset(5));
  CHECK(cut_edges(L).size() == 5);
  Decomposition d = decompose(L);
  CHECK(d.cuts.size() == 5);
  for (const auto& s : d.segments) CHECK(s.degenerate);
  CHECK(simple_blocks(L).empty());
}

TEST_CASE("cut edges and decomposition: two diamonds over a connector") {
  // A2 plus chain plus A2; the lattice splits at one cut edge
  Poset base = ordinal_sum(ordinal_sum(antichain_poset(2, "x"), chain_poset(1)),
                           antichain_poset(2, "y"));
  DistLattice L = DistLattice::birkhoff(base);
  CHECK(L.size() == 8);
  auto cuts = cut_edges(L);
  REQUIRE(cuts.size() == 1);
  CHECK(L.rank_of(cuts[0].lower) == 2);
  CHECK(L.rank_of(cuts[0].upper) == 3);

  auto blocks = simple_blocks(L);
  REQUIRE(blocks.size() == 2);
  for (const DistLattice& b : blocks) {
    CHECK(b.size() == 4);
    CHECK(b.base().size() == 2);
    CHECK(b.base().is_antichain());
    CHECK(cut_edges(b).empty());
  }
}

TEST_CASE("interval rebases on its own join irreducibles") {
  Poset base = ordinal_sum(ordinal_sum(antichain_poset(2, "x"), chain_poset(1)),
                           antichain_poset(2, "y"));
  DistLattice L = DistLattice::birkhoff(base);
  // [bottom, {x0,x1}] is the lower diamond
  int mid = L.index_of(0b11);
  REQUIRE(mid >= 0);
  DistLattice I = interval(L, L.bottom(), mid);
  CHECK(I.size() == 4);
  CHECK(I.base().is_antichain());
  // [v, v] is the one-point lattice on an empty base
  DistLattice pt = interval(L, mid, mid);
  CHECK(pt.size() == 1);
  CHECK(pt.base().size() == 0);
}

TEST_CASE("diamond is simple") {
  DistLattice L = DistLattice::birkhoff(antichain_poset(2));
  CHECK(cut_edges(L).empty());
  Decomposition d = decompose(L);
  REQUIRE(d.segments.size() == 1);
  CHECK_FALSE(d.segments[0].degenerate);
  CHECK(d.segments[0].block.size() == 4);
}

TEST_CASE("budget and size caps") {
  Budget tight;
  tight.max_lattice_elements = 100;
  CHECK_THROWS_AS(DistLattice::birkhoff(antichain_poset(7), tight), CapError);
  CHECK_THROWS_AS(DistLattice::birkhoff(antichain_poset(65)), CapError);
}

TEST_CASE("serialize is deterministic and injective on small corpora") {
  std::set<std::string> seen;
  for (const Poset& p : poset_census(4)) {
    DistLattice L = DistLattice::birkhoff(p);
    std::string s = L.serialize();
    CHECK(s == L.serialize());
    CHECK(seen.insert(s).second);
  }
}

TEST_CASE("subset lex order is a strict total order on small masks") {
  std::vector<IdealMask> masks{0, 1, 2, 3, 4, 5, 6, 7};
  for (IdealMask a : masks)
    for (IdealMask b : masks) {
      if (a == b) {
        CHECK_FALSE(subset_lex_less(a, b));
      } else {
        CHECK(subset_lex_less(a, b) != subset_lex_less(b, a));
      }
    }
  // {0} before {1}, {1} before {0,1}? lowest differing bit belongs to {0,1}:
  // {1} = bit1 only, {0,1} has bit0, so {0,1} is smaller
  CHECK(subset_lex_less(0b001, 0b010));
  CHECK(subset_lex_less(0b011, 0b010));
}

}  // TEST_SUITE
