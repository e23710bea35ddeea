#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hibi/census.hpp"
#include "hibi/poset.hpp"
#include "oracles.hpp"

using namespace hibi;

TEST_SUITE("census") {

TEST_CASE("counts match the classical table") {
  // number of posets on n unlabeled elements: 1, 2, 5, 16, 63, 318, 2045, ...
  const std::vector<size_t> want{1, 2, 5, 16, 63, 318, 2045};
  for (int n = 1; n <= 7; ++n) CHECK(poset_census(n).size() == want[n - 1]);
}

TEST_CASE("count at eight elements") {
  CHECK(poset_census(8).size() == 16999);
}

TEST_CASE("width filter agrees with the subset-filter width") {
  for (int n = 1; n <= 6; ++n) {
    auto all = poset_census(n);
    auto narrow = poset_census(n, 2);
    size_t expect = 0;
    for (const Poset& p : all)
      if (oracle::width(p) <= 2) ++expect;
    CHECK(narrow.size() == expect);
    for (const Poset& p : narrow) CHECK(oracle::width(p) <= 2);
  }
  // regression figure, cross-checked against the unfiltered census above
  CHECK(poset_census(8, 2).size() == 711);
}

TEST_CASE("canonical form is a relabeling invariant") {
  Poset p = parse_poset("p1<p4\np2<p4\np2<p5\np3<p5\n");
  // same poset entered backwards with different names
  Poset q = parse_poset("m3<t2\nm2<t2\nm2<t1\nm1<t1\n");
  CHECK(canonical_form(p) == canonical_form(q));
  CHECK(canonical_form(p) != canonical_form(antichain_poset(5)));
  CHECK(canonical_form(chain_poset(3)) != canonical_form(antichain_poset(3)));

  // V and its dual are non-isomorphic
  Poset v = parse_poset("a<c\nb<c");
  Poset vd = parse_poset("c<a\nc<b");
  CHECK(canonical_form(v) != canonical_form(vd));
  // but each is isomorphic to itself under relabeling
  CHECK(canonical_form(v) == canonical_form(parse_poset("z<k\nq<k")));
}

TEST_CASE("census members are distinct, canonical, sized") {
  auto posets = poset_census(5);
  std::set<std::string> forms;
  for (const Poset& p : posets) {
    CHECK(p.size() == 5);
    CHECK(forms.insert(canonical_form(p)).second);
  }
  // sorted by canonical form
  std::vector<std::string> order(forms.begin(), forms.end());
  for (size_t i = 0; i < posets.size(); ++i)
    CHECK(canonical_form(posets[i]) == order[i]);
}

TEST_CASE("census covers every isomorphism type") {
  // every 4-element poset built from generators appears in the census
  auto posets = poset_census(4);
  std::set<std::string> forms;
  for (const Poset& p : posets) forms.insert(canonical_form(p));
  CHECK(forms.count(canonical_form(chain_poset(4))));
  CHECK(forms.count(canonical_form(antichain_poset(4))));
  CHECK(forms.count(canonical_form(
      disjoint_union(chain_poset(2), chain_poset(2)))));
  CHECK(forms.count(canonical_form(
      ordinal_sum(antichain_poset(2), antichain_poset(2)))));
  CHECK(forms.count(canonical_form(parse_poset("a<c\nb<c\nd"))));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(poset_census(0), std::invalid_argument);
  CHECK_THROWS_AS(poset_census(11), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(antichain_poset(17)), std::invalid_argument);
}

}  // TEST_SUITE
