#include <algorithm>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "morseres/oracle.hpp"
#include "morseres/twogen.hpp"

using namespace morseres;
using test::S;

TEST_CASE("variable partition") {
  Ideal I = test::fixture("exp11");
  TwoGenPartition P = twogen_partition(I);
  CHECK(P.P0 == S({3}));
  CHECK(P.P1 == S({4}));
  CHECK(P.P2 == S({5}));
  CHECK(P.A == S({3, 4}));
  CHECK(P.B == S({3, 5}));

  CHECK_THROWS_AS(twogen_partition(make_ideal({{1, 1}, {1, 2}})), input_error);
}

TEST_CASE("closed-form criticals equal the matching criticals") {
  for (const char* name : {"exp11", "disjoint_supports", "level", "scarf_converse"}) {
    Ideal I = test::fixture(name);
    Matching M = twogen_matching(I);
    auto crit = critical_cells(I, M);
    CHECK(twogen_criticals(I) == crit);
    CHECK(verify_bw(I, M).ok);
    CHECK(betti_from_matching(I, M) == minimal_betti(I));
  }
}

TEST_CASE("level-by-level construction gives the same matching") {
  for (const char* name : {"exp11", "disjoint_supports", "level", "scarf_converse"}) {
    Ideal I = test::fixture(name);
    Matching a = twogen_matching(I);
    Matching b = twogen_matching_by_levels(I);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("last-module rank") {
  CHECK(cm_type(test::fixture("exp11")) == 2);
  CHECK(cm_type(test::fixture("disjoint_supports")) == 4);
  CHECK(cm_type(test::fixture("level")) == 2);
}

TEST_CASE("disjoint supports: Scarf complex carries the resolution") {
  Ideal I = test::fixture("disjoint_supports");
  ScarfStructure s = scarf_structure(I);
  REQUIRE(s.applicable);
  CHECK(s.betti == std::vector<long long>{6, 13, 12, 4});

  // skeleton-join faces match both the critical cells and the unique-label
  // definition
  auto crit = twogen_criticals(I);
  CHECK(s.faces == crit);
  std::vector<Subset> scarf = scarf_complex(I);
  scarf.erase(scarf.begin());  // drop the empty face
  CHECK(s.faces == scarf);

  Ideal C = test::fixture("scarf_converse");
  CHECK_FALSE(scarf_structure(C).applicable);  // overlapping supports
  // yet its Scarf complex still supports the minimal resolution
  BettiTable t;
  for (Subset f : scarf_complex(C))
    if (f) ++t[{popcount(f) - 1, C.label(f)}];
  CHECK(t == minimal_betti(C));
}

TEST_CASE("level recognition") {
  LevelReport lv = level_check(test::fixture("level"));
  CHECK(lv.level);
  CHECK(lv.alpha == std::vector<int>{-1});
  CHECK(lv.beta == std::vector<int>{-1});
  CHECK(lv.gamma == std::vector<int>{-2});
  CHECK(lv.top_degrees == std::vector<int>{7});
  CHECK(lv.top_cells == 2);

  LevelReport no = level_check(test::fixture("exp11"));
  CHECK_FALSE(no.level);
  CHECK(no.top_degrees == std::vector<int>{4, 5});

  LevelReport dj = level_check(test::fixture("disjoint_supports"));
  CHECK(dj.level);
  CHECK(dj.gamma.empty());  // condition on the mixed classes is vacuous
  CHECK(dj.top_degrees == std::vector<int>{6});
  CHECK(dj.top_cells == 4);
}
