#include <algorithm>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "morseres/fiber.hpp"
#include "morseres/oracle.hpp"

using namespace morseres;
using test::S;

namespace {

Ideal three_gen_ideal() {
  return artinian_reduction({{2, 2, 0, 0}, {1, 0, 1, 0}, {3, 0, 0, 1}},
                            {4, 3, 2, 2});
}

}  // namespace

TEST_CASE("catalog loads and validates") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.entries.size() == 29);
  // one entry is the four-facet complex on four vertices whose matching
  // leaves critical faces in adjacent sizes
  bool found = false;
  for (const auto& e : cat.entries) {
    std::set<Subset> facets(e.facets.begin(), e.facets.end());
    if (facets == std::set<Subset>{S({1}), S({2, 3}), S({2, 4}), S({3, 4})}) {
      found = true;
      CHECK(e.matching.size() == 3);
    }
  }
  CHECK(found);
}

TEST_CASE("fiber stripping") {
  Ideal R = three_gen_ideal();
  Exps u = {3, 3, 2, 1};
  FiberData f = strip_fiber(R, u);
  CHECK(f.A == std::vector<int>{1, 4});
  CHECK(f.B == std::vector<int>{2, 3});
  CHECK(f.Xprime == S({5, 6}));
  CHECK(f.V == 0);
  CHECK(f.uprime == Exps{3, 0, 0, 1});
  CHECK(phi(f, R, S({3, 5, 6})) == S({1, 2}));
  CHECK(phi(f, R, S({1, 2, 3, 5, 6})) == 0);
  // delta is the full simplex on {1,2}
  CHECK(f.delta == std::vector<Subset>{0, S({1}), S({2}), S({1, 2})});
  for (Subset m : f.members) CHECK(phi_inv(f, R, phi(f, R, m)) == m);

  Ideal I = test::fixture("exp11");
  FiberData g = strip_fiber(I, {1, 2, 2});
  CHECK(g.A == std::vector<int>{1});
  CHECK(g.B == std::vector<int>{2, 3});
  CHECK(g.Xprime == S({4, 5}));
  CHECK(g.V == 0);
  CHECK(g.members ==
        std::vector<Subset>{S({1, 4, 5}), S({2, 4, 5}), S({1, 2, 4, 5})});

  CHECK_THROWS_AS(strip_fiber(I, {1, 0, 0}), input_error);  // not a label
}

TEST_CASE("phi reverses inclusion and shifts size by one") {
  Ideal R = three_gen_ideal();
  for (const auto& [u, fiber] : lcm_lattice(R)) {
    FiberData f = strip_fiber(R, u);
    CHECK(f.members.size() == f.delta.size());
    for (Subset t1 : f.members)
      for (Subset t2 : f.members) {
        if ((t1 & ~t2) == 0)  // t1 subset of t2
          CHECK((phi(f, R, t2) & ~phi(f, R, t1)) == 0);
        if (popcount(t1) == popcount(t2) + 1)
          CHECK(popcount(phi(f, R, t2)) == popcount(phi(f, R, t1)) + 1);
      }
  }
}

TEST_CASE("complement complex of a plain multiset") {
  auto [delta, V] = delta_of_fiber({{1, 0}, {0, 1}}, {1, 0});
  CHECK(V == S({2}));
  CHECK(delta == std::vector<Subset>{0});

  // restricted generators of the first worked fiber: {x1^2, x1, x1^3 x4}
  // against x1^3 x4
  auto [d2, v2] = delta_of_fiber(
      {{2, 0, 0, 0}, {1, 0, 0, 0}, {3, 0, 0, 1}}, {3, 0, 0, 1});
  CHECK(v2 == 0);
  CHECK(d2 == std::vector<Subset>{0, S({1}), S({2}), S({1, 2})});
}

TEST_CASE("fiber matchings lift through the complement map") {
  Ideal R = three_gen_ideal();
  const Catalog& cat = builtin_catalog();
  for (const auto& [u, fiber] : lcm_lattice(R)) {
    Matching m = fiber_matching(R, u, cat);
    std::set<Subset> fset(fiber.begin(), fiber.end());
    for (auto [big, small] : m) {
      CHECK(fset.count(big));
      CHECK(fset.count(small));
      CHECK(R.label(big) == u);
      CHECK(R.label(small) == u);
      CHECK(popcount(big) == popcount(small) + 1);
    }
  }
}

TEST_CASE("assembled matching and restriction") {
  Ideal R = three_gen_ideal();
  Matching M = assemble_matching(R, builtin_catalog());
  CHECK(M.size() == 44);
  MatchingCheck chk = check_matching(R, M);
  CHECK(chk.shape_ok);
  CHECK(chk.homogeneous);
  CHECK(chk.acyclic);
  CHECK(restrict_to_subideal(R, M).empty());

  Ideal I3 = test::fixture("squarefree_three");
  Matching M3 = assemble_matching(I3, builtin_catalog());
  CHECK(M3.size() == 47);
  Matching MJ = restrict_to_subideal(I3, M3);
  REQUIRE(MJ.size() == 1);
  CHECK(MJ[0] == std::pair<Subset, Subset>{S({1, 2, 3}), S({2, 3})});
}
