#include <doctest.h>

#include "helpers.hpp"
#include "morseres/oracle.hpp"

using namespace morseres;
using test::S;

TEST_CASE("upper Koszul complexes") {
  Ideal I = test::fixture("exp11");
  // x1x2 is a generator; only W = {} keeps u/x^W in the ideal
  CHECK(upper_koszul(I, {1, 1, 0}) == std::vector<Subset>{0});
  // a monomial outside the ideal gives the void complex
  CHECK(upper_koszul(I, {1, 0, 0}).empty());
}

TEST_CASE("reduced homology over GF(p)") {
  CHECK(reduced_homology({}, 2).empty());                 // void
  CHECK(reduced_homology({0}, 2) == std::map<int, int>{{-1, 1}});
  CHECK(reduced_homology({0, S({1})}, 2).empty());        // a point
  CHECK(reduced_homology({0, S({1}), S({2})}, 2) ==
        std::map<int, int>{{0, 1}});                      // two points
  // hollow triangle
  std::vector<Subset> tri = {0, S({1}), S({2}), S({3}),
                             S({1, 2}), S({1, 3}), S({2, 3})};
  CHECK(reduced_homology(tri, 2) == std::map<int, int>{{1, 1}});
  CHECK(reduced_homology(tri, 32749) == std::map<int, int>{{1, 1}});
  // filled triangle is contractible
  tri.push_back(S({1, 2, 3}));
  CHECK(reduced_homology(tri, 2).empty());
}

TEST_CASE("betti numbers via lattice homology") {
  Ideal I = test::fixture("exp11");
  BettiTable t = minimal_betti(I);
  std::map<int, int> totals;
  for (auto& [k, v] : t) totals[k.first] += v;
  CHECK(totals == std::map<int, int>{{0, 5}, {1, 6}, {2, 2}});
  CHECK(t.at({2, {1, 2, 2}}) == 1);
  CHECK(t.at({0, {1, 1, 0}}) == 1);
  CHECK(t.at({1, {1, 1, 1}}) == 1);
  CHECK(t.count({0, {1, 1, 1}}) == 0);

  // characteristic cross-check on a fixture
  CHECK(minimal_betti(I, 32749) == t);
  CHECK_THROWS_AS(minimal_betti(I, 6), input_error);
}
