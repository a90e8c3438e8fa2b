#include <doctest.h>

#include "helpers.hpp"
#include "morseres/ideal.hpp"

using namespace morseres;
using test::S;

TEST_CASE("lcm and divisibility") {
  CHECK(lcm({1, 2, 0}, {0, 1, 3}) == Exps{1, 2, 3});
  CHECK(divides({1, 0, 0}, {1, 1, 0}));
  CHECK(!divides({2, 0, 0}, {1, 1, 0}));
  CHECK(total_degree({1, 2, 2}) == 5);
}

TEST_CASE("labels are componentwise maxima") {
  Ideal I = make_ideal({{1, 1, 0}, {1, 0, 1}});
  CHECK(I.label(S({1})) == Exps{1, 1, 0});
  CHECK(I.label(S({1, 2})) == Exps{1, 1, 1});
  CHECK(I.label(0) == Exps{0, 0, 0});
}

TEST_CASE("artinian reduction appends pure powers in fixed order") {
  Ideal I = artinian_reduction({{1, 1, 0}, {1, 0, 1}});
  CHECK(I.r == 2);
  CHECK(I.q() == 5);
  CHECK(I.e == Exps{2, 2, 2});
  CHECK(I.gens[2] == Exps{2, 0, 0});
  CHECK(I.gens[3] == Exps{0, 2, 0});
  CHECK(I.gens[4] == Exps{0, 0, 2});

  Ideal R = artinian_reduction({{2, 2, 0, 0}, {1, 0, 1, 0}, {3, 0, 0, 1}},
                               {4, 3, 2, 2});
  CHECK(R.q() == 7);
  CHECK(R.gens[3] == Exps{4, 0, 0, 0});
}

TEST_CASE("artinian reduction rejects bad input") {
  CHECK_THROWS_AS(artinian_reduction({{1, 1}}, {1, 2}), input_error);
  CHECK_THROWS_AS(artinian_reduction({{2, 0}, {1, 1}}), input_error);  // pure power
  CHECK_THROWS_AS(artinian_reduction({{1, 1, 0}}), input_error);  // unused variable
  CHECK_THROWS_AS(artinian_reduction({{1, 1}, {1, 1}}), input_error);  // duplicate
  // re-reducing an already reduced ideal trips the pure-power guard
  Ideal I = artinian_reduction({{1, 1, 0}, {1, 0, 1}});
  CHECK_THROWS_AS(artinian_reduction(I.gens, I.e), input_error);
}

TEST_CASE("lcm lattice fibers") {
  Ideal J = make_ideal({{1, 1, 0}, {1, 0, 1}});
  auto lat = lcm_lattice(J);
  CHECK(lat.size() == 3);
  CHECK(lat.at({1, 1, 0}) == std::vector<Subset>{S({1})});
  CHECK(lat.at({1, 0, 1}) == std::vector<Subset>{S({2})});
  CHECK(lat.at({1, 1, 1}) == std::vector<Subset>{S({1, 2})});

  Ideal I = test::fixture("exp11");
  auto fib = lcm_lattice(I).at({1, 2, 2});
  CHECK(fib == std::vector<Subset>{S({1, 4, 5}), S({2, 4, 5}), S({1, 2, 4, 5})});

  // fibers partition the nonempty subsets
  size_t total = 0;
  for (auto& [u, f] : lcm_lattice(I)) total += f.size();
  CHECK(total == (1u << I.q()) - 1);

  Ideal one = make_ideal({{1, 2}});
  CHECK(lcm_lattice(one).size() == 1);
}

TEST_CASE("scarf complex") {
  Ideal J = make_ideal({{1, 1, 0}, {1, 0, 1}});
  CHECK(scarf_complex(J) == std::vector<Subset>{0, S({1}), S({2}), S({1, 2})});

  // shared labels drop out
  Ideal I = test::fixture("exp11");
  auto faces = scarf_complex(I);
  for (Subset bad : {S({1, 4, 5}), S({2, 4, 5}), S({1, 2, 4, 5})})
    CHECK(std::find(faces.begin(), faces.end(), bad) == faces.end());

  // facets {1,2},{1,3},{2,4} for the two-variable example
  Ideal C = test::fixture("scarf_converse");
  auto fc = scarf_complex(C);
  auto has = [&](Subset t) {
    return std::find(fc.begin(), fc.end(), t) != fc.end();
  };
  CHECK(has(S({1, 2})));
  CHECK(has(S({1, 3})));
  CHECK(has(S({2, 4})));
  CHECK(!has(S({1, 4})));
  CHECK(!has(S({3, 4})));
  CHECK(!has(S({2, 3})));
}

TEST_CASE("label monotonicity") {
  Ideal I = test::fixture("squarefree_three");
  for (Subset t = 0; t <= I.full(); ++t) {
    for (int j = 0; j < I.q(); ++j)
      if (t >> j & 1)
        CHECK(divides(I.label(t ^ (Subset(1) << j)), I.label(t)));
    if (t == I.full()) break;
  }
}
