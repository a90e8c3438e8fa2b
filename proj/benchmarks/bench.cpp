#include <benchmark/benchmark.h>

#include "morseres/fiber.hpp"
#include "morseres/oracle.hpp"
#include "morseres/twogen.hpp"

using namespace morseres;

namespace {

Ideal three_gen() {
  return artinian_reduction({{2, 2, 0, 0}, {1, 0, 1, 0}, {3, 0, 0, 1}},
                            {4, 3, 2, 2});
}

Ideal two_gen(int n) {
  // staggered supports so both generators touch every variable class
  Exps a(n, 0), b(n, 0);
  for (int i = 0; i < n; ++i) {
    a[i] = (i % 2 == 0) ? 2 : 1;
    b[i] = (i % 2 == 0) ? 1 : 2;
  }
  return artinian_reduction({a, b});
}

void BM_assemble(benchmark::State& state) {
  Ideal I = three_gen();
  const Catalog& cat = builtin_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_matching(I, cat));
}
BENCHMARK(BM_assemble);

void BM_oracle(benchmark::State& state) {
  Ideal I = three_gen();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_betti(I));
}
BENCHMARK(BM_oracle);

void BM_twogen_matching(benchmark::State& state) {
  Ideal I = two_gen(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twogen_matching(I));
}
BENCHMARK(BM_twogen_matching)->Arg(6)->Arg(10);

void BM_verify_bw(benchmark::State& state) {
  Ideal I = two_gen(6);
  Matching M = twogen_matching(I);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bw(I, M));
}
BENCHMARK(BM_verify_bw);

}  // namespace

BENCHMARK_MAIN();
