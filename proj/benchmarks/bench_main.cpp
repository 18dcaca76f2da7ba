#include <benchmark/benchmark.h>

#include <random>

#include "tatekit/tn.hpp"
#include "tatekit/verify.hpp"

using namespace tatekit;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, int maxabs) {
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = static_cast<long long>(rng() % (2 * maxabs + 1)) - maxabs;
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  IntMatrix m = random_matrix(rng, state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}

void BM_TatePermutationModule(benchmark::State& state) {
  const FinGroup& g = fixture_groups()[6].group;  // S3
  std::mt19937_64 rng(7);
  GModule m = permutation_module(random_gset(g, rng, 3, 6));
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tate_cohomology(m, degree));
}

void BM_H1YCyclicModel(benchmark::State& state) {
  Perm p(4);
  for (unsigned i = 0; i < 4; ++i) p[i] = (i + 1) % 4;
  FinGroup g = group_from_permutations(4, {p});
  TNTriple t = cyclic_model_triple(g);
  GModule m = regular_module(g);
  TNAlgContext alg = tn_h1alg_context(t, m);
  for (auto _ : state) benchmark::DoNotOptimize(h1y_compute(alg.ctx));
}

void BM_TotalLocalization(benchmark::State& state) {
  GlobalModel model = three_place_model();
  TorusData t = make_torus_data(model, GModule::trivial(model.group(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(total_localization(t));
}

}  // namespace

BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_TatePermutationModule)->Arg(-3)->Arg(-1)->Arg(1)->Arg(3);
BENCHMARK(BM_H1YCyclicModel);
BENCHMARK(BM_TotalLocalization);

BENCHMARK_MAIN();
