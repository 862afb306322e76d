#include <benchmark/benchmark.h>

#include <random>

#include "rephom/exactlin/elimination.hpp"
#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/repmodel/invariants.hpp"
#include "rephom/repmodel/rep_complex.hpp"
#include "rephom/simplicial/pipeline.hpp"

using namespace rephom;

namespace {

SparseMatrix random_sparse(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-9, 9);
  std::vector<MatrixEntry> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u(rng) < density) e.push_back({i, j, Rational(v(rng))});
  return SparseMatrix::from_entries(n, n, std::move(e));
}

void BM_SparseRank(benchmark::State& state) {
  auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_SparseRank)->Arg(64)->Arg(128)->Arg(256);

void BM_CP2Homology(benchmark::State& state) {
  auto rc = repmodel::build_rep_complex(lie::cp_model(2), lie::LieData::sl2());
  for (auto _ : state) benchmark::DoNotOptimize(repmodel::homology_table(rc, 12));
}
BENCHMARK(BM_CP2Homology);

void BM_CP2Invariants(benchmark::State& state) {
  auto rc = repmodel::build_rep_complex(lie::cp_model(2), lie::LieData::sl2());
  for (auto _ : state) benchmark::DoNotOptimize(repmodel::invariant_homology_table(rc, 12));
}
BENCHMARK(BM_CP2Invariants);

void BM_SimplicialSphere(benchmark::State& state) {
  auto s2 = simplicial::FiniteSimplicialSet::sphere(2);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simplicial::simplicial_hr(s2, groupschemes::GroupSchemeData::additive(1), degree, 3));
}
BENCHMARK(BM_SimplicialSphere)->Arg(2)->Arg(3);

void BM_TorusRep0(benchmark::State& state) {
  auto m = groupschemes::surface_model(groupschemes::GroupSchemeData::general_linear(2), 1, true);
  for (auto _ : state) benchmark::DoNotOptimize(groebner::groebner_basis(groupschemes::model_degree0_ideal(m)));
}
BENCHMARK(BM_TorusRep0);

}  // namespace

BENCHMARK_MAIN();
