#include "cartan/groebner.hpp"
#include "cartan/obstruct.hpp"
#include "cartan/sparse_matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cartan;

static void BM_SparseRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> v(-9, 9);
  std::uniform_real_distribution<double> u(0, 1);
  SparseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (u(rng) < 0.1) m.set(r, c, v(rng));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_SparseRank)->Arg(50)->Arg(100);

// n + 1 dense random cubics in n + 1 variables (a regular sequence).
static void BM_Buchberger(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<std::string> names;
  for (unsigned i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  const auto ctx = VariableContext::make(names);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-3, 3);
  std::vector<Polynomial> gens;
  for (unsigned k = 0; k <= n; ++k) {
    Polynomial p(ctx);
    for (const auto& m : monomials_of_degree(*ctx, 6)) p.add_term(m, v(rng));
    gens.push_back(std::move(p));
  }
  const auto order = MonomialOrder::for_context(OrderKind::grevlex, *ctx);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ctx, gens, order));
}
BENCHMARK(BM_Buchberger)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_So8KhCohomology(benchmark::State& state) {
  const auto catalog = load_validated_catalog(CARTAN_BENCH_CATALOG);
  const auto model =
      build_cartan_model(catalog.lookup_group("so(8)"), catalog.lookup_embedding("so(3)xso(3)-in-so(8)"));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(model.algebra, 22));
}
BENCHMARK(BM_So8KhCohomology)->Unit(benchmark::kMillisecond);

static void BM_ReferencePipeline(benchmark::State& state) {
  const auto catalog = load_validated_catalog(CARTAN_BENCH_CATALOG);
  const auto cases = paper_case_list(catalog);
  for (auto _ : state) {
    for (const auto& c : cases) benchmark::DoNotOptimize(run_case(c));
  }
}
BENCHMARK(BM_ReferencePipeline)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
