#include <benchmark/benchmark.h>

#include "polyad/catalog.hpp"
#include "polyad/nary_aut.hpp"
#include "polyad/nary_group.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/search.hpp"
#include "polyad/verify.hpp"

namespace {

using namespace polyad;

NaryGroup catalog_group(std::int64_t index) { return catalog_all().at(static_cast<std::size_t>(index)).nary(); }

void BM_PostCover(benchmark::State& state) {
  const auto g = catalog_group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(post_cover(g, 0));
  state.SetLabel(g.label());
}
BENCHMARK(BM_PostCover)->DenseRange(0, 5);

void BM_NaryAutomorphisms(benchmark::State& state) {
  const auto g = catalog_group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nary_automorphisms(g));
  state.SetLabel(g.label());
}
BENCHMARK(BM_NaryAutomorphisms)->DenseRange(0, 5);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto g = catalog_preset("direct:cyclic:2,cyclic:" + std::to_string(state.range(0))).group;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(4)->Arg(8)->Arg(16);

void BM_VerifyAxioms(benchmark::State& state) {
  const auto z = cyclic_group(static_cast<std::size_t>(state.range(0)));
  const auto g = derive(z, theta_preset(z, "neg"), 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_nary_axioms(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.tuple_count()));
}
BENCHMARK(BM_VerifyAxioms)->Arg(5)->Arg(9)->Arg(13);

void BM_VerifyCatalog(benchmark::State& state) {
  const auto entries = catalog_all();
  for (auto _ : state)
    for (const auto& e : entries) benchmark::DoNotOptimize(verify_nary(e.nary()));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
