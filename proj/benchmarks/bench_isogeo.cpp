#include <benchmark/benchmark.h>

#include "isogeo/homog6.hpp"
#include "isogeo/identities.hpp"
#include "isogeo/quadric.hpp"

using namespace isogeo;

namespace {
models::SurfaceJet cartan_jet() {
  auto m = models::registry_get("g3-cartan");
  return models::jet(m, models::sample_points(m, 1, 1)[0]);
}
}  // namespace

static void BM_Jet(benchmark::State& st) {
  auto m = models::registry_get("g3-cartan");
  auto p = models::sample_points(m, 1, 1)[0];
  for (auto _ : st) benchmark::DoNotOptimize(models::jet(m, p));
}
BENCHMARK(BM_Jet);

static void BM_AlphaRoute(benchmark::State& st) {
  auto jet = cartan_jet();
  const auto route = static_cast<quadric::Route>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(quadric::alpha_tensor(jet, jet.frame_f, route));
}
BENCHMARK(BM_AlphaRoute)->Arg(0)->Arg(1)->Arg(2);

static void BM_Invariants(benchmark::State& st) {
  auto jet = cartan_jet();
  for (auto _ : st) benchmark::DoNotOptimize(quadric::invariants(jet));
}
BENCHMARK(BM_Invariants);

static void BM_Codazzi(benchmark::State& st) {
  auto jet = cartan_jet();
  for (auto _ : st) benchmark::DoNotOptimize(identities::codazzi_check(jet));
}
BENCHMARK(BM_Codazzi);

static void BM_Gauss(benchmark::State& st) {
  auto jet = cartan_jet();
  for (auto _ : st) benchmark::DoNotOptimize(identities::gauss_check(jet));
}
BENCHMARK(BM_Gauss);

static void BM_InvariantWeylTable(benchmark::State& st) {
  auto inv = homog6::table_invariants(homog6::load_alpha_table(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(identities::invariant_weyl(inv));
}
BENCHMARK(BM_InvariantWeylTable)->Arg(1)->Arg(2);

static void BM_KernelScan(benchmark::State& st) {
  auto fam = homog6::build_isospectral_family(homog6::load_alpha_table(2));
  for (auto _ : st) benchmark::DoNotOptimize(homog6::kernel_constancy(fam, 64));
}
BENCHMARK(BM_KernelScan);

BENCHMARK_MAIN();
