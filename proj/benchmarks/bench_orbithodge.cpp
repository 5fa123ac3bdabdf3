#include <benchmark/benchmark.h>

#include "orbithodge/cohomology.hpp"
#include "orbithodge/hodge.hpp"
#include "orbithodge/invariants.hpp"
#include "orbithodge/orbit.hpp"
#include "orbithodge/resolution.hpp"

using namespace orbithodge;

namespace {

const OrbitSpec kMinimal{{2, -1, -1}};
const FibreSpec kFibre{kMinimal, {1, -1, 0}, 1};

void BM_OrbitCompactification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_compactification(kMinimal).groebner_basis().size());
}
BENCHMARK(BM_OrbitCompactification)->Unit(benchmark::kMillisecond);

void BM_FibreCompactification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fibre_compactification(kFibre).groebner_basis().size());
}
BENCHMARK(BM_FibreCompactification)->Unit(benchmark::kMillisecond);

void BM_InvariantReport(benchmark::State& state) {
  auto ideal = orbit_compactification(kMinimal);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_report(ideal).sing_codim);
}
BENCHMARK(BM_InvariantReport)->Unit(benchmark::kMillisecond);

void BM_FormsResolution(benchmark::State& state) {
  auto ideal = reduce_embedding(fibre_compactification(kFibre)).ideal;
  const int p = static_cast<int>(state.range(0));
  auto forms = differential_forms_module(ideal, p);
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(forms).betti.steps.size());
}
BENCHMARK(BM_FormsResolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FibreDiamond(benchmark::State& state) {
  auto ideal = fibre_compactification(kFibre);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(ideal).dim);
}
BENCHMARK(BM_FibreDiamond)->Unit(benchmark::kMillisecond);

void BM_OrbitDiamond(benchmark::State& state) {
  auto ideal = orbit_compactification(kMinimal);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(ideal).dim);
}
BENCHMARK(BM_OrbitDiamond)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
