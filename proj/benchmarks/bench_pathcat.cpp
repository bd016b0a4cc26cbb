#include <benchmark/benchmark.h>

#include "pathcat/funcspaces.hpp"
#include "pathcat/models.hpp"

using namespace pathcat;

namespace {

std::shared_ptr<GpdPathStructure> model() {
  return make_gpd_model(std::vector<std::string>{"interval", "bz2"});
}

// Lifts of the diagonal of bz2 through (s, t): homotopies from id to id.
void BM_Lifts(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    auto ps = model();
    GpdCategory& c = ps->gpd();
    const PathObjectData pb = ps->absolute_path_object(ps->named("bz2"));
    const MorId diagonal = c.compose(pb.st, pb.r);
    state.ResumeTiming();
    benchmark::DoNotOptimize(c.lifts(diagonal, pb.st).size());
  }
}
BENCHMARK(BM_Lifts);

void BM_HomGroupoid(benchmark::State& state) {
  for (auto _ : state) {
    auto ps = model();
    Enrichment e(*ps);
    const ObjId b = ps->named("bz2"), i = ps->named("I");
    benchmark::DoNotOptimize(e.hom(i, b).arrows.size());
    benchmark::DoNotOptimize(e.hom(b, b).arrows.size());
  }
}
BENCHMARK(BM_HomGroupoid)->Unit(benchmark::kMillisecond);

void BM_CheckExponential(benchmark::State& state) {
  for (auto _ : state) {
    auto ps = model();
    const ObjId b = ps->named("bz2"), i = ps->named("I");
    const ExponentialCandidate cand = ps->gpd().function_space(i, b);
    benchmark::DoNotOptimize(check_exponential(*ps, cand).strong);
  }
}
BENCHMARK(BM_CheckExponential)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
