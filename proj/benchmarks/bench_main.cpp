#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "hgc/classify.hpp"
#include "hgc/code.hpp"

namespace {

using namespace hgc;

const ProjectiveSystem& system_for(int m, int p) {
  static std::map<std::pair<int, int>, ProjectiveSystem> cache;
  auto it = cache.find({m, p});
  if (it == cache.end()) it = cache.emplace(std::pair{m, p}, build_system(HermitianSpace(Field::make(p, 1), m))).first;
  return it->second;
}

std::vector<std::vector<Elem>> random_uppers(const ProjectiveSystem& sys, int count) {
  std::mt19937_64 rng(1);
  std::vector<std::vector<Elem>> out(count, std::vector<Elem>(sys.k()));
  for (auto& u : out)
    for (auto& x : u) x = static_cast<Elem>(rng() % sys.field().q2());
  return out;
}

void BM_EnumerateLines(benchmark::State& state) {
  const HermitianSpace s(Field::make(2, 1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lines(s));
}
BENCHMARK(BM_EnumerateLines)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_WeightDirect(benchmark::State& state) {
  const auto& sys = system_for(static_cast<int>(state.range(0)), 2);
  const auto forms = random_uppers(sys, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto phi = AlternatingForm::from_upper(sys.field(), sys.m(), forms[i++ % forms.size()]);
    benchmark::DoNotOptimize(weight_direct(phi, sys));
  }
}
BENCHMARK(BM_WeightDirect)->Arg(5)->Arg(6)->Arg(7);

void BM_WeightEngine(benchmark::State& state) {
  const auto& sys = system_for(static_cast<int>(state.range(0)), 2);
  const CodewordEngine eng(sys);
  const auto forms = random_uppers(sys, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eng.weight(forms[i++ % forms.size()]));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sys.n()));
}
BENCHMARK(BM_WeightEngine)->Arg(5)->Arg(6)->Arg(7);

void BM_WeightFromABC(benchmark::State& state) {
  const auto& sys = system_for(6, 2);
  const auto forms = random_uppers(sys, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto phi = AlternatingForm::from_upper(sys.field(), 6, forms[i++ % forms.size()]);
    benchmark::DoNotOptimize(abc_partition(phi, sys.space(), sys.points()).weight_from_abc);
  }
}
BENCHMARK(BM_WeightFromABC);

void BM_ExhaustiveSpectrum(benchmark::State& state) {
  const auto& sys = system_for(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(sys, SpectrumOptions{}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) << 20);
}
BENCHMARK(BM_ExhaustiveSpectrum)->Unit(benchmark::kMillisecond);

void BM_SampledSpectrum(benchmark::State& state) {
  const auto& sys = system_for(6, 2);
  SpectrumOptions opt;
  opt.exhaustive = false;
  opt.samples = 1 << 14;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(sys, opt));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * opt.samples);
}
BENCHMARK(BM_SampledSpectrum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
