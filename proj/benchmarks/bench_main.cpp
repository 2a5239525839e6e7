#include <benchmark/benchmark.h>

#include <vector>

#include "moran/certificates.hpp"
#include "moran/density.hpp"
#include "moran/fourier.hpp"
#include "moran/spectrum.hpp"
#include "moran/system.hpp"

namespace {

using namespace moran;

const MoranSystem& final_system() {
  static const MoranSystem s = parse_system("cycle: (2,{0,1}) (3,{0,1,2})");
  return s;
}

const MoranSystem& non_uniform() {
  static const MoranSystem s =
      parse_system("preamble: (2,{0,1,2}) (2,{0,5,6}) cycle: (2,{0,3})");
  return s;
}

void BM_FourierLevel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  double xi = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_level(final_system(), n, xi));
    xi += 1e-9;
  }
}
BENCHMARK(BM_FourierLevel)->Arg(6)->Arg(30)->Arg(120);

void BM_LevelSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_spectrum(final_system(), n));
}
BENCHMARK(BM_LevelSpectrum)->Arg(6)->Arg(8);

void BM_CheckOrthogonal(benchmark::State& state) {
  const SpectrumLevel s = level_spectrum(final_system(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_orthogonal(final_system(), s));
  state.counters["pairs"] = static_cast<double>(s.points.size() * (s.points.size() - 1) / 2);
}
BENCHMARK(BM_CheckOrthogonal)->Unit(benchmark::kMillisecond);

void BM_QSumGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpectrumLevel s = level_spectrum(final_system(), n);
  std::vector<double> xis(200);
  for (std::size_t i = 0; i < xis.size(); ++i) xis[i] = -5.0 + 10.0 * static_cast<double>(i) / 199.0;
  for (auto _ : state) benchmark::DoNotOptimize(q_sum_finite(final_system(), n, s.points, xis));
}
BENCHMARK(BM_QSumGrid)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Atoms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atoms(non_uniform(), n));
}
BENCHMARK(BM_Atoms)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_DensityHistogram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(density_histogram(non_uniform(), 14, 4096));
}
BENCHMARK(BM_DensityHistogram)->Unit(benchmark::kMillisecond);

void BM_GridMinimizeF(benchmark::State& state) {
  const auto res = static_cast<std::size_t>(state.range(0));
  constexpr double pi = 3.14159265358979323846;
  for (auto _ : state) benchmark::DoNotOptimize(grid_minimize_f(-pi, pi, -pi, pi, res));
}
BENCHMARK(BM_GridMinimizeF)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
