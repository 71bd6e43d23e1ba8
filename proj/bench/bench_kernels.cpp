// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "pathnoise/kernels.hpp"
#include "pathnoise/lbl_operator.hpp"
#include "pathnoise/spectral.hpp"

using namespace pathnoise;
using kernels::Exec;

namespace {

ComplexVector random_samples(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (auto& c : v) c = {g(rng), g(rng)};
  return v;
}

template <Exec E>
void BM_ztransform(benchmark::State& state) {
  const auto x = random_samples(static_cast<std::size_t>(state.range(0)));
  ComplexVector out(kDefaultGridSize);
  for (auto _ : state) {
    kernels::ztransform(0, x, out, E);
    benchmark::DoNotOptimize(out.data());
  }
}

template <Exec E>
void BM_inverse_ztransform(benchmark::State& state) {
  const auto spectrum = random_samples(kDefaultGridSize);
  ComplexVector out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    kernels::inverse_ztransform(spectrum, 0, out, E);
    benchmark::DoNotOptimize(out.data());
  }
}

template <Exec E>
void BM_sinc_matrix(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto m = kernels::sinc_matrix(kPi / 2, kDefaultCoeffRange, 1 - static_cast<std::int64_t>(rows),
                                  rows, E);
    benchmark::DoNotOptimize(m.data());
  }
}

template <Exec E>
void BM_design_error(benchmark::State& state) {
  const auto taps = random_samples(static_cast<std::size_t>(state.range(0)));
  const auto omegas = SpectrumGrid::frequencies(8193);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::one_step_design_error(taps, omegas, E));
}

void BM_projector_build(benchmark::State& state) {
  for (auto _ : state) {
    auto p = build_projector(Band(0.0, kPi / 2), kDefaultCoeffRange,
                             static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(p.rank());
  }
}

}  // namespace

BENCHMARK(BM_ztransform<Exec::serial>)->Arg(64)->Arg(1024);
BENCHMARK(BM_ztransform<Exec::parallel>)->Arg(64)->Arg(1024);
BENCHMARK(BM_inverse_ztransform<Exec::serial>)->Arg(256)->Arg(4096);
BENCHMARK(BM_inverse_ztransform<Exec::parallel>)->Arg(256)->Arg(4096);
BENCHMARK(BM_sinc_matrix<Exec::serial>)->Arg(1024)->Arg(4096);
BENCHMARK(BM_sinc_matrix<Exec::parallel>)->Arg(1024)->Arg(4096);
BENCHMARK(BM_design_error<Exec::serial>)->Arg(32);
BENCHMARK(BM_design_error<Exec::parallel>)->Arg(32);
BENCHMARK(BM_projector_build)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
