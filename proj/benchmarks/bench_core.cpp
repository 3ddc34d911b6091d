// Microbenchmarks for the hot paths: representation construction, section
// space assembly (deterministic and Monte Carlo), Toeplitz compression, and
// the end-to-end identity check.

#include <benchmark/benchmark.h>

#include <vector>

#include "orbitq/orbit.hpp"
#include "orbitq/sections.hpp"

namespace {

using namespace orbitq;

OrbitSpec sphere(int k) {
  const auto rs = build_root_system(2);
  WeightVec xi;
  xi.coords = {Rat(k)};
  return build_orbit(rs, build_lie_basis(rs), xi);
}

OrbitSpec flag33() {
  const auto rs = build_root_system(3);
  WeightVec xi;
  xi.coords = {Rat(1), Rat(1)};
  return build_orbit(rs, build_lie_basis(rs), xi);
}

void BM_BuildIrrep_su2(benchmark::State& state) {
  const auto rs = build_root_system(2);
  const auto basis = build_lie_basis(rs);
  WeightVec mxi;
  mxi.coords = {Rat(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_irrep(basis, mxi, 2000));
  }
}
BENCHMARK(BM_BuildIrrep_su2)->Arg(8)->Arg(32)->Arg(128);

void BM_BuildIrrep_su3(benchmark::State& state) {
  const auto rs = build_root_system(3);
  const auto basis = build_lie_basis(rs);
  WeightVec mxi;
  mxi.coords = {Rat(state.range(0)), Rat(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_irrep(basis, mxi, 2000));
  }
}
BENCHMARK(BM_BuildIrrep_su3)->Arg(1)->Arg(2)->Arg(3);

void BM_SectionSpace_su2(benchmark::State& state) {
  const OrbitSpec spec = sphere(1);
  const int m = static_cast<int>(state.range(0));
  const QuadratureRule rule = build_su2_quadrature(2 * (m + 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_space(spec, m, rule));
  }
}
BENCHMARK(BM_SectionSpace_su2)->Arg(4)->Arg(16)->Arg(64);

void BM_SectionSpace_mc(benchmark::State& state) {
  const OrbitSpec spec = flag33();
  const QuadratureRule rule = build_haar_mc(3, state.range(0), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_space(spec, 1, rule));
  }
}
BENCHMARK(BM_SectionSpace_mc)->Arg(10000)->Arg(40000)->Unit(benchmark::kMillisecond);

void BM_Toeplitz_su2(benchmark::State& state) {
  const OrbitSpec spec = sphere(1);
  const int m = static_cast<int>(state.range(0));
  const QuadratureRule rule = build_su2_quadrature(2 * (m + 4));
  const SectionSpace space = section_space(spec, m, rule);
  const OrbitFunction f = basis_moment(spec.basis, spec.basis.x_index(0), spec.xi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(toeplitz(space, f, rule));
  }
}
BENCHMARK(BM_Toeplitz_su2)->Arg(4)->Arg(16)->Arg(64);

void BM_VerifyTheorem_su2(benchmark::State& state) {
  const OrbitSpec spec = sphere(2);
  const int m = static_cast<int>(state.range(0));
  const QuadratureRule rule = build_su2_quadrature(2 * (2 * m + 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem(spec, m, rule, 1e-8));
  }
}
BENCHMARK(BM_VerifyTheorem_su2)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
