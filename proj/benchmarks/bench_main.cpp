#include <benchmark/benchmark.h>

#include "xxz/drude.hpp"
#include "xxz/lindblad.hpp"
#include "xxz/quadrature.hpp"
#include "xxz/quasilocal.hpp"
#include "xxz/time_average.hpp"
#include "xxz/transfer.hpp"

using namespace xxz;

static void BM_BuildY(benchmark::State& st) {
  const Anisotropy a(1, 3);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_Y(a, cplx(1.5, 0.2), n));
  st.SetComplexityN(n);
}
BENCHMARK(BM_BuildY)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildYTwisted(benchmark::State& st) {
  const Anisotropy a(1, 3);
  for (auto _ : st) benchmark::DoNotOptimize(build_Y_twisted(a, cplx(1.5, 0.2), 0.7, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BuildYTwisted)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Commutator(benchmark::State& st) {
  const Anisotropy a(1, 3);
  const int n = static_cast<int>(st.range(0));
  const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
  const Operator y = build_Y(a, cplx(1.5, 0.2), n);
  for (auto _ : st) benchmark::DoNotOptimize(normalized_commutator(h, y));
}
BENCHMARK(BM_Commutator)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_KappaR(benchmark::State& st) {
  const Anisotropy a(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kappa_r(a, cplx(1.5, 0.1), cplx(1.6, -0.1), 64));
}
BENCHMARK(BM_KappaR)->Arg(3)->Arg(7)->Arg(13);

static void BM_Certificate(benchmark::State& st) {
  const Anisotropy a(1, 5);
  for (auto _ : st) benchmark::DoNotOptimize(contraction_certificate(a, cplx(1.5, 0.3)));
}
BENCHMARK(BM_Certificate);

static void BM_KernelSolve(benchmark::State& st) {
  const Anisotropy a(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_K(a, cplx(1.5, 0.1), cplx(1.6, -0.2)));
}
BENCHMARK(BM_KernelSolve)->Arg(3)->Arg(13);

static void BM_KernelClosed(benchmark::State& st) {
  const Anisotropy a(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_K_closed(a, cplx(1.5, 0.1), cplx(1.6, -0.2)));
}
BENCHMARK(BM_KernelClosed)->Arg(3)->Arg(13);

static void BM_DomainIntegral(benchmark::State& st) {
  const Anisotropy a(1, 3);
  QuadratureOptions o;
  o.tol = 1e-8;
  o.backend = st.range(0) ? QuadratureBackend::Strip : QuadratureBackend::Lens;
  for (auto _ : st) benchmark::DoNotOptimize(monomial_integral_quadrature(a, 2, o));
}
BENCHMARK(BM_DomainIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TimeAverage(benchmark::State& st) {
  const Anisotropy a(1, 3);
  const int n = static_cast<int>(st.range(0));
  const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
  const Operator j = spin_current(n);
  for (auto _ : st) benchmark::DoNotOptimize(time_average(h, j));
}
BENCHMARK(BM_TimeAverage)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LindbladNullSpace(benchmark::State& st) {
  const LindbladSetup s{Anisotropy(1, 3), static_cast<int>(st.range(0)), 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(null_space_steady_state(s));
}
BENCHMARK(BM_LindbladNullSpace)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
