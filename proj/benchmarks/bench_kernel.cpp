// Cost of the quadrature-backed quantities: the retarded kernel, the
// dissipation-identity residuals, and the spectral observables. These set
// the wall time of `fluctem fdt-check` and `fluctem spectrum`.

#include <benchmark/benchmark.h>

#include "fluctem/fdt.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/observables.hpp"
#include "fluctem/symmetry.hpp"

namespace {

using namespace fluctem;

const FresnelHalfSpace kMetal{DrudeDispersion{9.0, 0.035}};

void BM_ModeSpectralMatrix(benchmark::State& state) {
    const Mode mode = make_mode(1.0, {1.4, -0.2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mode_spectral_matrix(kMetal, mode, {0.8}, -0.35));
    }
}
BENCHMARK(BM_ModeSpectralMatrix);

void BM_ModewiseResidual(benchmark::State& state) {
    const Mode mode = make_mode(1.0, {1.4, -0.2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fdt_residual_modewise(kMetal, mode, {0.8}, -0.35));
    }
}
BENCHMARK(BM_ModewiseResidual);

void BM_RetardedKernel_Coincidence(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            retarded_kernel(kMetal, 1.0, {0.0, 0.0}, -0.35));
    }
}
BENCHMARK(BM_RetardedKernel_Coincidence);

void BM_RetardedKernel_Lateral(benchmark::State& state) {
    // a lateral offset makes the azimuthal integral non-trivial
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            retarded_kernel(kMetal, 1.0, {0.5, -0.3}, -0.35));
    }
}
BENCHMARK(BM_RetardedKernel_Lateral);

void BM_RealspaceResidual(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fdt_residual_realspace(kMetal, 1.0, {0.5, -0.3}, -0.35, {0.8}));
    }
}
BENCHMARK(BM_RealspaceResidual);

void BM_EnergyDensitySpectrum(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            energy_density_spectrum(kMetal, 1.0, -0.1, {1.0}));
    }
}
BENCHMARK(BM_EnergyDensitySpectrum);

void BM_HemisphericalEmissivity(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hemispherical_emissivity(kMetal, 1.0));
    }
}
BENCHMARK(BM_HemisphericalEmissivity);

void BM_OnsagerCheck(benchmark::State& state) {
    const auto samples = default_kperp_samples(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(onsager_check(kMetal, {1.0}, samples, 1e-10));
    }
}
BENCHMARK(BM_OnsagerCheck);

} // namespace

BENCHMARK_MAIN();
