// Per-mode cost of each reflection model. These are the innermost calls of
// every quadrature loop, so a regression here multiplies through the whole
// library.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fluctem/kinematics.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/reflection_table.hpp"

namespace {

using namespace fluctem;

const Mode kPw = make_mode(1.0, {0.6, 0.3});
const Mode kEw = make_mode(1.0, {1.4, -0.2});

template <class Provider>
void run_reflection(benchmark::State& state, const Provider& provider,
                    const Mode& mode) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(provider.reflection(mode));
    }
}

void BM_FresnelDrude_PW(benchmark::State& state) {
    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    run_reflection(state, metal, kPw);
}
BENCHMARK(BM_FresnelDrude_PW);

void BM_FresnelDrude_EW(benchmark::State& state) {
    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    run_reflection(state, metal, kEw);
}
BENCHMARK(BM_FresnelDrude_EW);

void BM_Multilayer(benchmark::State& state) {
    std::vector<LayerSpec> layers;
    for (int i = 0; i < state.range(0); ++i)
        layers.push_back({ConstantDispersion{{3.0 + 0.1 * i, 0.4}},
                          ConstantDispersion{}, 0.3});
    const Multilayer stack{layers, ConstantDispersion{{6.0, 1.0}}};
    run_reflection(state, stack, kPw);
}
BENCHMARK(BM_Multilayer)->Arg(1)->Arg(4)->Arg(16);

void BM_FedorovChiral(benchmark::State& state) {
    const FedorovChiral chiral{ConstantDispersion{{2.25, 0.3}},
                               ConstantDispersion{}, 0.05};
    run_reflection(state, chiral, kPw);
}
BENCHMARK(BM_FedorovChiral);

void BM_DrudeBornChiral(benchmark::State& state) {
    const DrudeBornChiral chiral{ConstantDispersion{{2.25, 0.1}}, 0.3};
    run_reflection(state, chiral, kPw);
}
BENCHMARK(BM_DrudeBornChiral);

void BM_TabulatedLookup(benchmark::State& state) {
    // synthetic smooth table, dense enough that interpolation dominates
    ReflectionTable table;
    const int n_omega = 64, n_kperp = 64;
    for (int i = 0; i < n_omega; ++i) table.omega.push_back(0.5 + 0.02 * i);
    for (int j = 0; j < n_kperp; ++j) table.kperp.push_back(0.05 * (j + 1));
    for (int i = 0; i < n_omega; ++i)
        for (int j = 0; j < n_kperp; ++j) {
            const double u = table.omega[i] * table.kperp[j];
            table.r[0].push_back({std::cos(u), 0.1 * std::sin(u)});
            table.r[1].push_back({0.01 * u, 0.0});
            table.r[2].push_back({-0.01 * u, 0.0});
            table.r[3].push_back({-std::cos(u), 0.1 * std::sin(u)});
        }
    const TabulatedReflection tab{std::move(table)};
    run_reflection(state, tab, kPw);
}
BENCHMARK(BM_TabulatedLookup);

} // namespace

BENCHMARK_MAIN();
