#include <benchmark/benchmark.h>

#include <cmath>

#include "fermidec/fermidec.hpp"

using namespace fermidec;

namespace {

AngMomState caption_state() {
    Vector6 v;
    v << std::sqrt(0.1), 0.0, std::sqrt(0.8), 0.0, 0.0, std::sqrt(0.1);
    return make_state(v);
}

DensityMatrix6 mixed_state() {
    SplitMix64 rng = rng_stream(17, 0);
    Matrix6 rho = Matrix6::Zero();
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        Vector6 v;
        for (int i = 0; i < 6; ++i) {
            double re = 0.0, im = 0.0;
            rng.normal_pair(re, im);
            v(i) = Complex(re, im);
        }
        const AngMomState psi = make_state(v);
        const double w = rng.uniform();
        rho += w * (psi.alpha * psi.alpha.adjoint());
        total += w;
    }
    return DensityMatrix6{Matrix6(rho / total), BasisTag::AngMom};
}

void BM_GammaQuadrature(benchmark::State& state) {
    const BathParams params = BathParams::thermal(8.0, 10.0);
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_of_t(t, params));
    }
}
BENCHMARK(BM_GammaQuadrature)->Arg(1)->Arg(10)->Arg(30);

void BM_EvolveAndMeasure(benchmark::State& state) {
    const DensityMatrix6 rho0 = density_from_pure(caption_state());
    const BathParams params = BathParams::thermal(8.0, 1.0);
    const BathFunctions bf = bath_functions(2.0, params);
    for (auto _ : state) {
        const DensityMatrix6 rho = evolve(rho0, bf);
        benchmark::DoNotOptimize(concurrence(rho).value);
        benchmark::DoNotOptimize(coherence(rho));
        benchmark::DoNotOptimize(von_neumann_entropy(rho));
    }
}
BENCHMARK(BM_EvolveAndMeasure);

void BM_MixedConcurrence(benchmark::State& state) {
    const DensityMatrix6 rho = mixed_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence(rho).value);
    }
}
BENCHMARK(BM_MixedConcurrence);

void BM_DephasingSeries(benchmark::State& state) {
    const DensityMatrix6 rho0 = density_from_pure(caption_state());
    const BathParams params = BathParams::thermal(8.0, 1.0);
    TimeGrid grid;
    grid.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephasing_series(rho0, grid, params));
    }
}
BENCHMARK(BM_DephasingSeries)->Arg(50)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Atlas(benchmark::State& state) {
    SamplerConfig config;
    config.n_samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_atlas(config));
    }
}
BENCHMARK(BM_Atlas)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
