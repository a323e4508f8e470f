#include <benchmark/benchmark.h>

#include "arimat/facering.hpp"
#include "arimat/torsion_poset.hpp"

using namespace arimat;

namespace {

// k generators 2*e_i plus the all-ones vector: every subset contributes
// torsion, so the poset grows quickly with k
Realization dense_example(std::size_t k) {
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> g(k, Int(0));
        g[i] = 2;
        gens.push_back(std::move(g));
    }
    gens.emplace_back(k, Int(1));
    return Realization(k, gens);
}

void bm_build_poset(benchmark::State& state) {
    Realization r = dense_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        TorsionPoset p = build_poset(r);
        benchmark::DoNotOptimize(p);
    }
}

void bm_arithmetic_tutte(benchmark::State& state) {
    Realization r = dense_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        BivariatePoly t = arithmetic_tutte(r);
        benchmark::DoNotOptimize(t);
    }
}

void bm_face_module_hilbert(benchmark::State& state) {
    Realization r = dense_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        HilbertSeries h = face_module_hilbert(r);
        benchmark::DoNotOptimize(h);
    }
}

} // namespace

BENCHMARK(bm_build_poset)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(bm_arithmetic_tutte)->Arg(2)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(bm_face_module_hilbert)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
