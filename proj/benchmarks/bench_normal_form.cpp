#include <random>

#include <benchmark/benchmark.h>

#include "arimat/normal_form.hpp"

using namespace arimat;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int span, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-span, span);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

void bm_hermite(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(n, n, 9, 7u + static_cast<unsigned>(n));
    for (auto _ : state) {
        IntMatrix h = hermite_normal_form(m);
        benchmark::DoNotOptimize(h);
    }
}

void bm_smith(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(n, n, 9, 11u + static_cast<unsigned>(n));
    for (auto _ : state) {
        SmithDecomposition s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.d);
    }
}

} // namespace

BENCHMARK(bm_hermite)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_smith)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
