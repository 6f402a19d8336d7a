#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "gbi/correlation.hpp"
#include "gbi/gbi.hpp"
#include "gbi/lhv.hpp"
#include "gbi/linalg.hpp"

namespace {

constexpr double pi = std::numbers::pi;

std::vector<gbi::Direction> directions(int count, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::vector<gbi::Direction> dirs;
    dirs.reserve(count);
    for (int i = 0; i < count; ++i)
        dirs.emplace_back(pi * gbi::uniform01(g), 2.0 * pi * gbi::uniform01(g));
    return dirs;
}

gbi::ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    gbi::ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = gbi::cplx(gbi::uniform01(g), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const gbi::cplx z(gbi::uniform01(g) - 0.5, gbi::uniform01(g) - 0.5);
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

void BM_RestrictedCorrelation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto cat = gbi::make_cat_state(n, gbi::HalfInteger(3), pi / 3, pi / 5);
    const auto dirs = directions(n, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gbi::correlate(cat, dirs, gbi::MeasurementMode::RestrictedSCS));
}
BENCHMARK(BM_RestrictedCorrelation)->DenseRange(2, 6);

void BM_FullCorrelation(benchmark::State& state) {
    const int twice = static_cast<int>(state.range(0));
    const auto cat = gbi::make_cat_state(3, gbi::HalfInteger(twice), pi / 3, pi / 5);
    const auto dirs = directions(3, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(gbi::correlate(cat, dirs, gbi::MeasurementMode::Full));
}
BENCHMARK(BM_FullCorrelation)->Arg(1)->Arg(3)->Arg(5);

void BM_EvaluateInequality(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto cat = gbi::make_cat_state(n, gbi::HalfInteger(1), pi / 4, pi / 4);
    const gbi::DirectionSet ds(n, directions(2 * n - 1, 13));
    for (auto _ : state)
        benchmark::DoNotOptimize(gbi::evaluate_gbi(cat, ds, gbi::MeasurementMode::RestrictedSCS,
                                                   gbi::Functional::ScaledQuantum));
}
BENCHMARK(BM_EvaluateInequality)->Arg(3)->Arg(4);

void BM_HermitianEigen(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto m = random_hermitian(dim, 14);
    for (auto _ : state) benchmark::DoNotOptimize(gbi::hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
