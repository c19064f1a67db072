#include "ckgeom/ck_solver.hpp"
#include "ckgeom/constructions.hpp"

#include <benchmark/benchmark.h>

using namespace ckgeom;

// Dense truncated product; args are (n, D).
static void BM_JetMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int cap = static_cast<int>(state.range(1));
    const Jet a = random_poly(1, n, cap, cap, 5);
    const Jet b = random_poly(2, n, cap, cap, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.counters["monomials"] = static_cast<double>(a.layout().size());
}
BENCHMARK(BM_JetMul)->Args({2, 8})->Args({3, 6})->Args({4, 6})->Args({6, 6})->Args({6, 8});

static void BM_Reciprocal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int cap = static_cast<int>(state.range(1));
    Jet a = random_poly(3, n, cap, 3, 3);
    a.set_coefficient(0, Rational(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reciprocal(a));
    }
}
BENCHMARK(BM_Reciprocal)->Args({2, 8})->Args({3, 6})->Args({4, 6});

// U_1 = U U_2 + U_3 in three variables.
static void BM_PicardFirstOrder(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    FirstOrderSystem sys{3, cap, {"U"}, {restrict_x1(random_poly(4, 3, cap, 3, 3))},
                         [](std::span<const Jet> u) {
                             return std::vector<Jet>{u[0] * partial(u[0], 1) + partial(u[0], 2)};
                         }};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_first_order(sys));
    }
}
BENCHMARK(BM_PicardFirstOrder)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PrescribedRicciGeneral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int cap = static_cast<int>(state.range(1));
    const Connection c0 = random_connection(5, n, cap, {}, false);
    const Bilinear r = ricci(c0);
    const FreeData fd = extract_prescribed_ricci_data(ConstructionTag::General, c0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_prescribed_ricci_general(r, fd));
    }
}
BENCHMARK(BM_PrescribedRicciGeneral)->Args({2, 4})->Args({3, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_StatisticalNd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int cap = static_cast<int>(state.range(1));
    const FreeData fd = random_free_data(census(ConstructionTag::Statistical, n), 6, cap, {2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_statistical_nd(n, cap, fd));
    }
}
BENCHMARK(BM_StatisticalNd)->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
