#include <benchmark/benchmark.h>

#include "eic/gen.hpp"
#include "eic/gf2.hpp"
#include "eic/minrank.hpp"
#include "eic/solve.hpp"

namespace {

eic::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    eic::Xoshiro256 rng(seed);
    eic::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next() & 1u) m.set(r, c, true);
    return m;
}

void BM_rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const eic::BitMatrix m = random_matrix(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(eic::rank(m));
}
BENCHMARK(BM_rank)->Arg(16)->Arg(64)->Arg(256);

void BM_restricted_minrank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const eic::EicProblem p = eic::gen_erdos_renyi_single_unicast({n, 0.5, 7});
    for (auto _ : state) benchmark::DoNotOptimize(eic::restricted_minrank(p).rank);
}
BENCHMARK(BM_restricted_minrank)->Arg(4)->Arg(6)->Arg(8);

void BM_solve_task_based(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const eic::EicProblem p = eic::gen_erdos_renyi_single_unicast({n, 0.5, 7});
    for (auto _ : state) benchmark::DoNotOptimize(eic::solve_task_based(p).length());
}
BENCHMARK(BM_solve_task_based)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
