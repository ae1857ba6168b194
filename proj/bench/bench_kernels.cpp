// Serial reference vs OpenMP kernels. Argument 0 selects the serial path.

#include <benchmark/benchmark.h>

#include "agraph/borel.hpp"
#include "agraph/graph.hpp"

namespace {

agraph::ExecPolicy policy_of(const benchmark::State& state) {
    return state.range(0) == 0 ? agraph::ExecPolicy::Serial : agraph::ExecPolicy::Parallel;
}

void BM_Enumerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto d = static_cast<std::size_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(agraph::enumerate_borel_fixed(n, d, policy_of(state)));
}

void BM_TreeFull(benchmark::State& state) {
    agraph::BuildOptions opt;
    opt.policy = policy_of(state);
    opt.verify_level = agraph::VerifyLevel::Full;
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto d = static_cast<std::size_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(agraph::build_spanning_tree(n, d, opt));
}

}  // namespace

BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1}, {3}, {8}})->ArgsProduct({{0, 1}, {4}, {7}});
BENCHMARK(BM_TreeFull)->ArgsProduct({{0, 1}, {3}, {7}})->ArgsProduct({{0, 1}, {4}, {5}});

BENCHMARK_MAIN();
