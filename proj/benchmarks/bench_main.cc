#include <ecswitch/equivalence.hh>
#include <ecswitch/group_spec.hh>
#include <ecswitch/homomorphism.hh>
#include <ecswitch/oracle.hh>
#include <ecswitch/perm_group.hh>
#include <ecswitch/random_graph.hh>
#include <ecswitch/switching.hh>

#include <benchmark/benchmark.h>

using namespace ecswitch;

namespace
{
    void closure_symmetric(benchmark::State & state)
    {
        int m = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(make_named(GroupKind::Symmetric, m).order());
    }
    BENCHMARK(closure_symmetric)->DenseRange(3, 7);

    void oracle_class_z4(benchmark::State & state)
    {
        auto group = parse_group_spec("Z4");
        auto g = random_graph(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(0)) + 2, 4, 11);
        for (auto _ : state)
            benchmark::DoNotOptimize(reachable_signatures(g, group).size());
    }
    BENCHMARK(oracle_class_z4)->DenseRange(4, 8, 2);

    void equivalence_fast_path(benchmark::State & state)
    {
        auto group = parse_group_spec("S4");
        auto g = random_graph(static_cast<int>(state.range(0)), 2 * static_cast<std::size_t>(state.range(0)), 4, 5);
        auto h = apply_sequence(g, monochromatize_sequence(g, 2, group));
        for (auto _ : state)
            benchmark::DoNotOptimize(switch_equivalent(g, h, group).verdict);
    }
    BENCHMARK(equivalence_fast_path)->RangeMultiplier(2)->Range(8, 32);

    void s2_parity(benchmark::State & state)
    {
        auto n = static_cast<int>(state.range(0));
        auto g = random_graph(n, 3 * static_cast<std::size_t>(n), 2, 7);
        auto h = g.with_signature(std::vector<Colour>(g.size(), 1));
        for (auto _ : state)
            benchmark::DoNotOptimize(s2_equivalent_labelled(g, h).verdict);
    }
    BENCHMARK(s2_parity)->RangeMultiplier(4)->Range(16, 1024);

    void switchable_kcol_d4(benchmark::State & state)
    {
        auto group = parse_group_spec("D4");
        auto g = random_graph(static_cast<int>(state.range(0)), 2 * static_cast<std::size_t>(state.range(0)), 4, 3);
        for (auto _ : state)
            benchmark::DoNotOptimize(switchable_k_colouring(g, 2, group).verdict);
    }
    BENCHMARK(switchable_kcol_d4)->DenseRange(6, 12, 2);
}
BENCHMARK_MAIN();
