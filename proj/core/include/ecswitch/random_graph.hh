#ifndef ECSWITCH_RANDOM_GRAPH_HH
#define ECSWITCH_RANDOM_GRAPH_HH

#include <ecswitch/graph.hh>

#include <cstdint>
#include <random>

namespace ecswitch
{
    /// Uniform simple graph on n vertices with exactly e edges, each edge
    /// coloured uniformly from 1..m. Throws InvalidArgument if e > n(n-1)/2.
    auto random_graph(int n, std::size_t e, int m, std::mt19937_64 & rng) -> EdgeColouredGraph;

    /// Same, seeded: identical output for identical arguments.
    auto random_graph(int n, std::size_t e, int m, std::uint64_t seed) -> EdgeColouredGraph;
}

#endif
