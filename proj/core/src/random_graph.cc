#include <ecswitch/errors.hh>
#include <ecswitch/random_graph.hh>

#include <algorithm>

using namespace ecswitch;

auto ecswitch::random_graph(int n, std::size_t e, int m, std::mt19937_64 & rng) -> EdgeColouredGraph
{
    if (n < 0 || m < 1)
        throw InvalidArgument("need n >= 0 and m >= 1");
    std::vector<Edge> pairs;
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            pairs.push_back(Edge{u, v, 1});
    if (e > pairs.size())
        throw InvalidArgument(std::to_string(e) + " edges do not fit on " + std::to_string(n) + " vertices (at most "
                + std::to_string(pairs.size()) + ")");

    // partial Fisher-Yates with explicit draws, so output does not depend on the standard library's shuffle
    for (std::size_t i = 0 ; i < e ; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pairs.size() - 1);
        std::swap(pairs[i], pairs[pick(rng)]);
    }
    pairs.resize(e);
    std::uniform_int_distribution<int> colour(1, m);
    for (auto & p : pairs)
        p.colour = colour(rng);
    return EdgeColouredGraph{m, n, std::move(pairs)};
}

auto ecswitch::random_graph(int n, std::size_t e, int m, std::uint64_t seed) -> EdgeColouredGraph
{
    std::mt19937_64 rng(seed);
    return random_graph(n, e, m, rng);
}
