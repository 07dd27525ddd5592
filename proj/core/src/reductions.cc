#include <ecswitch/errors.hh>
#include <ecswitch/reductions.hh>

using namespace ecswitch;

auto ecswitch::build_kcol_reduction(const EdgeColouredGraph & g, int k, int m, Colour j) -> EdgeColouredGraph
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    if (j < 1 || j > m)
        throw InvalidArgument("colour " + std::to_string(j) + " is outside 1.." + std::to_string(m));

    std::vector<Edge> edges;
    for (auto & e : g.edges())
        edges.push_back(Edge{e.u, e.v, j});
    auto n = g.order();
    for (int a = 0 ; a < k ; ++a)
        for (int b = a + 1 ; b < k ; ++b)
            edges.push_back(Edge{n + a, n + b, j});
    return EdgeColouredGraph{m, n + k, std::move(edges)};
}

auto ecswitch::build_hom_reduction(const EdgeColouredGraph & f, int m) -> EdgeColouredGraph
{
    if (m < 2 || m % 2 != 0)
        throw InvalidArgument("hom reduction needs an even colour count, got " + std::to_string(m));
    if (f.colours() != 2)
        throw DegreeMismatch("hom reduction needs a 2-edge-coloured graph");
    return f.with_colours(m);
}
