#include <doctest.h>

#include "oracles.hh"

#include <ecswitch/errors.hh>
#include <ecswitch/graph.hh>
#include <ecswitch/graph_io.hh>
#include <ecswitch/random_graph.hh>
#include <ecswitch/structure.hh>

#include <bitset>

using namespace ecswitch;

namespace
{
    auto cycle_graph(int m, std::vector<Colour> colours) -> EdgeColouredGraph
    {
        int n = static_cast<int>(colours.size());
        std::vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.push_back(Edge{i, (i + 1) % n, colours[i]});
        return EdgeColouredGraph{m, n, edges};
    }

    auto complete_graph(int m, int n, Colour c = 1) -> EdgeColouredGraph
    {
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.push_back(Edge{u, v, c});
        return EdgeColouredGraph{m, n, edges};
    }

    auto colours_of(const EdgeColouredGraph & g) -> std::vector<Colour>
    {
        return g.signature();
    }

    using EdgeSet = std::bitset<64>;

    // simple cycles as edge sets, each found once from its least vertex
    auto all_cycles(const EdgeColouredGraph & g) -> std::set<unsigned long long>
    {
        std::set<unsigned long long> cycles;
        std::vector<bool> on_path(g.order(), false);
        std::function<void (Vertex, Vertex, EdgeSet, int)> walk = [&] (Vertex start, Vertex v, EdgeSet used, int length) {
            for (auto idx : g.incident(v)) {
                auto & e = g.edge(idx);
                auto w = e.u == v ? e.v : e.u;
                if (used[idx] || w < start)
                    continue;
                auto next = used;
                next.set(idx);
                if (w == start) {
                    if (length + 1 >= 3)
                        cycles.insert(next.to_ullong());
                }
                else if (! on_path[w]) {
                    on_path[w] = true;
                    walk(start, w, next, length + 1);
                    on_path[w] = false;
                }
            }
        };
        for (Vertex s = 0 ; s < g.order() ; ++s) {
            on_path[s] = true;
            walk(s, s, EdgeSet{}, 0);
            on_path[s] = false;
        }
        return cycles;
    }

    auto in_span(std::vector<EdgeSet> basis, EdgeSet target) -> bool
    {
        // reduce target by Gaussian elimination over GF(2)
        for (std::size_t bit = 0 ; bit < 64 ; ++bit) {
            auto pivot = std::find_if(basis.begin(), basis.end(), [&] (const EdgeSet & b) { return b[bit]; });
            if (pivot == basis.end())
                continue;
            auto p = *pivot;
            basis.erase(pivot);
            for (auto & b : basis)
                if (b[bit])
                    b ^= p;
            if (target[bit])
                target ^= p;
        }
        return target.none();
    }
}

TEST_CASE("graph construction normalises and validates")
{
    EdgeColouredGraph g{3, 3, {{2, 0, 1}, {1, 0, 2}}};
    CHECK(g.edge(0) == Edge{0, 1, 2});
    CHECK(g.edge(1) == Edge{0, 2, 1});
    CHECK(g.colour(2, 0) == 1);
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {{0, 0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {{0, 2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {{0, 1, 4}}), InvalidArgument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {{0, 1, 1}, {1, 0, 2}}), InvalidArgument);
}

TEST_CASE("edges of a colour partition the edge set")
{
    EdgeColouredGraph tri{3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}};
    CHECK(edges_of_colour(tri, 2).size() == 1);
    CHECK(edges_of_colour(complete_graph(3, 3), 2).empty());
    CHECK_THROWS_AS(edges_of_colour(tri, 4), InvalidArgument);

    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto g = random_graph(6, trial % 16, 4, rng);
        std::size_t total = 0;
        for (Colour i = 1 ; i <= 4 ; ++i) {
            for (auto & e : edges_of_colour(g, i))
                CHECK(e.colour == i);
            total += edges_of_colour(g, i).size();
        }
        CHECK(total == g.size());
    }
}

TEST_CASE("monochromatic examples")
{
    CHECK(is_monochromatic(complete_graph(3, 3), 1));
    CHECK_FALSE(is_monochromatic(EdgeColouredGraph{3, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}}}, 1));
    CHECK(is_monochromatic(EdgeColouredGraph{3, 3, {}}, 2));
}

TEST_CASE("underlying isomorphism examples")
{
    CHECK(underlying_isomorphism(complete_graph(3, 3), complete_graph(2, 3, 2)).has_value());
    EdgeColouredGraph path{1, 3, {{0, 1, 1}, {1, 2, 1}}};
    CHECK_FALSE(underlying_isomorphism(complete_graph(1, 3), path));

    auto c6 = cycle_graph(1, {1, 1, 1, 1, 1, 1});
    EdgeColouredGraph two_triangles{1, 6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}}};
    CHECK_FALSE(underlying_isomorphism(c6, two_triangles));
    CHECK(oracles::brute_isomorphisms(c6, two_triangles, false).empty());

    CHECK_THROWS_AS(underlying_isomorphism(EdgeColouredGraph{1, 40, {}}, EdgeColouredGraph{1, 40, {}}), CapExceeded);
}

TEST_CASE("isomorphism searches agree with permutation enumeration")
{
    std::mt19937_64 rng(11);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = 1 + trial % 6;
        std::size_t e = std::uniform_int_distribution<std::size_t>(0, n * (n - 1) / 2)(rng);
        auto a = random_graph(n, e, 2, rng);
        // half the time a relabelled copy, so yes answers occur
        auto b = trial % 2 ? relabel(a, oracles::random_permutation(n, rng)) : random_graph(n, e, 2, rng);
        CAPTURE(serialize_ecg(a));
        CAPTURE(serialize_ecg(b));

        auto phi = underlying_isomorphism(a, b);
        auto brute = oracles::brute_isomorphisms(a, b, false);
        CHECK(phi.has_value() == ! brute.empty());
        if (phi) {
            CHECK(*phi == brute.front());
            auto back = inverse_map(*phi);
            CHECK(std::find(brute.begin(), brute.end(), *phi) != brute.end());
            CHECK(! oracles::brute_isomorphisms(b, a, false).empty());
            for (auto & edge : b.edges())
                CHECK(a.adjacent(back[edge.u], back[edge.v]));
        }

        std::size_t visited = for_each_underlying_isomorphism(a, b, [] (const VertexMap &) { return true; });
        CHECK(visited == brute.size());

        auto coloured = coloured_isomorphism(a, b);
        auto brute_coloured = oracles::brute_isomorphisms(a, b, true);
        CHECK(coloured.has_value() == ! brute_coloured.empty());
        if (coloured)
            CHECK(is_coloured_isomorphism(a, b, *coloured));
    }
}

TEST_CASE("block collapse")
{
    auto c = collapse_blocks(cycle_graph(4, {1, 2, 3, 4}));
    CHECK(c.colours() == 2);
    CHECK(colours_of(c) == colours_of(cycle_graph(2, {1, 2, 1, 2})));

    auto two = cycle_graph(2, {1, 2, 2, 1});
    CHECK(collapse_blocks(two) == two);

    EdgeColouredGraph five{6, 2, {{0, 1, 5}}};
    CHECK(collapse_blocks(five).edge(0).colour == 1);
    CHECK_THROWS_AS(collapse_blocks(complete_graph(3, 3)), InvalidArgument);

    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = random_graph(6, trial % 16, 6, rng);
        auto p = oracles::random_permutation(6, rng);
        CHECK(collapse_blocks(relabel(g, p)) == relabel(collapse_blocks(g), p));
    }
}

TEST_CASE("bipartiteness")
{
    CHECK(is_bipartite(cycle_graph(1, {1, 1, 1, 1})));
    CHECK_FALSE(is_bipartite(cycle_graph(1, {1, 1, 1, 1, 1})));
    CHECK(is_bipartite(EdgeColouredGraph{1, 4, {}}));

    EdgeColouredGraph forest{1, 5, {{1, 3, 1}, {2, 3, 1}}};
    auto sides = bipartition(forest);
    REQUIRE(sides);
    CHECK((*sides)[0] == 0);
    CHECK((*sides)[1] == 0);
    CHECK((*sides)[3] == 1);
    CHECK((*sides)[2] == 0);
    CHECK(connected_components(forest) == std::vector<int>{0, 1, 1, 1, 2});
}

TEST_CASE("cycle basis")
{
    EdgeColouredGraph tree{1, 4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}}};
    CHECK(cycle_basis(tree).empty());
    auto k3 = cycle_basis(complete_graph(1, 3));
    REQUIRE(k3.size() == 1);
    CHECK(k3.front().size() == 3);
    CHECK(cycle_basis(complete_graph(1, 4)).size() == 3);
}

TEST_CASE("cycle basis spans every cycle on small graphs")
{
    std::vector<EdgeColouredGraph> graphs;
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & g : oracles::unlabelled_graphs(n, false))
            graphs.push_back(g);
    std::mt19937_64 rng(17);
    for (int trial = 0 ; trial < 300 ; ++trial)
        graphs.push_back(random_graph(6, std::uniform_int_distribution<std::size_t>(0, 15)(rng), 1, rng));

    for (auto & g : graphs) {
        CAPTURE(serialize_ecg(g));
        auto basis = cycle_basis(g);
        auto components = connected_components(g);
        int count = components.empty() ? 0 : *std::max_element(components.begin(), components.end()) + 1;
        CHECK(basis.size() == g.size() - g.order() + count);

        std::vector<EdgeSet> rows;
        for (auto & cycle : basis) {
            EdgeSet row;
            for (auto idx : cycle)
                row.set(idx);
            rows.push_back(row);
        }
        for (auto cycle : all_cycles(g))
            CHECK(in_span(rows, EdgeSet{cycle}));
    }
}

TEST_CASE("underlying k-colouring matches enumeration")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & g : oracles::unlabelled_graphs(n, false))
            for (int k = 1 ; k <= 4 ; ++k) {
                auto colouring = underlying_colouring(g, k);
                CHECK(colouring.has_value() == oracles::plain_colourable(g, k));
                if (colouring)
                    for (auto & e : g.edges()) {
                        CHECK((*colouring)[e.u] != (*colouring)[e.v]);
                        CHECK((*colouring)[e.u] < k);
                    }
            }
}

TEST_CASE("pull back and homomorphism checks")
{
    auto k3 = EdgeColouredGraph{3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}};
    auto path = EdgeColouredGraph{3, 3, {{0, 1, 1}, {1, 2, 1}}};
    CHECK(pull_back_signature(path, k3, {0, 1, 2}) == std::vector<Colour>{1, 3});
    CHECK_FALSE(pull_back_signature(path, k3, {0, 0, 2}));
    CHECK(is_homomorphism(EdgeColouredGraph{3, 3, {{0, 1, 1}, {1, 2, 1}}}, EdgeColouredGraph{3, 2, {{0, 1, 1}}}, {0, 1, 0}));
    CHECK_FALSE(is_homomorphism(path, EdgeColouredGraph{3, 2, {{0, 1, 2}}}, {0, 1, 0}));
}

TEST_CASE(".ecg parsing")
{
    auto g = parse_ecg("m 3\nvertices 2\nedge 0 1 2\n");
    CHECK(g.colours() == 3);
    CHECK(g.order() == 2);
    CHECK(g.edge(0) == Edge{0, 1, 2});

    auto commented = parse_ecg("# a graph\n\nm 2   # colours\nvertices 3\n\nedge 1 2 1\nedge 0 1 2\n");
    CHECK(serialize_ecg(commented) == "m 2\nvertices 3\nedge 0 1 2\nedge 1 2 1\n");

    auto line_of = [] (const char * text) -> std::size_t {
        try {
            parse_ecg(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("m 3\nvertices 2\nedge 0 0 1\n") == 3);
    CHECK(line_of("m 3\nvertices 2\nedge 0 1 4\n") == 3);
    CHECK(line_of("m 3\nvertices 3\nedge 0 1 1\n# x\nedge 0 1 2\n") == 5);
    CHECK(line_of("m 3\nvertices 3\nedge 2 1 1\n") == 3);
    CHECK(line_of("m 3\nvertices 3\nedge 0 5 1\n") == 3);
    CHECK(line_of("vertices 3\nm 3\n") == 1);
    CHECK(line_of("m 3\nvertices 3\nedge 0 1\n") == 3);
    CHECK(line_of("m 3\nvertices 3\nedge 0 1 1 9\n") == 3);
    CHECK(line_of("m x\n") == 1);
    CHECK_THROWS_AS(parse_ecg(""), ParseError);
}

TEST_CASE(".ecg round trip on random graphs")
{
    std::mt19937_64 rng(99);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int n = trial % 9;
        std::size_t e = std::uniform_int_distribution<std::size_t>(0, n * (n - 1) / 2)(rng);
        auto g = random_graph(n, e, 1 + trial % 5, rng);
        auto text = serialize_ecg(g);
        CHECK(parse_ecg(text) == g);
        CHECK(serialize_ecg(parse_ecg(text)) == text);
    }
}

TEST_CASE("random graphs are deterministic per seed")
{
    CHECK(random_graph(5, 6, 4, std::uint64_t{1}) == random_graph(5, 6, 4, std::uint64_t{1}));
    CHECK(random_graph(5, 10, 4, std::uint64_t{2}).size() == 10);
    CHECK(random_graph(1, 0, 2, std::uint64_t{2}).order() == 1);
    CHECK_THROWS_AS(random_graph(3, 4, 2, std::uint64_t{1}), InvalidArgument);
}
