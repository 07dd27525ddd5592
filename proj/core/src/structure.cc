#include <ecswitch/errors.hh>
#include <ecswitch/structure.hh>

#include <algorithm>
#include <deque>

using namespace ecswitch;

using std::optional;
using std::vector;

namespace
{
    // entry is 0 for a non-edge, else 1 (uncoloured) or the edge colour
    auto adjacency_matrix(const EdgeColouredGraph & g, bool coloured) -> vector<vector<int>>
    {
        vector<vector<int>> adj(g.order(), vector<int>(g.order(), 0));
        for (auto & e : g.edges())
            adj[e.u][e.v] = adj[e.v][e.u] = coloured ? e.colour : 1;
        return adj;
    }

    auto neighbours(const EdgeColouredGraph & g, Vertex v) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto idx : g.incident(v)) {
            auto & e = g.edge(idx);
            result.push_back(e.u == v ? e.v : e.u);
        }
        return result;
    }

    struct IsomorphismSearch
    {
        const EdgeColouredGraph & a;
        const EdgeColouredGraph & b;
        const std::function<bool (const VertexMap &)> & visit;
        vector<vector<int>> adj_a, adj_b;
        VertexMap map;
        vector<bool> used;
        std::size_t count = 0;

        // returns false to abort the whole search
        auto extend(Vertex v) -> bool
        {
            if (v == a.order()) {
                ++count;
                return visit(map);
            }
            for (Vertex w = 0 ; w < b.order() ; ++w) {
                if (used[w] || a.degree(v) != b.degree(w))
                    continue;
                bool ok = true;
                for (Vertex u = 0 ; u < v && ok ; ++u)
                    ok = adj_a[u][v] == adj_b[map[u]][w];
                if (! ok)
                    continue;
                map[v] = w;
                used[w] = true;
                bool go_on = extend(v + 1);
                used[w] = false;
                if (! go_on)
                    return false;
            }
            return true;
        }
    };

    auto isomorphism_search(const EdgeColouredGraph & a, const EdgeColouredGraph & b, bool coloured,
            const std::function<bool (const VertexMap &)> & visit, int vertex_cap) -> std::size_t
    {
        if (a.order() > vertex_cap || b.order() > vertex_cap)
            throw CapExceeded("isomorphism search limited to " + std::to_string(vertex_cap) + " vertices");

        if (a.order() != b.order() || a.size() != b.size())
            return 0;

        vector<std::size_t> deg_a, deg_b;
        for (Vertex v = 0 ; v < a.order() ; ++v) {
            deg_a.push_back(a.degree(v));
            deg_b.push_back(b.degree(v));
        }
        std::sort(deg_a.begin(), deg_a.end());
        std::sort(deg_b.begin(), deg_b.end());
        if (deg_a != deg_b)
            return 0;

        if (coloured) {
            auto colours_a = a.signature(), colours_b = b.signature();
            std::sort(colours_a.begin(), colours_a.end());
            std::sort(colours_b.begin(), colours_b.end());
            if (colours_a != colours_b)
                return 0;
        }

        IsomorphismSearch search{a, b, visit, adjacency_matrix(a, coloured), adjacency_matrix(b, coloured),
            VertexMap(a.order(), -1), vector<bool>(b.order(), false)};
        search.extend(0);
        return search.count;
    }
}

auto ecswitch::for_each_underlying_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b,
        const std::function<bool (const VertexMap &)> & visit, int vertex_cap) -> std::size_t
{
    return isomorphism_search(a, b, false, visit, vertex_cap);
}

auto ecswitch::coloured_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b, int vertex_cap)
    -> optional<VertexMap>
{
    optional<VertexMap> result;
    isomorphism_search(a, b, true, [&] (const VertexMap & map) {
            result = map;
            return false;
        }, vertex_cap);
    return result;
}

auto ecswitch::underlying_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b, int vertex_cap)
    -> optional<VertexMap>
{
    optional<VertexMap> result;
    for_each_underlying_isomorphism(a, b, [&] (const VertexMap & map) {
            result = map;
            return false;
        }, vertex_cap);
    return result;
}

auto ecswitch::bipartition(const EdgeColouredGraph & g) -> optional<vector<int>>
{
    vector<int> side(g.order(), -1);
    for (Vertex root = 0 ; root < g.order() ; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::deque<Vertex> queue{root};
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : neighbours(g, v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                }
                else if (side[w] == side[v])
                    return std::nullopt;
            }
        }
    }
    return side;
}

auto ecswitch::is_bipartite(const EdgeColouredGraph & g) -> bool
{
    return bipartition(g).has_value();
}

auto ecswitch::spanning_forest(const EdgeColouredGraph & g) -> SpanningForest
{
    SpanningForest forest{
        vector<optional<std::size_t>>(g.order()),
        vector<Vertex>(g.order(), -1),
        vector<int>(g.order(), -1),
        vector<bool>(g.size(), false)};

    for (Vertex root = 0 ; root < g.order() ; ++root) {
        if (forest.depth[root] != -1)
            continue;
        forest.depth[root] = 0;
        std::deque<Vertex> queue{root};
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto idx : g.incident(v)) {
                auto & e = g.edge(idx);
                auto w = e.u == v ? e.v : e.u;
                if (forest.depth[w] != -1)
                    continue;
                forest.depth[w] = forest.depth[v] + 1;
                forest.parent[w] = v;
                forest.parent_edge[w] = idx;
                forest.is_tree_edge[idx] = true;
                queue.push_back(w);
            }
        }
    }
    return forest;
}

auto ecswitch::connected_components(const EdgeColouredGraph & g) -> vector<int>
{
    auto forest = spanning_forest(g);
    vector<int> component(g.order(), -1);
    int next = 0;
    // BFS visits components in order of least vertex, so roots appear in order
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        if (! forest.parent_edge[v])
            component[v] = next++;
        else {
            auto r = v;
            while (forest.parent_edge[r])
                r = forest.parent[r];
            component[v] = component[r];
        }
    }
    return component;
}

auto ecswitch::cycle_basis(const EdgeColouredGraph & g) -> vector<vector<std::size_t>>
{
    auto forest = spanning_forest(g);
    vector<vector<std::size_t>> result;
    for (std::size_t idx = 0 ; idx < g.size() ; ++idx) {
        if (forest.is_tree_edge[idx])
            continue;
        vector<std::size_t> cycle{idx};
        auto x = g.edge(idx).u, y = g.edge(idx).v;
        while (x != y) {
            if (forest.depth[x] >= forest.depth[y]) {
                cycle.push_back(*forest.parent_edge[x]);
                x = forest.parent[x];
            }
            else {
                cycle.push_back(*forest.parent_edge[y]);
                y = forest.parent[y];
            }
        }
        std::sort(cycle.begin(), cycle.end());
        result.push_back(std::move(cycle));
    }
    return result;
}

auto ecswitch::collapse_blocks(const EdgeColouredGraph & g) -> EdgeColouredGraph
{
    if (g.colours() % 2 != 0)
        throw InvalidArgument("block collapse needs an even number of colours, got " + std::to_string(g.colours()));
    vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (auto & e : edges)
        e.colour = e.colour % 2 == 1 ? 1 : 2;
    return EdgeColouredGraph{2, g.order(), std::move(edges)};
}

namespace
{
    auto colour_from(const vector<vector<Vertex>> & nbrs, vector<int> & colour, Vertex v, int k, int used) -> bool
    {
        if (v == static_cast<Vertex>(colour.size()))
            return true;
        for (int c = 0 ; c < std::min(k, used + 1) ; ++c) {
            bool ok = true;
            for (auto w : nbrs[v])
                if (w < v && colour[w] == c) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            colour[v] = c;
            if (colour_from(nbrs, colour, v + 1, k, std::max(used, c + 1)))
                return true;
        }
        colour[v] = -1;
        return false;
    }
}

auto ecswitch::underlying_colouring(const EdgeColouredGraph & g, int k) -> optional<vector<int>>
{
    if (k < 1)
        throw InvalidArgument("number of colours k must be at least 1");
    if (k == 1) {
        if (g.size() != 0)
            return std::nullopt;
        return vector<int>(g.order(), 0);
    }
    if (k == 2)
        return bipartition(g);

    vector<vector<Vertex>> nbrs(g.order());
    for (Vertex v = 0 ; v < g.order() ; ++v)
        nbrs[v] = neighbours(g, v);
    vector<int> colour(g.order(), -1);
    if (colour_from(nbrs, colour, 0, k, 0))
        return colour;
    return std::nullopt;
}
