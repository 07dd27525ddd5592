#include <ecswitch/errors.hh>
#include <ecswitch/graph.hh>

#include <algorithm>

using namespace ecswitch;

using std::optional;
using std::span;
using std::string;
using std::vector;

EdgeColouredGraph::EdgeColouredGraph(int m, int n, vector<Edge> edges) :
    _colours(m),
    _order(n),
    _edges(std::move(edges)),
    _incident(n < 0 ? 0 : n)
{
    if (m < 1)
        throw InvalidArgument("colour count must be positive, got " + std::to_string(m));
    if (n < 0)
        throw InvalidArgument("vertex count must be non-negative, got " + std::to_string(n));

    for (auto & e : _edges) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v)
                    + " has a vertex outside 0.." + std::to_string(n - 1));
        if (e.u == e.v)
            throw InvalidArgument("loop at vertex " + std::to_string(e.u));
        if (e.colour < 1 || e.colour > m)
            throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " has colour "
                    + std::to_string(e.colour) + " outside 1.." + std::to_string(m));
    }

    std::sort(_edges.begin(), _edges.end());
    for (std::size_t t = 1 ; t < _edges.size() ; ++t)
        if (_edges[t].u == _edges[t - 1].u && _edges[t].v == _edges[t - 1].v)
            throw InvalidArgument("duplicate edge " + std::to_string(_edges[t].u) + " " + std::to_string(_edges[t].v));

    for (std::size_t t = 0 ; t < _edges.size() ; ++t) {
        _incident[_edges[t].u].push_back(t);
        _incident[_edges[t].v].push_back(t);
    }
}

auto EdgeColouredGraph::edge_index(Vertex u, Vertex v) const -> optional<std::size_t>
{
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(_edges.begin(), _edges.end(), std::pair{u, v},
            [] (const Edge & e, const std::pair<Vertex, Vertex> & key) {
                return std::pair{e.u, e.v} < key;
            });
    if (it == _edges.end() || it->u != u || it->v != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - _edges.begin());
}

auto EdgeColouredGraph::colour(Vertex u, Vertex v) const -> optional<Colour>
{
    if (auto idx = edge_index(u, v))
        return _edges[*idx].colour;
    return std::nullopt;
}

auto EdgeColouredGraph::signature() const -> vector<Colour>
{
    vector<Colour> result;
    result.reserve(_edges.size());
    for (auto & e : _edges)
        result.push_back(e.colour);
    return result;
}

auto EdgeColouredGraph::with_signature(span<const Colour> signature) const -> EdgeColouredGraph
{
    if (signature.size() != _edges.size())
        throw InvalidArgument("signature has " + std::to_string(signature.size()) + " entries for "
                + std::to_string(_edges.size()) + " edges");
    auto edges = _edges;
    for (std::size_t t = 0 ; t < edges.size() ; ++t)
        edges[t].colour = signature[t];
    return EdgeColouredGraph{_colours, _order, std::move(edges)};
}

auto EdgeColouredGraph::with_colours(int m) const -> EdgeColouredGraph
{
    return EdgeColouredGraph{m, _order, _edges};
}

auto EdgeColouredGraph::same_underlying(const EdgeColouredGraph & other) const -> bool
{
    if (_order != other._order || _edges.size() != other._edges.size())
        return false;
    for (std::size_t t = 0 ; t < _edges.size() ; ++t)
        if (_edges[t].u != other._edges[t].u || _edges[t].v != other._edges[t].v)
            return false;
    return true;
}

auto EdgeColouredGraph::operator== (const EdgeColouredGraph & other) const -> bool
{
    return _colours == other._colours && _order == other._order && _edges == other._edges;
}

auto ecswitch::monochromatic_copy(const EdgeColouredGraph & g, Colour j) -> EdgeColouredGraph
{
    return g.with_signature(vector<Colour>(g.size(), j));
}

auto ecswitch::underlying(const EdgeColouredGraph & g) -> EdgeColouredGraph
{
    auto edges = vector<Edge>(g.edges().begin(), g.edges().end());
    for (auto & e : edges)
        e.colour = 1;
    return EdgeColouredGraph{1, g.order(), std::move(edges)};
}

auto ecswitch::edges_of_colour(const EdgeColouredGraph & g, Colour i) -> vector<Edge>
{
    if (i < 1 || i > g.colours())
        throw InvalidArgument("colour " + std::to_string(i) + " outside 1.." + std::to_string(g.colours()));
    vector<Edge> result;
    for (auto & e : g.edges())
        if (e.colour == i)
            result.push_back(e);
    return result;
}

auto ecswitch::is_monochromatic(const EdgeColouredGraph & g, Colour j) -> bool
{
    return std::all_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) { return e.colour == j; });
}

auto ecswitch::relabel(const EdgeColouredGraph & g, const VertexMap & map) -> EdgeColouredGraph
{
    if (map.size() != static_cast<std::size_t>(g.order()))
        throw InvalidArgument("vertex map has the wrong length");
    vector<Edge> edges;
    edges.reserve(g.size());
    for (auto & e : g.edges())
        edges.push_back(Edge{map[e.u], map[e.v], e.colour});
    return EdgeColouredGraph{g.colours(), g.order(), std::move(edges)};
}

auto ecswitch::pull_back_signature(const EdgeColouredGraph & a, const EdgeColouredGraph & b, const VertexMap & map)
    -> optional<vector<Colour>>
{
    vector<Colour> result;
    result.reserve(a.size());
    for (auto & e : a.edges()) {
        auto c = b.colour(map[e.u], map[e.v]);
        if (! c)
            return std::nullopt;
        result.push_back(*c);
    }
    return result;
}

auto ecswitch::is_homomorphism(const EdgeColouredGraph & source, const EdgeColouredGraph & target, const VertexMap & map) -> bool
{
    if (map.size() != static_cast<std::size_t>(source.order()))
        return false;
    for (auto v : map)
        if (v < 0 || v >= target.order())
            return false;
    for (auto & e : source.edges()) {
        auto c = target.colour(map[e.u], map[e.v]);
        if (! c || *c != e.colour)
            return false;
    }
    return true;
}

auto ecswitch::is_coloured_isomorphism(const EdgeColouredGraph & source, const EdgeColouredGraph & target, const VertexMap & map) -> bool
{
    if (source.order() != target.order() || source.size() != target.size())
        return false;
    vector<bool> hit(target.order(), false);
    for (auto v : map) {
        if (v < 0 || v >= target.order() || hit[v])
            return false;
        hit[v] = true;
    }
    return is_homomorphism(source, target, map);
}

auto ecswitch::inverse_map(const VertexMap & bijection) -> VertexMap
{
    VertexMap result(bijection.size(), -1);
    for (std::size_t v = 0 ; v < bijection.size() ; ++v) {
        auto w = bijection[v];
        if (w < 0 || static_cast<std::size_t>(w) >= bijection.size() || result[w] != -1)
            throw InvalidArgument("vertex map is not a bijection");
        result[w] = static_cast<Vertex>(v);
    }
    return result;
}
