#ifndef ECSWITCH_GRAPH_HH
#define ECSWITCH_GRAPH_HH

#include <ecswitch/permutation.hh>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ecswitch
{
    using Vertex = int;

    struct Edge
    {
        Vertex u;
        Vertex v;
        Colour colour;

        auto operator== (const Edge &) const -> bool = default;
        auto operator<=> (const Edge &) const = default;
    };

    /// A vertex map between two graphs: map[v] is the image of source vertex v.
    using VertexMap = std::vector<Vertex>;

    /**
     * A simple loopless graph on vertices 0..n-1 whose edges carry colours
     * from {1, ..., m}.
     *
     * Edges are stored with u < v, sorted by (u, v); edge indices refer to
     * that order and are stable for every graph sharing the same underlying
     * graph, so a signature (the colour of each edge, by index) fully
     * describes a recolouring.
     */
    class EdgeColouredGraph
    {
        private:
            int _colours;
            int _order;
            std::vector<Edge> _edges;
            std::vector<std::vector<std::size_t>> _incident;

        public:
            /// Normalises each edge to u < v and sorts. Throws InvalidArgument
            /// on a loop, a duplicate pair, a vertex outside 0..n-1, or a
            /// colour outside 1..m.
            EdgeColouredGraph(int m, int n, std::vector<Edge> edges);

            auto colours() const -> int { return _colours; }
            auto order() const -> int { return _order; }
            auto size() const -> std::size_t { return _edges.size(); }

            auto edges() const -> std::span<const Edge> { return _edges; }
            auto edge(std::size_t index) const -> const Edge & { return _edges[index]; }

            /// Indices of edges incident with v, ascending.
            auto incident(Vertex v) const -> std::span<const std::size_t> { return _incident[v]; }
            auto degree(Vertex v) const -> std::size_t { return _incident[v].size(); }

            auto edge_index(Vertex u, Vertex v) const -> std::optional<std::size_t>;
            auto colour(Vertex u, Vertex v) const -> std::optional<Colour>;
            auto adjacent(Vertex u, Vertex v) const -> bool { return edge_index(u, v).has_value(); }

            auto signature() const -> std::vector<Colour>;

            /// Same underlying graph, colours replaced by signature (indexed
            /// like edges()).
            auto with_signature(std::span<const Colour> signature) const -> EdgeColouredGraph;

            /// Same underlying graph with a different colour count.
            auto with_colours(int m) const -> EdgeColouredGraph;

            auto same_underlying(const EdgeColouredGraph & other) const -> bool;

            auto operator== (const EdgeColouredGraph & other) const -> bool;
    };

    /// Every edge recoloured to j; the colour count is kept.
    auto monochromatic_copy(const EdgeColouredGraph & g, Colour j) -> EdgeColouredGraph;

    /// The underlying graph as a 1-edge-coloured graph.
    auto underlying(const EdgeColouredGraph & g) -> EdgeColouredGraph;

    /// Edges of colour i, in edge-index order. Throws InvalidArgument for i outside 1..m.
    auto edges_of_colour(const EdgeColouredGraph & g, Colour i) -> std::vector<Edge>;

    /// Vacuously true for edgeless graphs.
    auto is_monochromatic(const EdgeColouredGraph & g, Colour j) -> bool;

    /// Image of g under a vertex bijection: edge (u, v, c) becomes
    /// (map[u], map[v], c).
    auto relabel(const EdgeColouredGraph & g, const VertexMap & map) -> EdgeColouredGraph;

    /// The signature on a's edges obtained by reading b through map: edge
    /// (u, v) of a gets b's colour on (map[u], map[v]). Returns nullopt if
    /// some image pair is not an edge of b.
    auto pull_back_signature(const EdgeColouredGraph & a, const EdgeColouredGraph & b, const VertexMap & map)
        -> std::optional<std::vector<Colour>>;

    /// map sends every edge of source to an edge of target with the same colour.
    auto is_homomorphism(const EdgeColouredGraph & source, const EdgeColouredGraph & target, const VertexMap & map) -> bool;

    /// map is a bijection and a colour-preserving isomorphism.
    auto is_coloured_isomorphism(const EdgeColouredGraph & source, const EdgeColouredGraph & target, const VertexMap & map) -> bool;

    auto inverse_map(const VertexMap & bijection) -> VertexMap;
}

#endif
