#ifndef ECSWITCH_STRUCTURE_HH
#define ECSWITCH_STRUCTURE_HH

#include <ecswitch/graph.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ecswitch
{
    inline constexpr int default_isomorphism_vertex_cap = 32;

    /// Finds a bijection V(a) -> V(b) preserving adjacency of the
    /// underlying graphs (colours ignored). Backtracking assigns a's
    /// vertices in index order and tries b's vertices ascending, pruned by
    /// degree and adjacency with earlier choices, so the result is the
    /// lexicographically least isomorphism. Throws CapExceeded when either
    /// graph has more than vertex_cap vertices.
    auto underlying_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b,
            int vertex_cap = default_isomorphism_vertex_cap) -> std::optional<VertexMap>;

    /// Calls visit on every underlying isomorphism a -> b in lexicographic
    /// order until visit returns false. Returns the number visited.
    auto for_each_underlying_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b,
            const std::function<bool (const VertexMap &)> & visit,
            int vertex_cap = default_isomorphism_vertex_cap) -> std::size_t;

    /// Colour-preserving isomorphism a -> b, lexicographically least; the
    /// same search as underlying_isomorphism with colours compared and a
    /// colour-multiset pre-check.
    auto coloured_isomorphism(const EdgeColouredGraph & a, const EdgeColouredGraph & b,
            int vertex_cap = default_isomorphism_vertex_cap) -> std::optional<VertexMap>;

    /// BFS 2-colouring of the underlying graph; side[v] is 0 or 1, and
    /// each component's least vertex is on side 0.
    auto bipartition(const EdgeColouredGraph & g) -> std::optional<std::vector<int>>;

    auto is_bipartite(const EdgeColouredGraph & g) -> bool;

    /// component[v] numbers components 0, 1, ... in order of least vertex.
    auto connected_components(const EdgeColouredGraph & g) -> std::vector<int>;

    /// BFS spanning forest: parent_edge[v] is the tree edge to v's parent,
    /// or nullopt for component roots.
    struct SpanningForest
    {
        std::vector<std::optional<std::size_t>> parent_edge;
        std::vector<Vertex> parent;
        std::vector<int> depth;
        std::vector<bool> is_tree_edge;
    };

    auto spanning_forest(const EdgeColouredGraph & g) -> SpanningForest;

    /// Fundamental cycles of a BFS spanning forest, one per non-tree edge in
    /// edge-index order. Each cycle is a sorted list of edge indices.
    auto cycle_basis(const EdgeColouredGraph & g) -> std::vector<std::vector<std::size_t>>;

    /// The block collapse G_2: colours in {1, 3, ..., m-1} become 1,
    /// colours in {2, 4, ..., m} become 2. Needs even m.
    auto collapse_blocks(const EdgeColouredGraph & g) -> EdgeColouredGraph;

    /// A proper k-colouring of the underlying graph (colours 0..k-1), if
    /// one exists. Bipartite BFS for k <= 2, backtracking otherwise.
    auto underlying_colouring(const EdgeColouredGraph & g, int k) -> std::optional<std::vector<int>>;
}

#endif
