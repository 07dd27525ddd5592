#ifndef ECSWITCH_REDUCTIONS_HH
#define ECSWITCH_REDUCTIONS_HH

#include <ecswitch/graph.hh>

namespace ecswitch
{
    /// Disjoint union of g's underlying graph with K_k on vertices
    /// n..n+k-1, every edge coloured j, as an m-edge-coloured graph.
    /// A plain graph G is k-colourable iff the result has a D_m-switchable
    /// k-colouring (m even). Throws InvalidArgument unless k >= 1 and 1 <= j <= m.
    auto build_kcol_reduction(const EdgeColouredGraph & g, int k, int m, Colour j) -> EdgeColouredGraph;

    /// Copy of a 2-edge-coloured f with colour count m; colours 1 and 2
    /// are reused, so collapse_blocks of the result is f again. Throws
    /// InvalidArgument for odd m or m < 2, DegreeMismatch unless f.colours() == 2.
    auto build_hom_reduction(const EdgeColouredGraph & f, int m) -> EdgeColouredGraph;
}

#endif
