#ifndef ECSWITCH_HOMOMORPHISM_HH
#define ECSWITCH_HOMOMORPHISM_HH

#include <ecswitch/graph.hh>
#include <ecswitch/outcome.hh>
#include <ecswitch/perm_group.hh>

namespace ecswitch
{
    /// Colour-preserving homomorphism G -> H by backtracking: vertices of G
    /// in index order, images ascending, with forward checking of each
    /// unassigned neighbour's domain by edge colour. Exponential in the
    /// worst case. Throws DegreeMismatch if m differs.
    auto hom_exists(const EdgeColouredGraph & g, const EdgeColouredGraph & h) -> DecisionOutcome;

    /// Vertex k-colouring of an edge-coloured graph: a partition into at
    /// most k classes with no edge inside a class and one colour on all
    /// edges between any two classes. The witness target is the induced
    /// quotient, padded with isolated vertices to exactly k.
    auto k_colouring_exists(const EdgeColouredGraph & g, int k) -> DecisionOutcome;

    /// The 2-edge-coloured 4-cycle 0-1-2-3-0 with colours 1, 2, 1, 2.
    auto alternating_c4() -> EdgeColouredGraph;

    /// Homomorphism (no switching) of a 2-edge-coloured graph to the
    /// alternating C_4, by propagation: every C_4 vertex meets exactly one
    /// edge of each colour, so pinning the least vertex of each component
    /// to 0 forces every other image. Linear time.
    auto hom_to_alternating_c4(const EdgeColouredGraph & f) -> DecisionOutcome;

    /**
     * S_2-switchable homomorphism of G2 to H2 (both 2-edge-coloured).
     *
     * When H2 maps to the alternating C_4 the problem is polynomial: an H2
     * with an edge is reachable from a monochromatic K_2 and vice versa, so
     * the answer is whether G2 maps to the alternating C_4. Edgeless
     * targets accept only edgeless sources. Otherwise an exact search tries
     * every switch set of G2 with one vertex per component held fixed,
     * bounded by options.exact_cap. Throws CapExceeded.
     */
    auto s2_switchable_hom(const EdgeColouredGraph & g2, const EdgeColouredGraph & h2,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /**
     * Group-switchable homomorphism G -> H.
     *
     * Dispatch:
     *  - property T_j: decided on the underlying graphs (poly when H's
     *    underlying graph is bipartite with an edge);
     *  - D_m with m even, or S_2: s2_switchable_hom on the block collapses;
     *  - otherwise the reachability oracle.
     */
    auto switchable_hom_exists(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /// Some member of G's switching class (first in BFS order) has a homomorphism to H.
    auto oracle_switchable_hom(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /**
     * Group-switchable k-colouring of G.
     *
     * Dispatch:
     *  - property T_j: k-colourability of the underlying graph;
     *  - D_m with m even, or S_2: k == 1 iff edgeless; k == 2 iff G is
     *    bipartite and its block collapse maps to the alternating C_4;
     *    k >= 3 by exact search over the switching class;
     *  - otherwise the reachability oracle.
     */
    auto switchable_k_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /// Some member of G's switching class (first in BFS order) is k-colourable.
    auto oracle_switchable_k_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;
}

#endif
