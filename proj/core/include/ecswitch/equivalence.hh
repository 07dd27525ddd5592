#ifndef ECSWITCH_EQUIVALENCE_HH
#define ECSWITCH_EQUIVALENCE_HH

#include <ecswitch/graph.hh>
#include <ecswitch/outcome.hh>
#include <ecswitch/perm_group.hh>

namespace ecswitch
{
    /**
     * S_2-switch equivalence of two 2-edge-coloured graphs on the same
     * labelled underlying graph, by cycle parity: equivalent iff every
     * fundamental cycle has the same parity of colour-2 edges in both
     * (parity is linear over the cycle space, so the basis suffices).
     *
     * On yes, the witness switches each vertex at most once by (1 2); the
     * switch set comes from propagating colour differences along a
     * spanning forest, and the isomorphism is the identity.
     *
     * Throws DegreeMismatch unless both graphs have m == 2, and
     * InvalidArgument if the labelled underlying graphs differ.
     */
    auto s2_equivalent_labelled(const EdgeColouredGraph & g2, const EdgeColouredGraph & h2) -> DecisionOutcome;

    /**
     * Is there a switching sequence S over the group with G^S isomorphic to H?
     *
     * Dispatch:
     *  - the group has property T_j for some j: equivalent iff the
     *    underlying graphs are isomorphic (both sides monochromatize to j);
     *  - the group is D_m with m even, or S_2: some underlying isomorphism
     *    must make the block collapses S_2-equivalent as labelled graphs;
     *  - otherwise the reachability oracle.
     *
     * Witnesses are replayable with validate_equivalence(). Throws
     * DegreeMismatch, or CapExceeded from the oracle.
     */
    auto switch_equivalent(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /// Pure oracle: explores the switching class of G breadth first and
    /// returns the first member (hence a shortest sequence) that is
    /// colour-isomorphic to H.
    auto oracle_switch_equivalent(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecideOptions & options = {}) -> DecisionOutcome;

    /// Gadget sequence over an even dihedral group (or S_2) recolouring
    /// every edge to its block representative: odd colours to 1, even
    /// colours to 2. Afterwards the graph equals collapse_blocks(g) with m kept.
    auto block_normalising_sequence(const EdgeColouredGraph & g, const PermGroup & group) -> SwitchingSequence;
}

#endif
