#ifndef ECSWITCH_SWITCHING_HH
#define ECSWITCH_SWITCHING_HH

#include <ecswitch/graph.hh>
#include <ecswitch/perm_group.hh>
#include <ecswitch/permutation.hh>

#include <span>
#include <vector>

namespace ecswitch
{
    struct SwitchStep
    {
        Vertex vertex;
        Permutation permutation;

        auto operator== (const SwitchStep &) const -> bool = default;
    };

    /// Steps are applied left to right: the first step acts on the input graph.
    using SwitchingSequence = std::vector<SwitchStep>;

    /// Switching at x with respect to p: every edge incident with x changes
    /// colour c -> p(c). Throws DegreeMismatch or InvalidArgument.
    auto switch_once(const EdgeColouredGraph & g, Vertex x, const Permutation & p) -> EdgeColouredGraph;

    auto apply_sequence(const EdgeColouredGraph & g, const SwitchingSequence & sequence) -> EdgeColouredGraph;

    /// Applies a sequence directly to a signature over g's edges.
    void apply_to_signature(const EdgeColouredGraph & g, const SwitchingSequence & sequence, std::span<Colour> signature);

    /// Reversed steps with inverted permutations; undoes the sequence.
    auto inverse_sequence(const SwitchingSequence & sequence) -> SwitchingSequence;

    /// Transports a sequence on a target graph back along a vertex map:
    /// each step (w, p) becomes the steps (v, p) for every v with map[v] == w,
    /// in ascending v. If map is a homomorphism F -> H then it stays a
    /// homomorphism F^lift(S) -> H^S.
    auto lift_sequence(const SwitchingSequence & sequence, const VertexMap & map) -> SwitchingSequence;

    auto sequence_in_group(const SwitchingSequence & sequence, const PermGroup & group) -> bool;

    /// Four-step gadget (x, alpha), (y, beta), (x, alpha^-1), (y, beta^-1)
    /// built from find_t_witness(group, i, j), where i is the current colour
    /// of edge {x, y}. Replaying it changes that edge to colour j and leaves
    /// every other edge alone. Empty when i == j. Throws NoWitness when the
    /// group lacks T_{i,j}, InvalidArgument if {x, y} is not an edge.
    auto recolour_edge_sequence(const EdgeColouredGraph & g, Vertex x, Vertex y, Colour j, const PermGroup & group)
        -> SwitchingSequence;

    /// Concatenated recolour gadgets, one for each edge whose colour differs
    /// from target[edge], in edge-index order. Throws NoWitness if some
    /// required T_{i,j} is missing.
    auto retarget_sequence(const EdgeColouredGraph & g, std::span<const Colour> target, const PermGroup & group)
        -> SwitchingSequence;

    /// Gadgets recolouring every edge to j; at most 4 |E| steps. Throws
    /// NoPropertyT when the group lacks property T_j.
    auto monochromatize_sequence(const EdgeColouredGraph & g, Colour j, const PermGroup & group) -> SwitchingSequence;
}

#endif
