#ifndef ECSWITCH_OUTCOME_HH
#define ECSWITCH_OUTCOME_HH

#include <ecswitch/graph.hh>
#include <ecswitch/perm_group.hh>
#include <ecswitch/switching.hh>

#include <cstddef>
#include <optional>
#include <string>

namespace ecswitch
{
    enum class Method
    {
        PropertyTFastPath,
        DihedralEvenReduction,
        CycleParity,
        OracleBFS,
        ExactSearch,
        Propagation
    };

    /// "PropertyT-FastPath", "DihedralEvenReduction", "CycleParity",
    /// "OracleBFS", "ExactSearch", "Propagation".
    auto to_string(Method method) -> std::string;

    /// A homomorphism certificate: map[v] is the image of source vertex v.
    struct HomWitness
    {
        VertexMap map;
    };

    /**
     * Result of a decision procedure.
     *
     * Witness fields are filled as the question requires:
     *  - equivalence: sequence (on the first graph) and isomorphism, so that
     *    isomorphism maps apply_sequence(G, sequence) onto H colour-preservingly;
     *  - homomorphism: sequence and homomorphism into H;
     *  - k-colouring: sequence, homomorphism and the target graph on k vertices.
     */
    struct DecisionOutcome
    {
        bool verdict = false;
        Method method = Method::ExactSearch;
        std::optional<SwitchingSequence> sequence;
        std::optional<VertexMap> isomorphism;
        std::optional<HomWitness> homomorphism;
        std::optional<EdgeColouredGraph> target;
        std::string notes;
    };

    struct DecideOptions
    {
        /// Signature budget for every reachability exploration.
        std::size_t state_cap = 2000000;

        /// Budget on switch assignments / candidate signatures in the exact branches.
        std::size_t exact_cap = std::size_t{1} << 22;

        /// Skip the structural fast paths and answer with the reachability oracle.
        bool force_oracle = false;
    };

    /// Replays an equivalence witness: the sequence uses group elements and
    /// valid vertices, and the isomorphism maps G^S onto H with colours kept.
    auto validate_equivalence(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecisionOutcome & outcome) -> bool;

    /// Replays a homomorphism witness G^S -> H.
    auto validate_homomorphism(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
            const DecisionOutcome & outcome) -> bool;

    /// Replays a k-colouring witness: target has at most k vertices and
    /// the homomorphism maps G^S into it.
    auto validate_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
            const DecisionOutcome & outcome) -> bool;
}

#endif
