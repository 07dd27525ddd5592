#include <ecswitch/equivalence.hh>
#include <ecswitch/errors.hh>
#include <ecswitch/oracle.hh>
#include <ecswitch/property_t.hh>
#include <ecswitch/structure.hh>

#include <algorithm>
#include <numeric>

using namespace ecswitch;

using std::optional;
using std::string;
using std::vector;

namespace
{
    void check_degrees(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group)
    {
        if (g.colours() != h.colours() || g.colours() != group.degree())
            throw DegreeMismatch("colour counts differ: G has " + std::to_string(g.colours()) + ", H has "
                    + std::to_string(h.colours()) + ", " + group.name() + " acts on " + std::to_string(group.degree()));
    }

    auto identity_map(int n) -> VertexMap
    {
        VertexMap map(n);
        std::iota(map.begin(), map.end(), 0);
        return map;
    }

    void append(SwitchingSequence & to, const SwitchingSequence & from)
    {
        to.insert(to.end(), from.begin(), from.end());
    }
}

auto ecswitch::s2_equivalent_labelled(const EdgeColouredGraph & g2, const EdgeColouredGraph & h2) -> DecisionOutcome
{
    if (g2.colours() != 2 || h2.colours() != 2)
        throw DegreeMismatch("cycle parity test needs 2-edge-coloured graphs");
    if (! g2.same_underlying(h2))
        throw InvalidArgument("cycle parity test needs the same labelled underlying graph");

    DecisionOutcome outcome;
    outcome.method = Method::CycleParity;

    auto basis = cycle_basis(g2);
    for (auto & cycle : basis) {
        int parity_g = 0, parity_h = 0;
        for (auto idx : cycle) {
            parity_g ^= g2.edge(idx).colour == 2;
            parity_h ^= h2.edge(idx).colour == 2;
        }
        if (parity_g != parity_h) {
            outcome.verdict = false;
            auto & e = g2.edge(cycle.front());
            outcome.notes = "fundamental cycle through edge " + std::to_string(e.u) + " " + std::to_string(e.v)
                + " has " + (parity_g ? "odd" : "even") + " colour-2 parity in G and " + (parity_h ? "odd" : "even")
                + " in H";
            return outcome;
        }
    }

    // flip[v] == 1 means v is switched once; tree edges fix it relative to the root
    auto forest = spanning_forest(g2);
    vector<Vertex> by_depth(g2.order());
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(),
            [&] (Vertex a, Vertex b) { return forest.depth[a] < forest.depth[b]; });

    vector<int> flip(g2.order(), 0);
    for (auto v : by_depth)
        if (auto idx = forest.parent_edge[v])
            flip[v] = flip[forest.parent[v]] ^ (g2.edge(*idx).colour != h2.edge(*idx).colour);

    SwitchingSequence sequence;
    auto swap = Permutation::from_cycles(2, {{1, 2}});
    for (Vertex v = 0 ; v < g2.order() ; ++v)
        if (flip[v])
            sequence.push_back(SwitchStep{v, swap});

    outcome.verdict = true;
    outcome.sequence = std::move(sequence);
    outcome.isomorphism = identity_map(g2.order());
    outcome.notes = "all " + std::to_string(basis.size()) + " fundamental cycles agree in parity";
    return outcome;
}

auto ecswitch::block_normalising_sequence(const EdgeColouredGraph & g, const PermGroup & group) -> SwitchingSequence
{
    if (! is_even_dihedral(group))
        throw InvalidArgument("block normalisation needs an even dihedral group, got " + group.name());
    vector<Colour> target;
    target.reserve(g.size());
    for (auto & e : g.edges())
        target.push_back(BlockStructure::block_of(e.colour));
    return retarget_sequence(g, target, group);
}

auto ecswitch::oracle_switch_equivalent(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    check_degrees(g, h, group);

    DecisionOutcome outcome;
    outcome.method = Method::OracleBFS;

    auto [reached, hit] = explore_signatures(g, group, OracleOptions{options.state_cap, false},
            [&] (std::span<const Colour> signature) {
                return coloured_isomorphism(g.with_signature(signature), h).has_value();
            });

    if (hit) {
        outcome.verdict = true;
        outcome.sequence = reached.path_to(*hit);
        outcome.isomorphism = coloured_isomorphism(reached.member(*hit), h);
        outcome.notes = "shortest witness found after exploring " + std::to_string(reached.size()) + " signatures";
    }
    else {
        outcome.verdict = false;
        outcome.notes = "no member of the switching class (" + std::to_string(reached.size())
            + " signatures) is isomorphic to H";
    }
    return outcome;
}

auto ecswitch::switch_equivalent(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    check_degrees(g, h, group);

    if (options.force_oracle)
        return oracle_switch_equivalent(g, h, group, options);

    if (auto j = property_t_colour(group)) {
        DecisionOutcome outcome;
        outcome.method = Method::PropertyTFastPath;
        auto phi = underlying_isomorphism(g, h);
        if (! phi) {
            outcome.verdict = false;
            outcome.notes = "underlying graphs are not isomorphic";
            return outcome;
        }

        // both sides monochromatize to colour j; undo H's half through phi
        auto pulled = g.with_signature(*pull_back_signature(g, h, *phi));
        auto sequence = monochromatize_sequence(g, *j, group);
        append(sequence, inverse_sequence(monochromatize_sequence(pulled, *j, group)));

        outcome.verdict = true;
        outcome.sequence = std::move(sequence);
        outcome.isomorphism = std::move(*phi);
        outcome.notes = group.name() + " has property T_" + std::to_string(*j)
            + "; gadget witness via monochromatization, not minimal";
        return outcome;
    }

    if (is_even_dihedral(group)) {
        DecisionOutcome outcome;
        outcome.method = Method::DihedralEvenReduction;
        auto g2 = collapse_blocks(g);
        auto swap_blocks = block_swapping_reflection(group.degree());
        std::size_t tried = 0;

        for_each_underlying_isomorphism(g, h, [&] (const VertexMap & phi) {
                ++tried;
                auto pulled = g.with_signature(*pull_back_signature(g, h, phi));
                auto parity = s2_equivalent_labelled(g2, collapse_blocks(pulled));
                if (! parity.verdict)
                    return true;

                auto sequence = block_normalising_sequence(g, group);
                for (auto & step : *parity.sequence)
                    sequence.push_back(SwitchStep{step.vertex, swap_blocks});
                append(sequence, inverse_sequence(block_normalising_sequence(pulled, group)));

                outcome.verdict = true;
                outcome.sequence = std::move(sequence);
                outcome.isomorphism = phi;
                return false;
            });

        if (outcome.verdict)
            outcome.notes = "block collapses are S_2-equivalent under underlying isomorphism #" + std::to_string(tried)
                + "; gadget witness, not minimal";
        else if (tried == 0)
            outcome.notes = "underlying graphs are not isomorphic";
        else
            outcome.notes = "cycle parities of the block collapses disagree under all " + std::to_string(tried)
                + " underlying isomorphisms";
        return outcome;
    }

    return oracle_switch_equivalent(g, h, group, options);
}
