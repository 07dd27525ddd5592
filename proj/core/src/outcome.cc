#include <ecswitch/outcome.hh>

using namespace ecswitch;

auto ecswitch::to_string(Method method) -> std::string
{
    switch (method) {
        case Method::PropertyTFastPath: return "PropertyT-FastPath";
        case Method::DihedralEvenReduction: return "DihedralEvenReduction";
        case Method::CycleParity: return "CycleParity";
        case Method::OracleBFS: return "OracleBFS";
        case Method::ExactSearch: return "ExactSearch";
        case Method::Propagation: return "Propagation";
    }
    return "ExactSearch";
}

namespace
{
    auto replay(const EdgeColouredGraph & g, const PermGroup & group, const DecisionOutcome & outcome)
        -> std::optional<EdgeColouredGraph>
    {
        if (! outcome.sequence)
            return g;
        if (! sequence_in_group(*outcome.sequence, group))
            return std::nullopt;
        for (auto & step : *outcome.sequence)
            if (step.vertex < 0 || step.vertex >= g.order())
                return std::nullopt;
        return apply_sequence(g, *outcome.sequence);
    }
}

auto ecswitch::validate_equivalence(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecisionOutcome & outcome) -> bool
{
    if (! outcome.verdict || ! outcome.isomorphism)
        return false;
    auto switched = replay(g, group, outcome);
    return switched && is_coloured_isomorphism(*switched, h, *outcome.isomorphism);
}

auto ecswitch::validate_homomorphism(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecisionOutcome & outcome) -> bool
{
    if (! outcome.verdict || ! outcome.homomorphism)
        return false;
    auto switched = replay(g, group, outcome);
    return switched && is_homomorphism(*switched, h, outcome.homomorphism->map);
}

auto ecswitch::validate_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
        const DecisionOutcome & outcome) -> bool
{
    if (! outcome.verdict || ! outcome.homomorphism || ! outcome.target)
        return false;
    if (outcome.target->order() > k || outcome.target->colours() != g.colours())
        return false;
    auto switched = replay(g, group, outcome);
    return switched && is_homomorphism(*switched, *outcome.target, outcome.homomorphism->map);
}
