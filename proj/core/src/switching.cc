#include <ecswitch/errors.hh>
#include <ecswitch/property_t.hh>
#include <ecswitch/switching.hh>

#include <algorithm>

using namespace ecswitch;

using std::span;
using std::vector;

namespace
{
    void check_step(const EdgeColouredGraph & g, Vertex x, const Permutation & p)
    {
        if (p.degree() != g.colours())
            throw DegreeMismatch("permutation " + p.to_cycle_string() + " has degree " + std::to_string(p.degree())
                    + " but the graph has " + std::to_string(g.colours()) + " colours");
        if (x < 0 || x >= g.order())
            throw InvalidArgument("vertex " + std::to_string(x) + " outside 0.." + std::to_string(g.order() - 1));
    }
}

auto ecswitch::switch_once(const EdgeColouredGraph & g, Vertex x, const Permutation & p) -> EdgeColouredGraph
{
    check_step(g, x, p);
    auto signature = g.signature();
    for (auto idx : g.incident(x))
        signature[idx] = p(signature[idx]);
    return g.with_signature(signature);
}

void ecswitch::apply_to_signature(const EdgeColouredGraph & g, const SwitchingSequence & sequence, span<Colour> signature)
{
    for (auto & step : sequence) {
        check_step(g, step.vertex, step.permutation);
        for (auto idx : g.incident(step.vertex))
            signature[idx] = step.permutation(signature[idx]);
    }
}

auto ecswitch::apply_sequence(const EdgeColouredGraph & g, const SwitchingSequence & sequence) -> EdgeColouredGraph
{
    auto signature = g.signature();
    apply_to_signature(g, sequence, signature);
    return g.with_signature(signature);
}

auto ecswitch::inverse_sequence(const SwitchingSequence & sequence) -> SwitchingSequence
{
    SwitchingSequence result;
    result.reserve(sequence.size());
    for (auto it = sequence.rbegin() ; it != sequence.rend() ; ++it)
        result.push_back(SwitchStep{it->vertex, inverse(it->permutation)});
    return result;
}

auto ecswitch::lift_sequence(const SwitchingSequence & sequence, const VertexMap & map) -> SwitchingSequence
{
    SwitchingSequence result;
    for (auto & step : sequence)
        for (std::size_t v = 0 ; v < map.size() ; ++v)
            if (map[v] == step.vertex)
                result.push_back(SwitchStep{static_cast<Vertex>(v), step.permutation});
    return result;
}

auto ecswitch::sequence_in_group(const SwitchingSequence & sequence, const PermGroup & group) -> bool
{
    return std::all_of(sequence.begin(), sequence.end(),
            [&] (const SwitchStep & s) { return group.contains(s.permutation); });
}

namespace
{
    auto gadget(Vertex x, Vertex y, const PropertyTWitness & w) -> SwitchingSequence
    {
        return {
            SwitchStep{x, w.alpha},
            SwitchStep{y, w.beta},
            SwitchStep{x, inverse(w.alpha)},
            SwitchStep{y, inverse(w.beta)}};
    }
}

auto ecswitch::recolour_edge_sequence(const EdgeColouredGraph & g, Vertex x, Vertex y, Colour j, const PermGroup & group)
    -> SwitchingSequence
{
    if (group.degree() != g.colours())
        throw DegreeMismatch(group.name() + " does not act on " + std::to_string(g.colours()) + " colours");
    if (j < 1 || j > g.colours())
        throw InvalidArgument("target colour " + std::to_string(j) + " outside 1.." + std::to_string(g.colours()));
    auto current = g.colour(x, y);
    if (! current)
        throw InvalidArgument(std::to_string(x) + " " + std::to_string(y) + " is not an edge");
    if (*current == j)
        return {};

    auto witness = find_t_witness(group, *current, j);
    if (! witness)
        throw NoWitness(group.name() + " has no T_{" + std::to_string(*current) + "," + std::to_string(j)
                + "} witness, so edge " + std::to_string(x) + " " + std::to_string(y) + " cannot be recoloured alone");
    return gadget(x, y, *witness);
}

auto ecswitch::retarget_sequence(const EdgeColouredGraph & g, span<const Colour> target, const PermGroup & group)
    -> SwitchingSequence
{
    if (target.size() != g.size())
        throw InvalidArgument("target signature has the wrong length");
    SwitchingSequence result;
    for (std::size_t idx = 0 ; idx < g.size() ; ++idx) {
        auto & e = g.edge(idx);
        if (e.colour == target[idx])
            continue;
        // each gadget touches only its own edge, so gadgets can be planned
        // against the original colours
        auto part = recolour_edge_sequence(g, e.u, e.v, target[idx], group);
        result.insert(result.end(), part.begin(), part.end());
    }
    return result;
}

auto ecswitch::monochromatize_sequence(const EdgeColouredGraph & g, Colour j, const PermGroup & group) -> SwitchingSequence
{
    if (group.degree() != g.colours())
        throw DegreeMismatch(group.name() + " does not act on " + std::to_string(g.colours()) + " colours");
    if (auto failing = property_tj_failure(group, j))
        throw NoPropertyT(*failing, group.name() + " lacks property T_" + std::to_string(j) + ": no T_{"
                + std::to_string(*failing) + "," + std::to_string(j) + "} witness");
    return retarget_sequence(g, vector<Colour>(g.size(), j), group);
}
