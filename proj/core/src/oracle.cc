#include <ecswitch/errors.hh>
#include <ecswitch/oracle.hh>

#include <algorithm>

using namespace ecswitch;

using std::optional;
using std::span;
using std::string;
using std::vector;

SwitchClass::SwitchClass(EdgeColouredGraph base, vector<Permutation> moves) :
    _base(std::move(base)),
    _moves(std::move(moves))
{
}

auto SwitchClass::pack(span<const Colour> signature) const -> string
{
    string state(signature.size(), '\0');
    for (std::size_t t = 0 ; t < signature.size() ; ++t)
        state[t] = static_cast<char>(static_cast<unsigned char>(signature[t]));
    return state;
}

auto SwitchClass::add(string && state, Link link) -> std::pair<std::size_t, bool>
{
    if (auto it = _index.find(state) ; it != _index.end())
        return {it->second, false};
    auto id = _states.size();
    _states.push_back(std::move(state));
    _index.emplace(std::string_view{_states.back()}, id);
    _links.push_back(link);
    return {id, true};
}

auto SwitchClass::signature(std::size_t state) const -> vector<Colour>
{
    auto & packed = _states.at(state);
    vector<Colour> result(packed.size());
    for (std::size_t t = 0 ; t < packed.size() ; ++t)
        result[t] = static_cast<unsigned char>(packed[t]);
    return result;
}

auto SwitchClass::member(std::size_t state) const -> EdgeColouredGraph
{
    return _base.with_signature(signature(state));
}

auto SwitchClass::find(span<const Colour> signature) const -> optional<std::size_t>
{
    if (signature.size() != _base.size())
        return std::nullopt;
    auto key = pack(signature);
    if (auto it = _index.find(key) ; it != _index.end())
        return it->second;
    return std::nullopt;
}

auto SwitchClass::path_to(std::size_t state) const -> SwitchingSequence
{
    SwitchingSequence reversed;
    while (state != 0) {
        auto & link = _links.at(state);
        reversed.push_back(SwitchStep{link.vertex, _moves[link.move]});
        state = link.parent;
    }
    return SwitchingSequence(reversed.rbegin(), reversed.rend());
}

auto ecswitch::explore_signatures(const EdgeColouredGraph & g, const PermGroup & group, const OracleOptions & options,
        const std::function<bool (span<const Colour>)> & stop) -> std::pair<SwitchClass, optional<std::size_t>>
{
    if (group.degree() != g.colours())
        throw DegreeMismatch(group.name() + " does not act on " + std::to_string(g.colours()) + " colours");
    if (g.colours() > 255)
        throw InvalidArgument("the reachability oracle supports at most 255 colours");

    vector<Permutation> moves;
    if (options.generators_only) {
        for (auto & p : group.generators())
            if (! p.is_identity())
                moves.push_back(p);
    }
    else {
        for (auto & p : group.elements())
            if (! p.is_identity())
                moves.push_back(p);
    }

    // colour lookup tables: table[move][c] = move(c)
    vector<vector<char>> table(moves.size(), vector<char>(g.colours() + 1));
    for (std::size_t t = 0 ; t < moves.size() ; ++t)
        for (Colour c = 1 ; c <= g.colours() ; ++c)
            table[t][c] = static_cast<char>(moves[t](c));

    SwitchClass result{g, moves};
    auto base_signature = g.signature();
    result.add(result.pack(base_signature), {0, 0, 0});
    if (stop && stop(base_signature))
        return {std::move(result), 0};

    vector<Colour> scratch(g.size());
    for (std::size_t head = 0 ; head < result._states.size() ; ++head) {
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto incident = g.incident(x);
            if (incident.empty())
                continue;
            for (std::size_t t = 0 ; t < moves.size() ; ++t) {
                string next = result._states[head];
                for (auto idx : incident)
                    next[idx] = table[t][static_cast<unsigned char>(next[idx])];
                auto [id, fresh] = result.add(std::move(next), {head, x, static_cast<std::uint32_t>(t)});
                if (! fresh)
                    continue;
                if (result._states.size() > options.state_cap)
                    throw CapExceeded("switching class exceeds the state cap of " + std::to_string(options.state_cap)
                            + " signatures");
                if (stop) {
                    auto & packed = result._states[id];
                    for (std::size_t e = 0 ; e < packed.size() ; ++e)
                        scratch[e] = static_cast<unsigned char>(packed[e]);
                    if (stop(scratch))
                        return {std::move(result), id};
                }
            }
        }
    }

    result._complete = true;
    return {std::move(result), std::nullopt};
}

auto ecswitch::reachable_signatures(const EdgeColouredGraph & g, const PermGroup & group, const OracleOptions & options)
    -> SwitchClass
{
    return explore_signatures(g, group, options, nullptr).first;
}
