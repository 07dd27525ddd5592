#include <ecswitch/equivalence.hh>
#include <ecswitch/errors.hh>
#include <ecswitch/homomorphism.hh>
#include <ecswitch/oracle.hh>
#include <ecswitch/property_t.hh>
#include <ecswitch/structure.hh>

#include <algorithm>

using namespace ecswitch;

using std::optional;
using std::string;
using std::vector;

namespace
{
    void check_pair(const EdgeColouredGraph & g, const EdgeColouredGraph & h)
    {
        if (g.colours() != h.colours())
            throw DegreeMismatch("homomorphism between graphs with " + std::to_string(g.colours()) + " and "
                    + std::to_string(h.colours()) + " colours");
    }

    void check_group(const EdgeColouredGraph & g, const PermGroup & group)
    {
        if (g.colours() != group.degree())
            throw DegreeMismatch(group.name() + " does not act on " + std::to_string(g.colours()) + " colours");
    }

    void append(SwitchingSequence & to, const SwitchingSequence & from)
    {
        to.insert(to.end(), from.begin(), from.end());
    }

    struct HomSearch
    {
        const EdgeColouredGraph & g;
        int target_order;
        // colour_to[w][x]: colour of target edge wx, 0 if none
        vector<vector<int>> colour_to;
        // later[v]: (u, colour) for neighbours u > v
        vector<vector<std::pair<Vertex, Colour>>> later;
        VertexMap map;

        auto extend(Vertex v, vector<vector<char>> & domains) -> bool
        {
            if (v == g.order())
                return true;
            for (Vertex w = 0 ; w < target_order ; ++w) {
                if (! domains[v][w])
                    continue;
                auto narrowed = domains;
                bool wipeout = false;
                for (auto [u, c] : later[v]) {
                    bool any = false;
                    for (Vertex x = 0 ; x < target_order ; ++x) {
                        if (narrowed[u][x] && colour_to[w][x] != c)
                            narrowed[u][x] = 0;
                        any = any || narrowed[u][x];
                    }
                    if (! any) {
                        wipeout = true;
                        break;
                    }
                }
                if (wipeout)
                    continue;
                map[v] = w;
                if (extend(v + 1, narrowed))
                    return true;
            }
            return false;
        }
    };

    auto search_hom(const EdgeColouredGraph & g, const EdgeColouredGraph & h) -> optional<VertexMap>
    {
        if (g.order() == 0)
            return VertexMap{};
        if (h.order() == 0)
            return std::nullopt;

        HomSearch search{g, h.order(), vector<vector<int>>(h.order(), vector<int>(h.order(), 0)),
            vector<vector<std::pair<Vertex, Colour>>>(g.order()), VertexMap(g.order(), -1)};
        for (auto & e : h.edges())
            search.colour_to[e.u][e.v] = search.colour_to[e.v][e.u] = e.colour;
        for (auto & e : g.edges())
            search.later[e.u].emplace_back(e.v, e.colour);

        vector<vector<char>> domains(g.order(), vector<char>(h.order(), 1));
        if (search.extend(0, domains))
            return search.map;
        return std::nullopt;
    }

    struct PartitionSearch
    {
        const EdgeColouredGraph & g;
        int k;
        vector<vector<std::pair<Vertex, Colour>>> earlier;
        vector<int> cls;
        vector<vector<Colour>> between;

        auto extend(Vertex v, int used) -> bool
        {
            if (v == g.order())
                return true;
            for (int c = 0 ; c < std::min(used + 1, k) ; ++c) {
                // record pair colours as we go, so two neighbours in one class must agree
                bool ok = true;
                vector<std::pair<int, int>> fresh;
                for (auto [u, colour] : earlier[v]) {
                    auto & existing = between[cls[u]][c];
                    if (cls[u] == c || (existing != 0 && existing != colour)) {
                        ok = false;
                        break;
                    }
                    if (existing == 0) {
                        existing = between[c][cls[u]] = colour;
                        fresh.emplace_back(cls[u], c);
                    }
                }
                if (ok) {
                    cls[v] = c;
                    if (extend(v + 1, std::max(used, c + 1)))
                        return true;
                }
                for (auto [a, b] : fresh)
                    between[a][b] = between[b][a] = 0;
            }
            cls[v] = -1;
            return false;
        }
    };

    /// k-vertex target carrying the colour of every class pair in use
    auto quotient_target(const EdgeColouredGraph & g, const vector<int> & cls, int k) -> EdgeColouredGraph
    {
        vector<Edge> edges;
        for (auto & e : g.edges()) {
            Edge q{cls[e.u], cls[e.v], e.colour};
            if (q.u > q.v)
                std::swap(q.u, q.v);
            if (std::find_if(edges.begin(), edges.end(), [&] (const Edge & x) { return x.u == q.u && x.v == q.v; }) == edges.end())
                edges.push_back(q);
        }
        return EdgeColouredGraph{g.colours(), k, std::move(edges)};
    }

    auto search_partition(const EdgeColouredGraph & g, int k) -> optional<vector<int>>
    {
        PartitionSearch search{g, k, vector<vector<std::pair<Vertex, Colour>>>(g.order()), vector<int>(g.order(), -1),
            vector<vector<Colour>>(k, vector<Colour>(k, 0))};
        for (auto & e : g.edges())
            search.earlier[e.v].emplace_back(e.u, e.colour);
        if (search.extend(0, 0))
            return search.cls;
        return std::nullopt;
    }

    // C_4 0-1-2-3-0 with colours 1, 2, 1, 2: step[a][c] is the neighbour of a along colour c
    constexpr int alternating_step[4][3] = {{-1, 1, 3}, {-1, 0, 2}, {-1, 3, 1}, {-1, 2, 0}};

    auto propagate_alternating(const EdgeColouredGraph & f, string & conflict) -> optional<VertexMap>
    {
        VertexMap image(f.order(), -1);
        for (Vertex root = 0 ; root < f.order() ; ++root) {
            if (image[root] != -1)
                continue;
            image[root] = 0;
            vector<Vertex> stack{root};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto idx : f.incident(v)) {
                    auto & e = f.edge(idx);
                    auto w = e.u == v ? e.v : e.u;
                    auto forced = alternating_step[image[v]][e.colour];
                    if (image[w] == -1) {
                        image[w] = forced;
                        stack.push_back(w);
                    }
                    else if (image[w] != forced) {
                        conflict = "vertex " + std::to_string(w) + " is forced to C_4 vertices " + std::to_string(image[w])
                            + " and " + std::to_string(forced);
                        return std::nullopt;
                    }
                }
            }
        }
        return image;
    }

    /// Switch set and homomorphism realising a switchable map of G2 onto
    /// a single edge of colour `colour`, given a homomorphism of G2 to the
    /// alternating C_4. Switching the preimage of {2, 3} makes every edge
    /// colour 1; switching one bipartition side on top makes it colour 2.
    auto switch_onto_edge(const VertexMap & to_c4, Colour colour) -> std::pair<vector<Vertex>, vector<int>>
    {
        vector<Vertex> switched;
        vector<int> side(to_c4.size());
        for (std::size_t v = 0 ; v < to_c4.size() ; ++v) {
            side[v] = to_c4[v] % 2;
            bool in_x = to_c4[v] >= 2;
            if (colour == 2 && side[v] == 0)
                in_x = ! in_x;
            if (in_x)
                switched.push_back(static_cast<Vertex>(v));
        }
        return {switched, side};
    }

    auto s2_swap() -> Permutation
    {
        return Permutation::from_cycles(2, {{1, 2}});
    }
}

auto ecswitch::hom_exists(const EdgeColouredGraph & g, const EdgeColouredGraph & h) -> DecisionOutcome
{
    check_pair(g, h);
    DecisionOutcome outcome;
    outcome.method = Method::ExactSearch;
    if (auto map = search_hom(g, h)) {
        outcome.verdict = true;
        outcome.homomorphism = HomWitness{std::move(*map)};
    }
    return outcome;
}

auto ecswitch::k_colouring_exists(const EdgeColouredGraph & g, int k) -> DecisionOutcome
{
    if (k < 1)
        throw InvalidArgument("number of colours k must be at least 1");
    DecisionOutcome outcome;
    outcome.method = Method::ExactSearch;
    if (auto cls = search_partition(g, k)) {
        outcome.verdict = true;
        outcome.target = quotient_target(g, *cls, k);
        outcome.homomorphism = HomWitness{std::move(*cls)};
    }
    return outcome;
}

auto ecswitch::alternating_c4() -> EdgeColouredGraph
{
    return EdgeColouredGraph{2, 4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}}};
}

auto ecswitch::hom_to_alternating_c4(const EdgeColouredGraph & f) -> DecisionOutcome
{
    if (f.colours() != 2)
        throw DegreeMismatch("alternating C_4 test needs a 2-edge-coloured graph");
    DecisionOutcome outcome;
    outcome.method = Method::Propagation;
    string conflict;
    if (auto image = propagate_alternating(f, conflict)) {
        outcome.verdict = true;
        outcome.homomorphism = HomWitness{std::move(*image)};
        outcome.target = alternating_c4();
    }
    else
        outcome.notes = conflict;
    return outcome;
}

auto ecswitch::s2_switchable_hom(const EdgeColouredGraph & g2, const EdgeColouredGraph & h2, const DecideOptions & options)
    -> DecisionOutcome
{
    if (g2.colours() != 2 || h2.colours() != 2)
        throw DegreeMismatch("S_2-switchable homomorphism needs 2-edge-coloured graphs");

    DecisionOutcome outcome;

    if (hom_to_alternating_c4(h2).verdict) {
        outcome.method = Method::Propagation;

        if (h2.size() == 0 || g2.size() == 0) {
            // totality: every source vertex needs an image
            outcome.verdict = g2.size() == 0 && (g2.order() == 0 || h2.order() > 0);
            if (outcome.verdict) {
                outcome.sequence = SwitchingSequence{};
                outcome.homomorphism = HomWitness{VertexMap(g2.order(), 0)};
            }
            outcome.notes = h2.size() == 0 ? "edgeless target" : "edgeless source";
            return outcome;
        }

        auto to_c4 = hom_to_alternating_c4(g2);
        if (! to_c4.verdict) {
            outcome.notes = "target maps to a monochromatic K_2 but the source does not: " + to_c4.notes;
            return outcome;
        }

        auto & edge = h2.edge(0);
        auto [switched, side] = switch_onto_edge(to_c4.homomorphism->map, edge.colour);
        SwitchingSequence sequence;
        for (auto v : switched)
            sequence.push_back(SwitchStep{v, s2_swap()});
        VertexMap map(g2.order());
        for (Vertex v = 0 ; v < g2.order() ; ++v)
            map[v] = side[v] == 0 ? edge.u : edge.v;

        outcome.verdict = true;
        outcome.sequence = std::move(sequence);
        outcome.homomorphism = HomWitness{std::move(map)};
        outcome.notes = "both graphs switch onto a monochromatic K_2; source folded onto edge "
            + std::to_string(edge.u) + " " + std::to_string(edge.v);
        return outcome;
    }

    // NP-hard side: one switch per vertex suffices since S_2 is Abelian,
    // and switching a whole component changes nothing
    outcome.method = Method::ExactSearch;
    auto component = connected_components(g2);
    vector<Vertex> free;
    vector<bool> root_seen;
    for (Vertex v = 0 ; v < g2.order() ; ++v) {
        if (static_cast<std::size_t>(component[v]) >= root_seen.size())
            root_seen.resize(component[v] + 1, false);
        if (root_seen[component[v]])
            free.push_back(v);
        root_seen[component[v]] = true;
    }
    if (free.size() >= 63 || (std::size_t{1} << free.size()) > options.exact_cap)
        throw CapExceeded("S_2 exact search needs 2^" + std::to_string(free.size())
                + " switch sets, above the budget of " + std::to_string(options.exact_cap));

    for (std::size_t mask = 0 ; mask < (std::size_t{1} << free.size()) ; ++mask) {
        vector<bool> in_x(g2.order(), false);
        for (std::size_t b = 0 ; b < free.size() ; ++b)
            if (mask >> b & 1)
                in_x[free[b]] = true;
        auto signature = g2.signature();
        for (std::size_t idx = 0 ; idx < g2.size() ; ++idx)
            if (in_x[g2.edge(idx).u] != in_x[g2.edge(idx).v])
                signature[idx] = 3 - signature[idx];
        if (auto map = search_hom(g2.with_signature(signature), h2)) {
            SwitchingSequence sequence;
            for (Vertex v = 0 ; v < g2.order() ; ++v)
                if (in_x[v])
                    sequence.push_back(SwitchStep{v, s2_swap()});
            outcome.verdict = true;
            outcome.sequence = std::move(sequence);
            outcome.homomorphism = HomWitness{std::move(*map)};
            outcome.notes = "switch set #" + std::to_string(mask) + " of " + std::to_string(std::size_t{1} << free.size());
            return outcome;
        }
    }
    outcome.notes = "none of the " + std::to_string(std::size_t{1} << free.size()) + " switch sets admits a homomorphism";
    return outcome;
}

auto ecswitch::oracle_switchable_hom(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    check_pair(g, h);
    check_group(g, group);

    DecisionOutcome outcome;
    outcome.method = Method::OracleBFS;
    optional<VertexMap> found;
    auto [reached, hit] = explore_signatures(g, group, OracleOptions{options.state_cap, false},
            [&] (std::span<const Colour> signature) {
                found = search_hom(g.with_signature(signature), h);
                return found.has_value();
            });
    if (hit) {
        outcome.verdict = true;
        outcome.sequence = reached.path_to(*hit);
        outcome.homomorphism = HomWitness{std::move(*found)};
        outcome.notes = "switching class member #" + std::to_string(*hit) + " maps to H";
    }
    else
        outcome.notes = "no member of the switching class (" + std::to_string(reached.size())
            + " signatures) maps to H";
    return outcome;
}

auto ecswitch::oracle_switchable_k_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    if (k < 1)
        throw InvalidArgument("number of colours k must be at least 1");
    check_group(g, group);

    DecisionOutcome outcome;
    outcome.method = Method::OracleBFS;
    optional<vector<int>> found;
    auto [reached, hit] = explore_signatures(g, group, OracleOptions{options.state_cap, false},
            [&] (std::span<const Colour> signature) {
                found = search_partition(g.with_signature(signature), k);
                return found.has_value();
            });
    if (hit) {
        outcome.verdict = true;
        outcome.sequence = reached.path_to(*hit);
        outcome.target = quotient_target(reached.member(*hit), *found, k);
        outcome.homomorphism = HomWitness{std::move(*found)};
        outcome.notes = "switching class member #" + std::to_string(*hit) + " is " + std::to_string(k) + "-colourable";
    }
    else
        outcome.notes = "no member of the switching class (" + std::to_string(reached.size()) + " signatures) is "
            + std::to_string(k) + "-colourable";
    return outcome;
}

auto ecswitch::switchable_hom_exists(const EdgeColouredGraph & g, const EdgeColouredGraph & h, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    check_pair(g, h);
    check_group(g, group);

    if (options.force_oracle)
        return oracle_switchable_hom(g, h, group, options);

    if (auto j = property_t_colour(group)) {
        DecisionOutcome outcome;
        outcome.method = Method::PropertyTFastPath;

        optional<VertexMap> map;
        auto h_sides = bipartition(h);
        if (h_sides && h.size() > 0) {
            // underlying(H) contains K_2 and maps to it, so only G's bipartiteness matters
            if (auto sides = bipartition(g)) {
                auto & edge = h.edge(0);
                map = VertexMap(g.order());
                for (Vertex v = 0 ; v < g.order() ; ++v)
                    (*map)[v] = (*sides)[v] == 0 ? edge.u : edge.v;
            }
            outcome.notes = "underlying(H) is bipartite with an edge; decided by bipartiteness of G";
        }
        else {
            map = search_hom(underlying(g), underlying(h));
            outcome.notes = "decided by exact search for a homomorphism of the underlying graphs";
        }

        if (map) {
            auto sequence = monochromatize_sequence(g, *j, group);
            append(sequence, lift_sequence(inverse_sequence(monochromatize_sequence(h, *j, group)), *map));
            outcome.verdict = true;
            outcome.sequence = std::move(sequence);
            outcome.homomorphism = HomWitness{std::move(*map)};
        }
        outcome.notes = group.name() + " has property T_" + std::to_string(*j) + "; " + outcome.notes;
        return outcome;
    }

    if (is_even_dihedral(group)) {
        auto reduced = s2_switchable_hom(collapse_blocks(g), collapse_blocks(h), options);
        DecisionOutcome outcome;
        outcome.method = Method::DihedralEvenReduction;
        outcome.verdict = reduced.verdict;
        outcome.notes = "block collapse, then " + to_string(reduced.method) + ": " + reduced.notes;
        if (reduced.verdict) {
            auto swap_blocks = block_swapping_reflection(group.degree());
            auto sequence = block_normalising_sequence(g, group);
            for (auto & step : *reduced.sequence)
                sequence.push_back(SwitchStep{step.vertex, swap_blocks});
            append(sequence, lift_sequence(inverse_sequence(block_normalising_sequence(h, group)),
                        reduced.homomorphism->map));
            outcome.sequence = std::move(sequence);
            outcome.homomorphism = std::move(reduced.homomorphism);
        }
        return outcome;
    }

    return oracle_switchable_hom(g, h, group, options);
}

auto ecswitch::switchable_k_colouring(const EdgeColouredGraph & g, int k, const PermGroup & group,
        const DecideOptions & options) -> DecisionOutcome
{
    if (k < 1)
        throw InvalidArgument("number of colours k must be at least 1");
    check_group(g, group);

    if (options.force_oracle)
        return oracle_switchable_k_colouring(g, k, group, options);

    if (auto j = property_t_colour(group)) {
        DecisionOutcome outcome;
        outcome.method = Method::PropertyTFastPath;
        outcome.notes = group.name() + " has property T_" + std::to_string(*j) + "; decided by "
            + std::to_string(k) + "-colourability of underlying(G)";
        if (auto colouring = underlying_colouring(g, k)) {
            auto mono = monochromatic_copy(g, *j);
            outcome.verdict = true;
            outcome.sequence = monochromatize_sequence(g, *j, group);
            outcome.target = quotient_target(mono, *colouring, k);
            outcome.homomorphism = HomWitness{std::move(*colouring)};
        }
        return outcome;
    }

    if (is_even_dihedral(group) && k <= 2) {
        DecisionOutcome outcome;
        outcome.method = Method::DihedralEvenReduction;

        if (k == 1) {
            outcome.verdict = g.size() == 0;
            outcome.notes = "1-colourable iff edgeless";
            if (outcome.verdict) {
                outcome.sequence = SwitchingSequence{};
                outcome.target = EdgeColouredGraph{g.colours(), 1, {}};
                outcome.homomorphism = HomWitness{VertexMap(g.order(), 0)};
            }
            return outcome;
        }

        auto bipartite = is_bipartite(g);
        auto to_c4 = hom_to_alternating_c4(collapse_blocks(g));
        outcome.verdict = bipartite && to_c4.verdict;
        outcome.notes = ! bipartite ? "underlying graph is not bipartite"
            : to_c4.verdict ? "block collapse maps to the alternating C_4 (propagation)"
            : "block collapse does not map to the alternating C_4: " + to_c4.notes;
        if (outcome.verdict) {
            auto [switched, side] = switch_onto_edge(to_c4.homomorphism->map, 1);
            auto swap_blocks = block_swapping_reflection(group.degree());
            auto sequence = block_normalising_sequence(g, group);
            for (auto v : switched)
                sequence.push_back(SwitchStep{v, swap_blocks});
            outcome.sequence = std::move(sequence);
            outcome.target = EdgeColouredGraph{g.colours(), 2, {{0, 1, 1}}};
            outcome.homomorphism = HomWitness{VertexMap(side.begin(), side.end())};
        }
        return outcome;
    }

    auto outcome = oracle_switchable_k_colouring(g, k, group, options);
    if (is_even_dihedral(group))
        outcome.method = Method::ExactSearch;
    return outcome;
}
