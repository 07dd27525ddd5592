#include <ecswitch/errors.hh>
#include <ecswitch/property_t.hh>

using namespace ecswitch;

using std::optional;
using std::vector;

namespace
{
    void check_colour(const PermGroup & group, Colour c)
    {
        if (c < 1 || c > group.degree())
            throw InvalidArgument("colour " + std::to_string(c) + " outside 1.." + std::to_string(group.degree()));
    }

    // first_mover[a][b] = index of the lexicographically least element
    // sending a to b, or -1
    auto first_movers(const PermGroup & group) -> vector<vector<long>>
    {
        int m = group.degree();
        vector<vector<long>> result(m + 1, vector<long>(m + 1, -1));
        auto elements = group.elements();
        for (std::size_t e = 0 ; e < elements.size() ; ++e)
            for (Colour a = 1 ; a <= m ; ++a) {
                auto & slot = result[a][elements[e](a)];
                if (slot < 0)
                    slot = static_cast<long>(e);
            }
        return result;
    }

    auto search(const PermGroup & group, const vector<vector<long>> & movers, Colour i, Colour j) -> optional<PropertyTWitness>
    {
        for (auto & alpha : group.elements()) {
            if (alpha(i) != j)
                continue;
            for (auto k : alpha.fixed_points()) {
                auto beta = movers[j][k];
                if (beta >= 0)
                    return PropertyTWitness{i, j, k, alpha, group.elements()[beta]};
            }
        }
        return std::nullopt;
    }
}

auto ecswitch::find_t_witness(const PermGroup & group, Colour i, Colour j) -> optional<PropertyTWitness>
{
    check_colour(group, i);
    check_colour(group, j);
    return search(group, first_movers(group), i, j);
}

auto ecswitch::property_tj_failure(const PermGroup & group, Colour j) -> optional<Colour>
{
    check_colour(group, j);
    auto movers = first_movers(group);
    for (Colour i = 1 ; i <= group.degree() ; ++i)
        if (! search(group, movers, i, j))
            return i;
    return std::nullopt;
}

auto ecswitch::has_property_tj(const PermGroup & group, Colour j) -> bool
{
    return ! property_tj_failure(group, j).has_value();
}

auto ecswitch::property_t_colour(const PermGroup & group) -> optional<Colour>
{
    auto movers = first_movers(group);
    for (Colour j = 1 ; j <= group.degree() ; ++j) {
        bool all = true;
        for (Colour i = 1 ; i <= group.degree() && all ; ++i)
            all = search(group, movers, i, j).has_value();
        if (all)
            return j;
    }
    return std::nullopt;
}

auto BlockStructure::quotient(const Permutation & p) const -> BlockAction
{
    if (p.degree() != m)
        throw DegreeMismatch("permutation degree " + std::to_string(p.degree()) + " does not match blocks on "
                + std::to_string(m) + " colours");
    bool preserves = true, swaps = true;
    for (Colour c = 1 ; c <= m ; ++c) {
        if (block_of(p(c)) == block_of(c))
            swaps = false;
        else
            preserves = false;
    }
    if (preserves)
        return BlockAction::Preserve;
    if (swaps)
        return BlockAction::Swap;
    throw InvalidArgument(p.to_cycle_string() + " does not respect the odd/even block system");
}

auto ecswitch::block_swapping_reflection(int m) -> Permutation
{
    if (m < 2 || m % 2 != 0)
        throw InvalidArgument("block swapping reflection needs even m >= 2");
    if (m == 2)
        return Permutation::from_cycles(2, {{1, 2}});
    // c -> 3 - c (mod m): the mirror through the midpoint of side {1, 2}
    vector<Colour> image(m);
    for (Colour c = 1 ; c <= m ; ++c)
        image[c - 1] = ((3 - c - 1) % m + m) % m + 1;
    return Permutation{std::move(image)};
}

auto ecswitch::dihedral_blocks(int m) -> BlockStructure
{
    if (m < 2 || m % 2 != 0)
        throw InvalidArgument("dihedral block system needs even m >= 2, got " + std::to_string(m));

    auto group = m == 2 ? make_named(GroupKind::Symmetric, 2) : make_named(GroupKind::Dihedral, m);

    vector<Colour> odd, even;
    for (Colour c = 1 ; c <= m ; ++c)
        (c % 2 == 1 ? odd : even).push_back(c);

    vector<Permutation> preserving;
    for (auto & p : group.elements()) {
        bool ok = true;
        for (Colour c = 1 ; c <= m && ok ; ++c)
            ok = BlockStructure::block_of(p(c)) == BlockStructure::block_of(c);
        if (ok)
            preserving.push_back(p);
    }
    auto stabilizer = generate_closure(m, std::move(preserving));

    return BlockStructure{m, std::move(odd), std::move(even), std::move(group), std::move(stabilizer)};
}

auto ecswitch::is_even_dihedral(const PermGroup & group) -> bool
{
    int m = group.degree();
    if (m < 2 || m % 2 != 0)
        return false;
    if (m == 2)
        return group.order() == 2;
    if (group.order() != static_cast<std::size_t>(2 * m))
        return false;
    return group.same_elements(make_named(GroupKind::Dihedral, m));
}
