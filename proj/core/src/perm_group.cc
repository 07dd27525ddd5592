#include <ecswitch/errors.hh>
#include <ecswitch/perm_group.hh>

#include <algorithm>
#include <deque>
#include <unordered_set>

using namespace ecswitch;

using std::string;
using std::vector;

auto ecswitch::to_string(GroupKind kind) -> string
{
    switch (kind) {
        case GroupKind::Symmetric: return "Symmetric";
        case GroupKind::Alternating: return "Alternating";
        case GroupKind::Dihedral: return "Dihedral";
        case GroupKind::Cyclic: return "Cyclic";
        case GroupKind::Custom: return "Custom";
    }
    return "Custom";
}

PermGroup::PermGroup(int degree, GroupKind kind, vector<Permutation> generators, vector<Permutation> elements) :
    _degree(degree),
    _kind(kind),
    _generators(std::move(generators)),
    _elements(std::move(elements))
{
}

auto PermGroup::contains(const Permutation & p) const -> bool
{
    if (p.degree() != _degree)
        return false;
    return std::binary_search(_elements.begin(), _elements.end(), p);
}

auto PermGroup::index_of(const Permutation & p) const -> std::size_t
{
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p)
        throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in " + name());
    return static_cast<std::size_t>(it - _elements.begin());
}

auto PermGroup::same_elements(const PermGroup & other) const -> bool
{
    return _degree == other._degree && _elements == other._elements;
}

auto PermGroup::name() const -> string
{
    auto m = std::to_string(_degree);
    switch (_kind) {
        case GroupKind::Symmetric: return "S" + m;
        case GroupKind::Alternating: return "A" + m;
        case GroupKind::Dihedral: return "D" + m;
        case GroupKind::Cyclic: return "Z" + m;
        case GroupKind::Custom: break;
    }
    return "custom group of order " + std::to_string(order()) + " on " + m + " colours";
}

namespace
{
    auto closure_elements(int m, const vector<Permutation> & generators, std::size_t cap) -> vector<Permutation>
    {
        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> queue;

        auto id = Permutation::identity(m);
        seen.insert(id);
        queue.push_back(id);

        while (! queue.empty()) {
            auto current = std::move(queue.front());
            queue.pop_front();
            for (auto & g : generators) {
                auto next = compose(g, current);
                if (seen.insert(next).second) {
                    if (seen.size() > cap)
                        throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
                    queue.push_back(std::move(next));
                }
            }
        }

        vector<Permutation> result(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
        return result;
    }
}

auto ecswitch::generate_closure(int m, vector<Permutation> generators, std::size_t cap) -> PermGroup
{
    if (m < 1)
        throw InvalidArgument("group degree must be positive");
    for (auto & g : generators)
        if (g.degree() != m)
            throw DegreeMismatch("generator " + g.to_cycle_string() + " has degree " + std::to_string(g.degree())
                    + ", expected " + std::to_string(m));

    auto elements = closure_elements(m, generators, cap);
    return PermGroup{m, GroupKind::Custom, std::move(generators), std::move(elements)};
}

auto ecswitch::long_cycle(int m) -> Permutation
{
    vector<Colour> image(m);
    for (int c = 1 ; c <= m ; ++c)
        image[c - 1] = c % m + 1;
    return Permutation{std::move(image)};
}

auto ecswitch::dihedral_reflection_fixing(int m, Colour k) -> Permutation
{
    if (k < 1 || k > m)
        throw InvalidArgument("reflection axis " + std::to_string(k) + " outside 1.." + std::to_string(m));
    vector<Colour> image(m);
    for (int c = 1 ; c <= m ; ++c) {
        // work in residues 0..m-1
        int r = ((2 * (k - 1) - (c - 1)) % m + m) % m;
        image[c - 1] = r + 1;
    }
    return Permutation{std::move(image)};
}

auto ecswitch::make_named(GroupKind kind, int m) -> PermGroup
{
    auto require = [&] (int minimum) {
        if (m < minimum)
            throw InvalidArgument(to_string(kind) + " group needs m >= " + std::to_string(minimum)
                    + ", got " + std::to_string(m));
    };

    vector<Permutation> generators;
    switch (kind) {
        case GroupKind::Symmetric:
            require(2);
            generators.push_back(Permutation::from_cycles(m, {{1, 2}}));
            if (m > 2)
                generators.push_back(long_cycle(m));
            break;

        case GroupKind::Alternating:
            require(3);
            for (int k = 3 ; k <= m ; ++k)
                generators.push_back(Permutation::from_cycles(m, {{1, 2, k}}));
            break;

        case GroupKind::Dihedral:
            require(3);
            generators.push_back(long_cycle(m));
            generators.push_back(dihedral_reflection_fixing(m, 1));
            break;

        case GroupKind::Cyclic:
            require(2);
            generators.push_back(long_cycle(m));
            break;

        case GroupKind::Custom:
            throw InvalidArgument("make_named needs a named group kind");
    }

    auto elements = closure_elements(m, generators, default_closure_cap);
    return PermGroup{m, kind, std::move(generators), std::move(elements)};
}
