#ifndef ECSWITCH_PERM_GROUP_HH
#define ECSWITCH_PERM_GROUP_HH

#include <ecswitch/permutation.hh>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ecswitch
{
    enum class GroupKind
    {
        Symmetric,
        Alternating,
        Dihedral,
        Cyclic,
        Custom
    };

    auto to_string(GroupKind kind) -> std::string;

    /// 10!, the largest closure generate_closure() will build by default.
    inline constexpr std::size_t default_closure_cap = 3628800;

    /**
     * A finite subgroup of S_m, stored as its full element list.
     *
     * Elements are kept sorted lexicographically by image sequence, so
     * elements()[0] is always the identity and iteration order is
     * deterministic. Instances are immutable once built.
     */
    class PermGroup
    {
        private:
            int _degree;
            GroupKind _kind;
            std::vector<Permutation> _generators;
            std::vector<Permutation> _elements;

            PermGroup(int degree, GroupKind kind, std::vector<Permutation> generators, std::vector<Permutation> elements);

            friend auto generate_closure(int, std::vector<Permutation>, std::size_t) -> PermGroup;
            friend auto make_named(GroupKind, int) -> PermGroup;

        public:
            auto degree() const -> int { return _degree; }
            auto kind() const -> GroupKind { return _kind; }
            auto order() const -> std::size_t { return _elements.size(); }
            auto generators() const -> std::span<const Permutation> { return _generators; }
            auto elements() const -> std::span<const Permutation> { return _elements; }

            auto contains(const Permutation & p) const -> bool;

            /// Index of p in elements(); throws InvalidArgument if p is not a member.
            auto index_of(const Permutation & p) const -> std::size_t;

            /// Same element set (generators and kind tag are not compared).
            auto same_elements(const PermGroup & other) const -> bool;

            /// Short human-readable name: S4, A4, D4, Z4, or "custom group of order 6 on 3 colours".
            auto name() const -> std::string;
    };

    /// Smallest subgroup of S_m containing the generators, enumerated by
    /// breadth-first closure. Throws CapExceeded once more than cap
    /// elements have been found, DegreeMismatch for a generator of the
    /// wrong degree.
    auto generate_closure(int m, std::vector<Permutation> generators,
            std::size_t cap = default_closure_cap) -> PermGroup;

    /**
     * Named groups with canonical generators:
     *  - Symmetric, m >= 2: (1 2) and (1 2 ... m)
     *  - Alternating, m >= 3: the 3-cycles (1 2 k), 3 <= k <= m
     *  - Dihedral, m >= 3: the rotation (1 2 ... m) and the reflection fixing 1,
     *    i.e. symmetries of the m-gon with vertices 1..m in cyclic order
     *  - Cyclic, m >= 2: (1 2 ... m)
     * Throws InvalidArgument below the minimum, or for Custom.
     */
    auto make_named(GroupKind kind, int m) -> PermGroup;

    /// Reflection of the m-gon fixing vertex k: c -> 2k - c (mod m, 1-based).
    auto dihedral_reflection_fixing(int m, Colour k) -> Permutation;

    /// The m-cycle (1 2 ... m).
    auto long_cycle(int m) -> Permutation;
}

#endif
