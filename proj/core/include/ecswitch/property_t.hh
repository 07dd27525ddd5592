#ifndef ECSWITCH_PROPERTY_T_HH
#define ECSWITCH_PROPERTY_T_HH

#include <ecswitch/perm_group.hh>
#include <ecswitch/permutation.hh>

#include <optional>
#include <vector>

namespace ecswitch
{
    /// Certificate that a group has property T_{i,j}: alpha(i) == j,
    /// alpha(k) == k, beta(j) == k. Recolouring an edge xy from i to j then
    /// takes the four switches (x, alpha), (y, beta), (x, alpha^-1), (y, beta^-1).
    struct PropertyTWitness
    {
        Colour i;
        Colour j;
        Colour k;
        Permutation alpha;
        Permutation beta;
    };

    /// Deterministic search: alpha ranges over group elements in
    /// lexicographic order, k over the fixed points of alpha in ascending
    /// order, beta over group elements in lexicographic order. The first
    /// hit is returned.
    auto find_t_witness(const PermGroup & group, Colour i, Colour j) -> std::optional<PropertyTWitness>;

    /// T_{i,j} holds for every colour i.
    auto has_property_tj(const PermGroup & group, Colour j) -> bool;

    /// First i (ascending) with no T_{i,j} witness, if any.
    auto property_tj_failure(const PermGroup & group, Colour j) -> std::optional<Colour>;

    /// Least j for which the group has property T_j, if one exists.
    auto property_t_colour(const PermGroup & group) -> std::optional<Colour>;

    enum class BlockAction
    {
        Preserve,
        Swap
    };

    /// The block system {O, E} of an even dihedral group, with
    /// O = {1, 3, ..., m-1} and E = {2, 4, ..., m}. For m == 2 the
    /// "dihedral" group is S_2.
    struct BlockStructure
    {
        int m;
        std::vector<Colour> odd_block;
        std::vector<Colour> even_block;
        PermGroup group;
        PermGroup stabilizer;

        /// Image of p in the two-element quotient group. Throws
        /// InvalidArgument if p does not respect the blocks.
        auto quotient(const Permutation & p) const -> BlockAction;

        /// 1 for colours in O, 2 for colours in E.
        static auto block_of(Colour c) -> Colour { return c % 2 == 1 ? 1 : 2; }
    };

    /// Throws InvalidArgument for odd m or m < 2.
    auto dihedral_blocks(int m) -> BlockStructure;

    /// True when the group's element set is D_m for even m >= 4, or S_2.
    /// Decided by comparing element sets, not by the kind tag.
    auto is_even_dihedral(const PermGroup & group) -> bool;

    /// An element of D_m (m even) that swaps colours 1 and 2: the reflection
    /// c -> 3 - c (mod m). For m == 2 this is (1 2).
    auto block_swapping_reflection(int m) -> Permutation;
}

#endif
