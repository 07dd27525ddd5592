#ifndef ECSWITCH_PERMUTATION_HH
#define ECSWITCH_PERMUTATION_HH

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecswitch
{
    /// Edge colours are 1-based: a graph with m colours uses {1, ..., m}.
    using Colour = int;

    /**
     * A permutation of the colours {1, ..., m}.
     *
     * Composition convention: compose(p, q) applies q first and then p, so
     * compose(p, q)(c) == p(q(c)). Everything in the library that builds a
     * product of group elements goes through compose() and follows this rule.
     *
     * Ordering (operator<=>) is lexicographic on the image sequence
     * (p(1), p(2), ..., p(m)), which makes the identity the least element of
     * any degree. Witness searches rely on this order for reproducibility.
     */
    class Permutation
    {
        private:
            std::vector<Colour> _image;

        public:
            /// image[c - 1] is the image of colour c. Throws InvalidArgument
            /// unless image is a bijection on {1, ..., image.size()}.
            explicit Permutation(std::vector<Colour> image);

            static auto identity(int m) -> Permutation;

            /// Builds a permutation from disjoint or overlapping cycles, each
            /// given in 1-based notation. Cycles are applied right to left.
            static auto from_cycles(int m, const std::vector<std::vector<Colour>> & cycles) -> Permutation;

            /// Parses cycle notation such as "(1 2)(3 4)" or "()" for the identity.
            static auto parse_cycles(int m, std::string_view text) -> Permutation;

            auto degree() const -> int { return static_cast<int>(_image.size()); }

            auto operator() (Colour c) const -> Colour { return _image[c - 1]; }

            auto images() const -> std::span<const Colour> { return _image; }

            auto is_identity() const -> bool;

            auto fixed_points() const -> std::vector<Colour>;

            /// Canonical cycle notation: each cycle starts at its least
            /// element, cycles are sorted by that element, fixed points are
            /// omitted, and the identity prints as "()".
            auto to_cycle_string() const -> std::string;

            auto operator== (const Permutation &) const -> bool = default;
            auto operator<=> (const Permutation &) const -> std::strong_ordering = default;
    };

    /// compose(p, q)(c) == p(q(c)); throws DegreeMismatch if degrees differ.
    auto compose(const Permutation & p, const Permutation & q) -> Permutation;

    auto inverse(const Permutation & p) -> Permutation;

    struct PermutationHash
    {
        auto operator() (const Permutation & p) const -> std::size_t;
    };
}

#endif
