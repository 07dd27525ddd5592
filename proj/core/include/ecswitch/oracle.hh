#ifndef ECSWITCH_ORACLE_HH
#define ECSWITCH_ORACLE_HH

#include <ecswitch/graph.hh>
#include <ecswitch/perm_group.hh>
#include <ecswitch/switching.hh>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ecswitch
{
    inline constexpr std::size_t default_state_cap = 2000000;

    struct OracleOptions
    {
        /// Exceeding this many discovered signatures throws CapExceeded.
        std::size_t state_cap = default_state_cap;

        /// Expand only by the group's generators instead of every element.
        /// The reachable set is the same; witnesses get longer.
        bool generators_only = false;
    };

    /**
     * The signatures reachable from a fixed labelled graph by switching,
     * found by breadth-first search over the auxiliary graph whose vertices
     * are signatures on base().edges() and whose arcs are single switches.
     *
     * States are numbered in discovery order; state 0 is the base signature.
     * Each state keeps a link to the state it was first reached from, so
     * path_to() returns a shortest switching sequence. Expansion order is
     * vertices ascending, then group elements in lexicographic order, which
     * makes the numbering and every witness deterministic.
     */
    class SwitchClass
    {
        private:
            struct Link
            {
                std::size_t parent;
                Vertex vertex;
                std::uint32_t move;
            };

            EdgeColouredGraph _base;
            std::vector<Permutation> _moves;
            std::deque<std::string> _states;
            std::unordered_map<std::string_view, std::size_t> _index;
            std::vector<Link> _links;
            bool _complete = false;

            SwitchClass(EdgeColouredGraph base, std::vector<Permutation> moves);

            auto add(std::string && state, Link link) -> std::pair<std::size_t, bool>;
            auto pack(std::span<const Colour> signature) const -> std::string;

            friend auto explore_signatures(const EdgeColouredGraph &, const PermGroup &, const OracleOptions &,
                    const std::function<bool (std::span<const Colour>)> &) -> std::pair<SwitchClass, std::optional<std::size_t>>;

        public:
            SwitchClass(const SwitchClass &) = delete;
            SwitchClass(SwitchClass &&) = default;
            auto operator= (const SwitchClass &) -> SwitchClass & = delete;
            auto operator= (SwitchClass &&) -> SwitchClass & = default;

            auto base() const -> const EdgeColouredGraph & { return _base; }
            auto size() const -> std::size_t { return _states.size(); }

            /// False when exploration stopped early on a predicate hit.
            auto complete() const -> bool { return _complete; }

            auto signature(std::size_t state) const -> std::vector<Colour>;
            auto member(std::size_t state) const -> EdgeColouredGraph;

            auto find(std::span<const Colour> signature) const -> std::optional<std::size_t>;
            auto contains(std::span<const Colour> signature) const -> bool { return find(signature).has_value(); }

            /// Shortest sequence transforming base() into the given state.
            auto path_to(std::size_t state) const -> SwitchingSequence;
    };

    /// Full breadth-first closure. Throws CapExceeded.
    auto reachable_signatures(const EdgeColouredGraph & g, const PermGroup & group,
            const OracleOptions & options = {}) -> SwitchClass;

    /// Breadth-first exploration that stops at the first discovered state
    /// whose signature satisfies stop (the base state is tested first).
    /// Returns the explored part and the index of the hit, if any.
    auto explore_signatures(const EdgeColouredGraph & g, const PermGroup & group, const OracleOptions & options,
            const std::function<bool (std::span<const Colour>)> & stop) -> std::pair<SwitchClass, std::optional<std::size_t>>;
}

#endif
