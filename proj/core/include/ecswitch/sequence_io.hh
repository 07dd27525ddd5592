#ifndef ECSWITCH_SEQUENCE_IO_HH
#define ECSWITCH_SEQUENCE_IO_HH

#include <ecswitch/switching.hh>

#include <optional>
#include <string>
#include <string_view>

namespace ecswitch
{
    /// The .seq witness format: one "<vertex> <cycle-notation>" step per
    /// line, applied top to bottom, e.g. "0 (1 2)". '#' starts a comment.
    /// Permutations are read with degree m. Throws ParseError.
    auto parse_sequence(std::string_view text, int m) -> SwitchingSequence;

    auto serialize_sequence(const SwitchingSequence & sequence) -> std::string;

    /// Comment line "# map v0 v1 ... v(n-1)" recording a vertex map next to
    /// a sequence, so witness files stay replayable by parse_sequence.
    auto serialize_map_comment(const VertexMap & map) -> std::string;

    /// The first "# map" comment in text, if any.
    auto parse_map_comment(std::string_view text) -> std::optional<VertexMap>;
}

#endif
