#ifndef ECSWITCH_GRAPH_IO_HH
#define ECSWITCH_GRAPH_IO_HH

#include <ecswitch/graph.hh>

#include <string>
#include <string_view>

namespace ecswitch
{
    /**
     * The .ecg text format. '#' starts a comment, blank lines are ignored.
     * The first significant line is "m <int>", the second "vertices <int>",
     * then any number of "edge <u> <v> <c>" lines with 0 <= u < v < n and
     * 1 <= c <= m.
     *
     * Throws ParseError carrying the offending line number.
     */
    auto parse_ecg(std::string_view text) -> EdgeColouredGraph;

    /// Canonical form: edges sorted by (u, v), single spaces, LF endings.
    auto serialize_ecg(const EdgeColouredGraph & g) -> std::string;

    auto read_ecg_file(const std::string & path) -> EdgeColouredGraph;

    /// Whole file as a string; throws Error if it cannot be opened.
    auto read_text_file(const std::string & path) -> std::string;
}

#endif
