#include <ecswitch/errors.hh>
#include <ecswitch/sequence_io.hh>

#include <charconv>
#include <sstream>

using namespace ecswitch;

using std::optional;
using std::string;
using std::string_view;

namespace
{
    auto trim(string_view s) -> string_view
    {
        auto first = s.find_first_not_of(" \t\r");
        if (first == string_view::npos)
            return {};
        auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    template <typename F_>
    void for_each_line(string_view text, F_ && f)
    {
        std::size_t line_number = 0, pos = 0;
        while (pos <= text.size()) {
            auto newline = text.find('\n', pos);
            auto line = text.substr(pos, newline == string_view::npos ? string_view::npos : newline - pos);
            pos = newline == string_view::npos ? text.size() + 1 : newline + 1;
            f(++line_number, line);
        }
    }
}

auto ecswitch::parse_sequence(string_view text, int m) -> SwitchingSequence
{
    SwitchingSequence result;
    for_each_line(text, [&] (std::size_t line_number, string_view line) {
        if (auto hash = line.find('#') ; hash != string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            return;

        Vertex v = 0;
        auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || end == line.data())
            throw ParseError(line_number, "expected \"<vertex> <permutation>\"");
        if (v < 0)
            throw ParseError(line_number, "negative vertex index");
        auto rest = trim(line.substr(static_cast<std::size_t>(end - line.data())));
        if (rest.empty())
            throw ParseError(line_number, "missing permutation");
        try {
            result.push_back(SwitchStep{v, Permutation::parse_cycles(m, rest)});
        }
        catch (const InvalidArgument & e) {
            throw ParseError(line_number, e.what());
        }
    });
    return result;
}

auto ecswitch::serialize_sequence(const SwitchingSequence & sequence) -> string
{
    std::ostringstream out;
    for (auto & step : sequence)
        out << step.vertex << ' ' << step.permutation.to_cycle_string() << '\n';
    return out.str();
}

auto ecswitch::serialize_map_comment(const VertexMap & map) -> string
{
    std::ostringstream out;
    out << "# map";
    for (auto v : map)
        out << ' ' << v;
    out << '\n';
    return out.str();
}

auto ecswitch::parse_map_comment(string_view text) -> optional<VertexMap>
{
    optional<VertexMap> result;
    for_each_line(text, [&] (std::size_t line_number, string_view line) {
        if (result)
            return;
        line = trim(line);
        if (! line.starts_with("# map"))
            return;
        std::istringstream in{string(line.substr(5))};
        VertexMap map;
        string token;
        while (in >> token) {
            Vertex v = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError(line_number, "bad vertex in map comment");
            map.push_back(v);
        }
        result = std::move(map);
    });
    return result;
}
