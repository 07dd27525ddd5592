#include <ecswitch/errors.hh>
#include <ecswitch/graph_io.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

using namespace ecswitch;

using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto tokenize(string_view line) -> vector<string_view>
    {
        vector<string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            auto start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
                ++pos;
            if (pos > start)
                tokens.push_back(line.substr(start, pos - start));
        }
        return tokens;
    }

    auto to_int(string_view token, std::size_t line, const char * what) -> int
    {
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line, string("expected an integer ") + what + ", got \"" + string(token) + "\"");
        return value;
    }
}

auto ecswitch::parse_ecg(string_view text) -> EdgeColouredGraph
{
    int m = -1, n = -1;
    vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto newline = text.find('\n', pos);
        auto line = text.substr(pos, newline == string_view::npos ? string_view::npos : newline - pos);
        pos = newline == string_view::npos ? text.size() + 1 : newline + 1;
        ++line_number;

        if (auto hash = line.find('#') ; hash != string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;

        if (m < 0) {
            if (tokens[0] != "m" || tokens.size() != 2)
                throw ParseError(line_number, "expected \"m <int>\"");
            m = to_int(tokens[1], line_number, "for m");
            if (m < 1)
                throw ParseError(line_number, "m must be at least 1");
        }
        else if (n < 0) {
            if (tokens[0] != "vertices" || tokens.size() != 2)
                throw ParseError(line_number, "expected \"vertices <int>\"");
            n = to_int(tokens[1], line_number, "for vertices");
            if (n < 0)
                throw ParseError(line_number, "vertex count must be non-negative");
        }
        else {
            if (tokens[0] != "edge" || tokens.size() != 4)
                throw ParseError(line_number, "expected \"edge <u> <v> <c>\"");
            auto u = to_int(tokens[1], line_number, "vertex");
            auto v = to_int(tokens[2], line_number, "vertex");
            auto c = to_int(tokens[3], line_number, "colour");
            if (u == v)
                throw ParseError(line_number, "loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(line_number, "vertex outside 0.." + std::to_string(n - 1));
            if (u > v)
                throw ParseError(line_number, "edge endpoints must satisfy u < v");
            if (c < 1 || c > m)
                throw ParseError(line_number, "colour " + std::to_string(c) + " outside 1.." + std::to_string(m));
            if (! seen.emplace(u, v).second)
                throw ParseError(line_number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back(Edge{u, v, c});
        }
    }

    if (m < 0)
        throw ParseError(line_number, "missing \"m <int>\" line");
    if (n < 0)
        throw ParseError(line_number, "missing \"vertices <int>\" line");

    return EdgeColouredGraph{m, n, std::move(edges)};
}

auto ecswitch::serialize_ecg(const EdgeColouredGraph & g) -> string
{
    std::ostringstream out;
    out << "m " << g.colours() << '\n';
    out << "vertices " << g.order() << '\n';
    for (auto & e : g.edges())
        out << "edge " << e.u << ' ' << e.v << ' ' << e.colour << '\n';
    return out.str();
}

auto ecswitch::read_text_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto ecswitch::read_ecg_file(const string & path) -> EdgeColouredGraph
{
    return parse_ecg(read_text_file(path));
}
