#include <ecswitch/errors.hh>
#include <ecswitch/permutation.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

using namespace ecswitch;

using std::string;
using std::string_view;
using std::vector;

Permutation::Permutation(vector<Colour> image) :
    _image(std::move(image))
{
    if (_image.empty())
        throw InvalidArgument("permutation degree must be positive");

    vector<bool> seen(_image.size(), false);
    for (auto c : _image) {
        if (c < 1 || c > degree())
            throw InvalidArgument("permutation image " + std::to_string(c) + " outside 1.." + std::to_string(degree()));
        if (seen[c - 1])
            throw InvalidArgument("permutation image " + std::to_string(c) + " repeated");
        seen[c - 1] = true;
    }
}

auto Permutation::identity(int m) -> Permutation
{
    if (m < 1)
        throw InvalidArgument("permutation degree must be positive");
    vector<Colour> image(m);
    for (int c = 1 ; c <= m ; ++c)
        image[c - 1] = c;
    return Permutation{std::move(image)};
}

auto Permutation::from_cycles(int m, const vector<vector<Colour>> & cycles) -> Permutation
{
    auto result = identity(m);
    for (auto & cycle : cycles) {
        if (cycle.empty())
            continue;
        vector<Colour> image(m);
        for (int c = 1 ; c <= m ; ++c)
            image[c - 1] = c;
        vector<bool> used(m + 1, false);
        for (auto c : cycle) {
            if (c < 1 || c > m)
                throw InvalidArgument("cycle entry " + std::to_string(c) + " outside 1.." + std::to_string(m));
            if (used[c])
                throw InvalidArgument("cycle entry " + std::to_string(c) + " repeated within a cycle");
            used[c] = true;
        }
        for (std::size_t t = 0 ; t < cycle.size() ; ++t)
            image[cycle[t] - 1] = cycle[(t + 1) % cycle.size()];
        // the rightmost cycle acts first
        result = compose(result, Permutation{std::move(image)});
    }
    return result;
}

auto Permutation::parse_cycles(int m, string_view text) -> Permutation
{
    vector<vector<Colour>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    skip_space();
    if (pos == text.size())
        throw InvalidArgument("empty permutation; write () for the identity");

    while (pos < text.size()) {
        if (text[pos] != '(')
            throw InvalidArgument("expected '(' in permutation \"" + string(text) + "\"");
        ++pos;
        vector<Colour> cycle;
        while (true) {
            skip_space();
            if (pos == text.size())
                throw InvalidArgument("unterminated cycle in \"" + string(text) + "\"");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            Colour c = 0;
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), c);
            if (ec != std::errc{} || end == text.data() + pos)
                throw InvalidArgument("expected a colour in \"" + string(text) + "\"");
            pos = static_cast<std::size_t>(end - text.data());
            cycle.push_back(c);
        }
        cycles.push_back(std::move(cycle));
        skip_space();
    }

    return from_cycles(m, cycles);
}

auto Permutation::is_identity() const -> bool
{
    for (int c = 1 ; c <= degree() ; ++c)
        if (_image[c - 1] != c)
            return false;
    return true;
}

auto Permutation::fixed_points() const -> vector<Colour>
{
    vector<Colour> result;
    for (int c = 1 ; c <= degree() ; ++c)
        if (_image[c - 1] == c)
            result.push_back(c);
    return result;
}

auto Permutation::to_cycle_string() const -> string
{
    std::ostringstream out;
    vector<bool> done(degree() + 1, false);
    bool any = false;
    for (int c = 1 ; c <= degree() ; ++c) {
        if (done[c] || _image[c - 1] == c)
            continue;
        any = true;
        out << '(';
        int d = c;
        bool first = true;
        do {
            if (! first)
                out << ' ';
            first = false;
            out << d;
            done[d] = true;
            d = _image[d - 1];
        } while (d != c);
        out << ')';
    }
    if (! any)
        return "()";
    return out.str();
}

auto ecswitch::compose(const Permutation & p, const Permutation & q) -> Permutation
{
    if (p.degree() != q.degree())
        throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree())
                + " and " + std::to_string(q.degree()));
    vector<Colour> image(p.degree());
    for (int c = 1 ; c <= p.degree() ; ++c)
        image[c - 1] = p(q(c));
    return Permutation{std::move(image)};
}

auto ecswitch::inverse(const Permutation & p) -> Permutation
{
    vector<Colour> image(p.degree());
    for (int c = 1 ; c <= p.degree() ; ++c)
        image[p(c) - 1] = c;
    return Permutation{std::move(image)};
}

auto PermutationHash::operator() (const Permutation & p) const -> std::size_t
{
    std::size_t h = 1469598103934665603ULL;
    for (auto c : p.images()) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}
