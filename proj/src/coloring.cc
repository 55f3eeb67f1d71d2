#include <wordrep/coloring.hh>
#include <wordrep/errors.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace wordrep;

auto wordrep::colour_name(Colour c) -> string_view
{
    switch (c) {
    case Colour::Red: return "Red";
    case Colour::Blue: return "Blue";
    case Colour::Green: return "Green";
    }
    return "?";
}

auto wordrep::classify_binary_vertex(string_view label) -> Colour
{
    if (label.empty())
        throw std::invalid_argument("classify_binary_vertex: empty label");
    for (auto c : label)
        if (c != '0' && c != '1')
            throw std::invalid_argument("classify_binary_vertex: non-binary label '" + string{label} + "'");

    auto last = label.back();
    size_t run = 0;
    for (auto it = label.rbegin(); it != label.rend() && *it == last; ++it)
        ++run;

    if (run % 2 == 0)
        return Colour::Red;
    return last == '0' ? Colour::Blue : Colour::Green;
}

auto wordrep::color_s_n_2(int n, size_t vertex_limit) -> pair<SimplifiedDeBruijnGraph, ColorAssignment>
{
    auto s = build_simplified(n, 2, vertex_limit);
    ColorAssignment colouring;
    for (auto & label : s.graph.labels())
        colouring.colors.push_back(static_cast<int>(classify_binary_vertex(label)));

    if (! is_proper_coloring(s.graph, colouring))
        throw InternalPropernessViolation("trailing-run colouring of S(" + std::to_string(n) + ",2) is not proper");
    return {std::move(s), std::move(colouring)};
}

namespace
{
    auto colourable(const LabeledGraph & g, const vector<VertexId> & order, size_t depth, int colours, vector<int> & assigned) -> bool
    {
        if (depth == order.size())
            return true;
        auto v = order[depth];
        // Symmetry: never open more than one new colour at a time.
        int highest = -1;
        for (size_t d = 0; d < depth; ++d)
            highest = std::max(highest, assigned[order[d]]);
        for (int c = 0; c <= std::min(colours - 1, highest + 1); ++c) {
            bool clash = false;
            g.neighbours(v).for_each([&](size_t w) {
                if (assigned[w] == c)
                    clash = true;
            });
            if (clash)
                continue;
            assigned[v] = c;
            if (colourable(g, order, depth + 1, colours, assigned))
                return true;
            assigned[v] = -1;
        }
        return false;
    }
}

auto wordrep::exact_chromatic_number(const LabeledGraph & g, int max_colors, size_t vertex_limit) -> optional<int>
{
    if (g.size() > vertex_limit)
        throw SizeLimitExceeded("exact_chromatic_number: " + std::to_string(g.size()) + " vertices exceeds limit " + std::to_string(vertex_limit));
    if (g.size() == 0)
        return 0;

    vector<VertexId> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    for (int c = 1; c <= max_colors; ++c) {
        vector<int> assigned(g.size(), -1);
        if (colourable(g, order, 0, c, assigned))
            return c;
    }
    return nullopt;
}
