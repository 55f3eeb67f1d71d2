#include <wordrep/errors.hh>
#include <wordrep/subiso.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace wordrep;

namespace
{
    constexpr VertexId unmapped = static_cast<VertexId>(-1);

    struct Search
    {
        const LabeledGraph & pattern;
        const LabeledGraph & host;
        vector<VertexId> order;
        vector<VertexId> map;
        vector<bool> host_used;

        auto consistent(VertexId p, VertexId h, size_t depth) const -> bool
        {
            if (host_used[h] || host.degree(h) < pattern.degree(p))
                return false;
            for (size_t d = 0; d < depth; ++d) {
                auto q = order[d];
                if (pattern.adjacent(p, q) != host.adjacent(h, map[q]))
                    return false;
            }
            return true;
        }

        auto extend(size_t depth) -> bool
        {
            if (depth == order.size())
                return true;
            auto p = order[depth];
            if (map[p] != unmapped) {
                // anchored
                auto h = map[p];
                if (! consistent(p, h, depth))
                    return false;
                host_used[h] = true;
                if (extend(depth + 1))
                    return true;
                host_used[h] = false;
                return false;
            }
            for (VertexId h = 0; h < host.size(); ++h) {
                if (! consistent(p, h, depth))
                    continue;
                map[p] = h;
                host_used[h] = true;
                if (extend(depth + 1))
                    return true;
                host_used[h] = false;
                map[p] = unmapped;
            }
            return false;
        }
    };
}

auto wordrep::find_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & host, const Anchors & anchors)
    -> optional<Embedding>
{
    vector<VertexId> map(pattern.size(), unmapped);
    vector<VertexId> order;
    vector<bool> image_taken(host.size(), false);
    for (auto & [p_label, h_label] : anchors) {
        auto p = pattern.vertex(p_label);
        auto h = host.vertex(h_label);
        if (map[p] != unmapped)
            throw std::invalid_argument("pattern vertex '" + p_label + "' anchored twice");
        if (image_taken[h])
            throw std::invalid_argument("host vertex '" + h_label + "' is the image of two anchors");
        map[p] = h;
        image_taken[h] = true;
        order.push_back(p);
    }

    if (pattern.size() > host.size())
        return nullopt;

    vector<VertexId> rest;
    for (VertexId p = 0; p < pattern.size(); ++p)
        if (map[p] == unmapped)
            rest.push_back(p);
    std::stable_sort(rest.begin(), rest.end(), [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    Search s{pattern, host, order, map, vector<bool>(host.size(), false)};
    if (! s.extend(0))
        return nullopt;
    return Embedding{std::move(s.map)};
}

auto wordrep::contains_induced(const LabeledGraph & pattern, const LabeledGraph & host) -> bool
{
    return find_induced_embedding(pattern, host).has_value();
}

auto wordrep::is_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> bool
{
    if (e.map.size() != pattern.size())
        return false;
    vector<bool> used(host.size(), false);
    for (auto h : e.map) {
        if (h >= host.size() || used[h])
            return false;
        used[h] = true;
    }
    for (VertexId a = 0; a < pattern.size(); ++a)
        for (VertexId b = a + 1; b < pattern.size(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(e.map[a], e.map[b]))
                return false;
    return true;
}

auto wordrep::embedded_image(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> LabeledGraph
{
    vector<Edge> edges;
    for (VertexId a = 0; a < pattern.size(); ++a)
        for (VertexId b = a + 1; b < pattern.size(); ++b)
            if (host.adjacent(e.map[a], e.map[b]))
                edges.push_back(Edge{a, b});
    return LabeledGraph::from_indices(pattern.labels(), edges);
}
