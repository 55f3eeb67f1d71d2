#include <wordrep/errors.hh>
#include <wordrep/graph.hh>

#include <algorithm>
#include <stdexcept>

using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

using namespace wordrep;

auto LabeledGraph::from_indices(vector<string> labels, const vector<Edge> & edges) -> LabeledGraph
{
    LabeledGraph g;
    g._labels = std::move(labels);
    for (VertexId v = 0; v < g._labels.size(); ++v)
        if (! g._index_of.emplace(g._labels[v], v).second)
            throw DuplicateLabel(g._labels[v]);

    auto n = g._labels.size();
    g._neighbours.assign(n, VertexSet(n));
    for (auto & e : edges) {
        if (e.u >= n || e.v >= n)
            throw UnknownEndpoint("#" + to_string(std::max(e.u, e.v)));
        if (e.u == e.v)
            throw SelfLoop(g._labels[e.u]);
        auto n_e = Edge::between(e.u, e.v);
        g._edges.push_back(n_e);
        g._neighbours[n_e.u].set(n_e.v);
        g._neighbours[n_e.v].set(n_e.u);
    }
    std::sort(g._edges.begin(), g._edges.end());
    g._edges.erase(std::unique(g._edges.begin(), g._edges.end()), g._edges.end());
    return g;
}

auto LabeledGraph::from_labels(vector<string> labels, const vector<pair<string, string>> & edges) -> LabeledGraph
{
    std::unordered_map<string, VertexId> index_of;
    for (VertexId v = 0; v < labels.size(); ++v)
        if (! index_of.emplace(labels[v], v).second)
            throw DuplicateLabel(labels[v]);

    vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (auto & [a, b] : edges) {
        auto ia = index_of.find(a), ib = index_of.find(b);
        if (ia == index_of.end())
            throw UnknownEndpoint(a);
        if (ib == index_of.end())
            throw UnknownEndpoint(b);
        if (ia->second == ib->second)
            throw SelfLoop(a);
        indexed.push_back(Edge::between(ia->second, ib->second));
    }
    return from_indices(std::move(labels), indexed);
}

auto LabeledGraph::with_numbered_vertices(size_t n, const vector<Edge> & edges) -> LabeledGraph
{
    vector<string> labels;
    for (size_t v = 0; v < n; ++v)
        labels.push_back(to_string(v));
    return from_indices(std::move(labels), edges);
}

auto LabeledGraph::find(string_view label) const -> optional<VertexId>
{
    auto it = _index_of.find(string{label});
    if (it == _index_of.end())
        return nullopt;
    return it->second;
}

auto LabeledGraph::vertex(string_view label) const -> VertexId
{
    if (auto v = find(label))
        return *v;
    throw UnknownEndpoint(string{label});
}

auto LabeledGraph::edge_index(VertexId a, VertexId b) const -> optional<size_t>
{
    if (a == b || a >= size() || b >= size() || ! adjacent(a, b))
        return nullopt;
    auto e = Edge::between(a, b);
    auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
    return static_cast<size_t>(it - _edges.begin());
}

auto wordrep::build_graph(vector<string> labels, const vector<pair<string, string>> & edges) -> LabeledGraph
{
    return LabeledGraph::from_labels(std::move(labels), edges);
}

auto wordrep::build_wheel(int m) -> LabeledGraph
{
    if (m < 3)
        throw std::invalid_argument("wheel needs a rim of at least 3 vertices, got " + to_string(m));

    vector<string> labels;
    for (int i = 0; i < m; ++i)
        labels.push_back("c" + to_string(i));
    labels.push_back("h");

    auto hub = static_cast<VertexId>(m);
    vector<Edge> edges;
    for (VertexId i = 0; i < static_cast<VertexId>(m); ++i) {
        edges.push_back(Edge::between(i, (i + 1) % m));
        edges.push_back(Edge::between(i, hub));
    }
    return LabeledGraph::from_indices(std::move(labels), edges);
}

auto wordrep::induced_subgraph(const LabeledGraph & g, const vector<VertexId> & keep) -> LabeledGraph
{
    vector<VertexId> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()), sorted_keep.end());

    vector<long> new_index(g.size(), -1);
    vector<string> labels;
    for (auto v : sorted_keep) {
        if (v >= g.size())
            throw std::out_of_range("induced_subgraph: unknown vertex id " + to_string(v));
        new_index[v] = static_cast<long>(labels.size());
        labels.push_back(g.label(v));
    }

    vector<Edge> edges;
    for (auto & e : g.edges())
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0)
            edges.push_back(Edge::between(static_cast<VertexId>(new_index[e.u]), static_cast<VertexId>(new_index[e.v])));
    return LabeledGraph::from_indices(std::move(labels), edges);
}

auto wordrep::max_degree_vertex(const LabeledGraph & g) -> VertexId
{
    if (g.size() == 0)
        throw std::invalid_argument("max_degree_vertex: empty graph");
    VertexId best = 0;
    for (VertexId v = 1; v < g.size(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

auto wordrep::is_proper_coloring(const LabeledGraph & g, const ColorAssignment & c) -> bool
{
    if (c.colors.size() != g.size())
        throw std::invalid_argument("coloring covers " + to_string(c.colors.size()) + " vertices, graph has " + to_string(g.size()));
    return std::all_of(g.edges().begin(), g.edges().end(),
        [&](const Edge & e) { return c.colors[e.u] != c.colors[e.v]; });
}

auto wordrep::connected_components(const LabeledGraph & g) -> vector<vector<VertexId>>
{
    vector<vector<VertexId>> result;
    vector<bool> seen(g.size(), false);
    for (VertexId start = 0; start < g.size(); ++start) {
        if (seen[start])
            continue;
        vector<VertexId> component{start}, stack{start};
        seen[start] = true;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            g.neighbours(v).for_each([&](size_t w) {
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(static_cast<VertexId>(w));
                    stack.push_back(static_cast<VertexId>(w));
                }
            });
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

auto wordrep::permute_vertices(const LabeledGraph & g, const vector<VertexId> & perm) -> LabeledGraph
{
    if (perm.size() != g.size())
        throw std::invalid_argument("permute_vertices: permutation size mismatch");
    vector<string> labels(g.size());
    for (VertexId v = 0; v < g.size(); ++v)
        labels.at(perm[v]) = g.label(v);
    vector<Edge> edges;
    for (auto & e : g.edges())
        edges.push_back(Edge::between(perm[e.u], perm[e.v]));
    return LabeledGraph::from_indices(std::move(labels), edges);
}
