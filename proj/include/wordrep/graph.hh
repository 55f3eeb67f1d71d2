#ifndef WORDREP_GUARD_WORDREP_GRAPH_HH
#define WORDREP_GUARD_WORDREP_GRAPH_HH 1

#include <wordrep/vertex_set.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordrep
{
    using VertexId = std::uint32_t;

    /// An unordered vertex pair, always normalised so that u < v.
    struct Edge
    {
        VertexId u, v;

        static auto between(VertexId a, VertexId b) -> Edge { return a < b ? Edge{a, b} : Edge{b, a}; }

        auto operator<=>(const Edge &) const = default;
    };

    /// Simple undirected graph on dense vertex indices with unique string labels.
    /// Immutable once built.
    class LabeledGraph
    {
    private:
        std::vector<std::string> _labels;
        std::unordered_map<std::string, VertexId> _index_of;
        std::vector<Edge> _edges;
        std::vector<VertexSet> _neighbours;

    public:
        LabeledGraph() = default;

        /// Validates and deduplicates; throws DuplicateLabel, UnknownEndpoint or SelfLoop.
        static auto from_labels(std::vector<std::string> labels,
            const std::vector<std::pair<std::string, std::string>> & edges) -> LabeledGraph;

        static auto from_indices(std::vector<std::string> labels, const std::vector<Edge> & edges) -> LabeledGraph;

        /// Labels "0".."n-1".
        static auto with_numbered_vertices(std::size_t n, const std::vector<Edge> & edges) -> LabeledGraph;

        auto size() const -> std::size_t { return _labels.size(); }
        auto edge_count() const -> std::size_t { return _edges.size(); }

        auto labels() const -> const std::vector<std::string> & { return _labels; }
        auto label(VertexId v) const -> const std::string & { return _labels.at(v); }
        auto find(std::string_view label) const -> std::optional<VertexId>;
        /// Throws UnknownEndpoint.
        auto vertex(std::string_view label) const -> VertexId;

        /// Sorted by (u, v).
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge_index(VertexId a, VertexId b) const -> std::optional<std::size_t>;

        auto adjacent(VertexId a, VertexId b) const -> bool { return _neighbours[a].test(b); }
        auto neighbours(VertexId v) const -> const VertexSet & { return _neighbours[v]; }
        auto degree(VertexId v) const -> std::size_t { return _neighbours[v].count(); }

        auto operator==(const LabeledGraph & other) const -> bool
        {
            return _labels == other._labels && _edges == other._edges;
        }
    };

    struct ColorAssignment
    {
        std::vector<int> colors;
    };

    auto build_graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>> & edges) -> LabeledGraph;

    /// Cycle c0..c{m-1} plus a hub adjacent to every rim vertex.
    auto build_wheel(int m) -> LabeledGraph;

    /// Vertices of `keep` in increasing index order, labels preserved.
    auto induced_subgraph(const LabeledGraph & g, const std::vector<VertexId> & keep) -> LabeledGraph;

    /// Ties go to the smallest index.
    auto max_degree_vertex(const LabeledGraph & g) -> VertexId;

    auto is_proper_coloring(const LabeledGraph & g, const ColorAssignment & c) -> bool;

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    auto connected_components(const LabeledGraph & g) -> std::vector<std::vector<VertexId>>;

    /// Relabels vertices by a permutation: vertex v of g becomes vertex perm[v].
    auto permute_vertices(const LabeledGraph & g, const std::vector<VertexId> & perm) -> LabeledGraph;
}

#endif
