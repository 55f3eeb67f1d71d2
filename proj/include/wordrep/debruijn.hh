#ifndef WORDREP_GUARD_WORDREP_DEBRUIJN_HH
#define WORDREP_GUARD_WORDREP_DEBRUIJN_HH 1

#include <wordrep/graph.hh>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wordrep
{
    inline constexpr std::size_t default_debruijn_vertex_limit = 4096;

    struct DeBruijnArc
    {
        VertexId tail, head;
        std::string word; ///< the (n+1)-letter word inducing this arc
    };

    /// B(n, k): all length-n words over {0..k-1}, in lexicographic order, with one arc per (n+1)-word.
    struct DeBruijnDigraph
    {
        int n = 0, k = 0;
        std::vector<std::string> vertices;
        std::vector<DeBruijnArc> arcs;

        auto loop_count() const -> std::size_t;
    };

    /// S(n, k): loops dropped, orientations forgotten, parallel edges merged. Each edge keeps the
    /// sorted set of (n+1)-words whose arcs collapsed onto it.
    struct SimplifiedDeBruijnGraph
    {
        int n = 0, k = 0;
        LabeledGraph graph;
        std::map<Edge, std::vector<std::string>> edge_labels;

        /// Lexicographically smallest label of the edge.
        auto canonical_label(Edge e) const -> const std::string &;
    };

    /// Throws std::invalid_argument for n < 1, k < 2 or k > 10, SizeLimitExceeded if k^n > vertex_limit.
    auto build_debruijn(int n, int k, std::size_t vertex_limit = default_debruijn_vertex_limit) -> DeBruijnDigraph;

    auto simplify(const DeBruijnDigraph & b) -> SimplifiedDeBruijnGraph;

    auto build_simplified(int n, int k, std::size_t vertex_limit = default_debruijn_vertex_limit) -> SimplifiedDeBruijnGraph;
}

#endif
