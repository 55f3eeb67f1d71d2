#ifndef WORDREP_GUARD_TESTS_GENERATORS_HH
#define WORDREP_GUARD_TESTS_GENERATORS_HH 1

#include <wordrep/graph.hh>
#include <wordrep/orientation.hh>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wordrep::test
{
    /// The labeled graph on n vertices whose edge i (in (a, b), a < b order) is present iff bit i of mask is.
    inline auto graph_from_mask(std::size_t n, std::uint64_t mask) -> LabeledGraph
    {
        std::vector<Edge> edges;
        std::size_t bit = 0;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b, ++bit)
                if ((mask >> bit) & 1)
                    edges.push_back(Edge{a, b});
        return LabeledGraph::with_numbered_vertices(n, edges);
    }

    inline auto all_graphs(std::size_t n) -> std::vector<LabeledGraph>
    {
        std::vector<LabeledGraph> result;
        auto pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            result.push_back(graph_from_mask(n, mask));
        return result;
    }

    inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> LabeledGraph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.push_back(Edge{a, b});
        return LabeledGraph::with_numbered_vertices(n, edges);
    }

    /// Orientation number `counter` in the oracle's enumeration order.
    inline auto orientation_from_counter(const LabeledGraph & g, std::uint64_t counter) -> Orientation
    {
        std::vector<bool> reversed(g.edge_count());
        for (std::size_t i = 0; i < reversed.size(); ++i)
            reversed[i] = (counter >> i) & 1;
        return Orientation(g, std::move(reversed));
    }

    inline auto random_orientation(const LabeledGraph & g, std::mt19937_64 & rng) -> Orientation
    {
        std::bernoulli_distribution coin(0.5);
        std::vector<bool> reversed(g.edge_count());
        for (std::size_t i = 0; i < reversed.size(); ++i)
            reversed[i] = coin(rng);
        return Orientation(g, std::move(reversed));
    }
}

#endif
