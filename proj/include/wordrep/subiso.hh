#ifndef WORDREP_GUARD_WORDREP_SUBISO_HH
#define WORDREP_GUARD_WORDREP_SUBISO_HH 1

#include <wordrep/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wordrep
{
    /// Injective map from pattern vertices to host vertices preserving adjacency and non-adjacency.
    struct Embedding
    {
        std::vector<VertexId> map;

        auto operator==(const Embedding &) const -> bool = default;
    };

    /// Pattern label -> host label.
    using Anchors = std::vector<std::pair<std::string, std::string>>;

    /// First induced embedding extending the anchors, in backtracking order: anchored vertices
    /// first, then pattern vertices by decreasing degree, host candidates by increasing index.
    /// Throws UnknownEndpoint for anchors naming missing vertices and std::invalid_argument for
    /// anchors that are not injective.
    auto find_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & host, const Anchors & anchors = {})
        -> std::optional<Embedding>;

    auto contains_induced(const LabeledGraph & pattern, const LabeledGraph & host) -> bool;

    auto is_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> bool;

    /// The host's induced subgraph on the image, relabelled with the pattern's labels.
    auto embedded_image(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> LabeledGraph;
}

#endif
