#ifndef WORDREP_GUARD_WORDREP_GRAPH_IO_HH
#define WORDREP_GUARD_WORDREP_GRAPH_IO_HH 1

#include <wordrep/coloring.hh>
#include <wordrep/debruijn.hh>
#include <wordrep/graph.hh>
#include <wordrep/orientation.hh>
#include <wordrep/subiso.hh>

#include <string>

namespace wordrep
{
    /// {"labels": [...], "edges": [[a, b], ...]} with labels and edges sorted.
    auto graph_to_json(const LabeledGraph & g) -> std::string;

    /// Keeps the label order of the input. Throws std::invalid_argument on malformed input and
    /// the build_graph errors on invalid graphs.
    auto graph_from_json(const std::string & text) -> LabeledGraph;

    /// [[tail, head], ...] in edge order.
    auto orientation_to_json(const Orientation & o) -> std::string;
    auto orientation_from_json(const LabeledGraph & g, const std::string & text) -> Orientation;

    /// {"pattern label": "host label", ...}
    auto embedding_to_json(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> std::string;

    /// {"label": "Red", ...}
    auto coloring_to_json(const LabeledGraph & g, const ColorAssignment & c) -> std::string;

    auto graph_to_dot(const LabeledGraph & g) -> std::string;
    auto orientation_to_dot(const Orientation & o) -> std::string;
    /// Each edge carries its canonical (n+1)-word label.
    auto debruijn_to_dot(const SimplifiedDeBruijnGraph & s) -> std::string;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, const std::string & text) -> void;
}

#endif
