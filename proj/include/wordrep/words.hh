#ifndef WORDREP_GUARD_WORDREP_WORDS_HH
#define WORDREP_GUARD_WORDREP_WORDS_HH 1

#include <wordrep/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wordrep
{
    struct Word
    {
        std::vector<VertexId> letters;

        auto operator==(const Word &) const -> bool = default;
    };

    /// True iff w restricted to {x, y} is xyxy... or yxyx... (any length, including 0 and 1).
    /// Throws std::invalid_argument if x == y.
    auto alternate(const Word & w, VertexId x, VertexId y) -> bool;

    /// The alternation graph of w over vertices "0".."n-1". Throws MissingLetter if a vertex never occurs.
    auto graph_of_word(const Word & w, std::size_t n_vertices) -> LabeledGraph;

    /// As above, with the given vertex labels.
    auto graph_of_word(const Word & w, const std::vector<std::string> & labels) -> LabeledGraph;

    auto represents(const Word & w, const LabeledGraph & g) -> bool;

    /// Searches k-uniform words for k = 1..k_max, in canonical form only (first occurrences in
    /// increasing vertex order), and returns the first that represents g. An empty result says
    /// nothing about representability. Throws BudgetExceeded after `budget` search nodes.
    auto find_uniform_representant(const LabeledGraph & g, int k_max = 2, std::uint64_t budget = 50'000'000)
        -> std::optional<Word>;

    /// Space separated vertex labels.
    auto word_to_string(const Word & w, const LabeledGraph & g) -> std::string;

    /// Parses whitespace separated vertex labels of g. Throws UnknownEndpoint.
    auto parse_word(const std::string & text, const LabeledGraph & g) -> Word;
}

#endif
