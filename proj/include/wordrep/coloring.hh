#ifndef WORDREP_GUARD_WORDREP_COLORING_HH
#define WORDREP_GUARD_WORDREP_COLORING_HH 1

#include <wordrep/debruijn.hh>
#include <wordrep/graph.hh>

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace wordrep
{
    enum class Colour
    {
        Red = 0,
        Blue = 1,
        Green = 2
    };

    auto colour_name(Colour c) -> std::string_view;

    class InternalPropernessViolation : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// Colour of a binary word by its maximal trailing run of the last letter c, of length r:
    /// Red if r is even, otherwise Blue for c = 0 and Green for c = 1.
    /// Throws std::invalid_argument on empty or non-binary input.
    auto classify_binary_vertex(std::string_view label) -> Colour;

    /// S(n, 2) with every vertex coloured by classify_binary_vertex. Verifies properness and throws
    /// InternalPropernessViolation if it fails.
    auto color_s_n_2(int n, std::size_t vertex_limit = default_debruijn_vertex_limit)
        -> std::pair<SimplifiedDeBruijnGraph, ColorAssignment>;

    inline constexpr std::size_t default_chromatic_vertex_limit = 256;

    /// Smallest c <= max_colors admitting a proper colouring, by backtracking with vertices in
    /// decreasing degree order. Throws SizeLimitExceeded above vertex_limit.
    auto exact_chromatic_number(const LabeledGraph & g, int max_colors,
        std::size_t vertex_limit = default_chromatic_vertex_limit) -> std::optional<int>;
}

#endif
