#ifndef WORDREP_GUARD_WORDREP_ORIENTATION_HH
#define WORDREP_GUARD_WORDREP_ORIENTATION_HH 1

#include <wordrep/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace wordrep
{
    struct Arc
    {
        VertexId tail, head;

        auto reversed() const -> Arc { return Arc{head, tail}; }
        auto operator<=>(const Arc &) const = default;
    };

    /// AsStored means edge (u, v) with u < v is oriented u -> v.
    enum class EdgeState : std::int8_t
    {
        Reversed = -1,
        Unset = 0,
        AsStored = 1
    };

    /// Three-state orientation over the edges of a graph. The graph must outlive it.
    class PartialOrientation
    {
    private:
        const LabeledGraph * _graph;
        std::vector<EdgeState> _states;

    public:
        explicit PartialOrientation(const LabeledGraph & g);

        auto graph() const -> const LabeledGraph & { return *_graph; }
        auto states() const -> const std::vector<EdgeState> & { return _states; }
        auto state(std::size_t edge) const -> EdgeState { return _states.at(edge); }

        /// +1 if a -> b, -1 if b -> a, 0 if unset. Throws if a, b are not adjacent.
        auto direction(VertexId a, VertexId b) const -> int;
        auto has_arc(VertexId a, VertexId b) const -> bool;

        /// Throws OrientationConflict if the opposite arc is present, std::invalid_argument if not an edge.
        auto set(Arc arc) -> void;

        auto is_complete() const -> bool;
        auto unset_count() const -> std::size_t;
        auto arcs() const -> std::vector<Arc>;

        auto operator==(const PartialOrientation & other) const -> bool { return _states == other._states; }
    };

    /// Every edge oriented. The graph must outlive it.
    class Orientation
    {
    private:
        const LabeledGraph * _graph;
        std::vector<bool> _reversed;

    public:
        /// reversed[i] true means edge i = (u, v) is oriented v -> u.
        Orientation(const LabeledGraph & g, std::vector<bool> reversed);

        /// Throws std::invalid_argument unless the arcs orient every edge exactly once.
        static auto from_arcs(const LabeledGraph & g, const std::vector<Arc> & arcs) -> Orientation;
        /// Throws std::invalid_argument if some edge is unset.
        static auto from_partial(const PartialOrientation & po) -> Orientation;

        auto graph() const -> const LabeledGraph & { return *_graph; }
        auto has_arc(VertexId a, VertexId b) const -> bool;
        auto arcs() const -> std::vector<Arc>;
        auto reverse() const -> Orientation;
        auto out_neighbours() const -> std::vector<VertexSet>;

        auto operator==(const Orientation & other) const -> bool { return _reversed == other._reversed; }
    };

    /// A directed path v0 -> ... -> vk whose closing arc v0 -> vk is present, together with a pair
    /// (i, j), i < j, (i, j) != (0, k), that is either a non-edge or a backward arc vj -> vi.
    struct ShortcutWitness
    {
        std::vector<VertexId> path;
        std::size_t i, j;
        bool backward;
    };

    auto is_acyclic(const Orientation & o) -> bool;

    /// Throws CyclicInput on a cyclic orientation.
    auto find_shortcut(const Orientation & o) -> std::optional<ShortcutWitness>;

    auto is_semitransitive(const Orientation & o) -> bool;

    /// Checks a witness against an orientation: path arcs forward, closing arc forward, violation as claimed.
    auto witness_replays(const Orientation & o, const ShortcutWitness & w) -> bool;

    enum class OracleOutcome
    {
        Exists,
        NotExists,
        BudgetExceeded
    };

    struct OracleVerdict
    {
        OracleOutcome outcome;
        std::optional<Orientation> orientation;
        std::uint64_t examined = 0;
    };

    /// Enumerates all 2^|E| orientations in counter order (bit i reverses edge i) and reports the
    /// first semi-transitive one. Returns BudgetExceeded without searching if 2^|E| > budget.
    /// With jobs > 1 the counter range is split across threads; the reported orientation is
    /// still the one with the smallest counter.
    auto brute_force_semitransitive(const LabeledGraph & g, std::uint64_t budget = 20'000'000, unsigned jobs = 1)
        -> OracleVerdict;
}

#endif
