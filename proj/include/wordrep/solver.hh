#ifndef WORDREP_GUARD_WORDREP_SOLVER_HH
#define WORDREP_GUARD_WORDREP_SOLVER_HH 1

#include <wordrep/graph.hh>
#include <wordrep/orientation.hh>
#include <wordrep/trace.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wordrep
{
    enum class JustificationKind
    {
        TriangleRule,    ///< x -> y -> z forces x -> z
        CycleRule,       ///< cycle lemma on a non-clique cycle of length >= 4
        PathRule         ///< a directed path x ~> z of length >= 3 forces x -> z
    };

    struct Justification
    {
        JustificationKind kind;
        std::vector<VertexId> cycle;
    };

    struct ForcedArc
    {
        Arc arc;
        Justification why;
    };

    inline constexpr std::uint64_t default_solver_budget = 2'000'000;
    inline constexpr unsigned default_cycle_length = 6;

    struct SolverConfig
    {
        std::optional<std::string> source; ///< label; unset means the maximum-degree vertex
        bool wlog = true;                  ///< fix the root branch edge one way only
        std::uint64_t budget = default_solver_budget; ///< branch and resume nodes
        bool trace = true;
        unsigned cycle_length = default_cycle_length;
    };

    enum class PropagationOutcome
    {
        Forced,
        Contradiction,
        Fixpoint
    };

    struct PropagationResult
    {
        PropagationOutcome outcome;
        std::vector<ForcedArc> forced;
        std::optional<ShortcutWitness> shortcut;     ///< set on a shortcut contradiction
        std::optional<std::vector<VertexId>> cycle;  ///< set on a directed-cycle contradiction
        PartialOrientation state;
    };

    /// Orients every edge at v out of v. Throws OrientationConflict if one already points in.
    auto fix_source(const PartialOrientation & po, VertexId v) -> PartialOrientation;

    /// Applies the triangle, path and cycle rules to fixpoint, stopping at the first directed cycle
    /// or shortcut among oriented arcs. Cycle rules use cycles of length at most cycle_length.
    auto propagate(const PartialOrientation & po, unsigned cycle_length = default_cycle_length) -> PropagationResult;

    enum class VerdictKind
    {
        SemiTransitive,
        NonSemiTransitive,
        BudgetExceeded
    };

    struct Verdict
    {
        VerdictKind kind;
        std::optional<Orientation> orientation; ///< SemiTransitive only
        std::optional<ProofTrace> trace;        ///< NonSemiTransitive with tracing on
        std::uint64_t nodes = 0;
    };

    /// Branch and propagate search, one connected component at a time. A NonSemiTransitive trace
    /// covers the first failing component and verifies against g. Copies are resumed most recent
    /// first. Throws UnknownEndpoint for an unknown source label.
    auto solve(const LabeledGraph & g, const SolverConfig & config = {}) -> Verdict;

    /// Solver verdict agrees with brute_force_semitransitive, and a found 2-uniform representant
    /// implies SemiTransitive. Throws BudgetExceeded if either search runs out.
    auto check_theorem1_consistency(const LabeledGraph & g) -> bool;
}

#endif
