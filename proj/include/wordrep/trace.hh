#ifndef WORDREP_GUARD_WORDREP_TRACE_HH
#define WORDREP_GUARD_WORDREP_TRACE_HH 1

#include <wordrep/graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wordrep
{
    struct TraceArc
    {
        std::string tail, head;

        auto operator==(const TraceArc &) const -> bool = default;
    };

    /// "B x->y (Copy z)": orient x -> y, set aside copy z with y -> x.
    struct BranchStep
    {
        TraceArc arc;
        long copy_id;

        auto operator==(const BranchStep &) const -> bool = default;
    };

    /// "O x->y (C a-b-...)" or, for the two-arc cycle-lemma form, "O x->y O u->v (C a-b-...)".
    /// The two-arc form is kept as one step because both arcs are justified jointly.
    struct OrientStep
    {
        std::vector<TraceArc> arcs;
        std::vector<std::string> cycle;

        auto operator==(const OrientStep &) const -> bool = default;
    };

    using TraceStep = std::variant<BranchStep, OrientStep>;

    struct RootOpener
    {
        auto operator==(const RootOpener &) const -> bool = default;
    };

    /// "MC z x->y": resume copy z; x->y is the deferred arc it was created with.
    struct MoveCopy
    {
        long copy_id;
        TraceArc arc;

        auto operator==(const MoveCopy &) const -> bool = default;
    };

    struct TraceLine
    {
        std::size_t line_number = 0;
        std::variant<RootOpener, MoveCopy> opener;
        std::vector<TraceStep> steps;
        std::vector<std::string> shortcut; ///< "S:v0-...-vk", closing arc v0 -> vk

        auto operator==(const TraceLine &) const -> bool = default;
    };

    struct Preamble
    {
        std::optional<TraceArc> wlog_arc;
        std::optional<std::string> source;

        auto operator==(const Preamble &) const -> bool = default;
    };

    struct ProofTrace
    {
        Preamble preamble;
        std::vector<TraceLine> lines;

        auto operator==(const ProofTrace &) const -> bool = default;
    };

    /// Parses the line format
    ///
    ///     line     := [int "."] [ "MC" int arc ] step* terminal
    ///     step     := "B" arc "(Copy" int ")" | "O" arc ["O" arc] "(C" label ("-" label)+ ")"
    ///     terminal := "S:" label ("-" label)+
    ///     arc      := label ("->" | "→") label
    ///
    /// one proof line per text line. Blank lines are skipped; "#" starts a comment line, except
    /// that "# source: v" and "# wlog: a->b" set the preamble. Throws TraceSyntaxError and
    /// UnknownCopyReference.
    auto parse_trace(const std::string & text) -> ProofTrace;

    /// Inverse of parse_trace: parse_trace(emit_trace(t)) == t for well-formed t.
    auto emit_trace(const ProofTrace & trace) -> std::string;

    /// Turns the LaTeX source form ("{\bf 1.} B14$\rightarrow$16 ... \noindent") into one
    /// "N. ..." line per proof line.
    auto preprocess_latex(const std::string & latex) -> std::string;

    /// Union of every pair the trace mentions: arc endpoints, consecutive and closing cycle pairs,
    /// consecutive and end-to-end shortcut pairs. Vertices are ordered by label.
    auto extract_graph(const ProofTrace & trace) -> LabeledGraph;

    struct LineReport
    {
        std::size_t line_number = 0;
        bool accepted = false;
        std::optional<std::size_t> failing_step; ///< index into steps; steps.size() means the terminal
        std::string reason;
    };

    struct CopyRecord
    {
        long copy_id = 0;
        std::optional<std::size_t> created_at, consumed_at;
    };

    struct VerificationReport
    {
        std::vector<LineReport> lines;
        std::vector<CopyRecord> ledger; ///< ordered by copy id
        bool ledger_balanced = false;
        bool wlog_imposed = false;
        bool accepted = false;

        auto accepted_lines() const -> std::size_t;
        auto first_failure() const -> const LineReport *;
    };

    struct VerifyOptions
    {
        /// When false, a trace that fails with the W.L.O.G. arc imposed is replayed again without
        /// it; success then refutes the weaker assumption set.
        bool strict_wlog = false;
    };

    /// Replays the trace against g. Line 1 starts from the preamble (source edges oriented out of
    /// the source, plus the W.L.O.G. arc); other lines start from their copy's snapshot plus its
    /// deferred arc. Non-adjacency is taken from g.
    auto verify_trace(const LabeledGraph & g, const ProofTrace & trace, const VerifyOptions & options = {})
        -> VerificationReport;

    /// The bundled witness trace, preprocessed, with preamble source 13 and W.L.O.G. arc 15->17.
    auto paper_trace_text() -> const std::string &;
    auto paper_trace() -> ProofTrace;
}

#endif
