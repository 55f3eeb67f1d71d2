#include <wordrep/coloring.hh>
#include <wordrep/debruijn.hh>
#include <wordrep/orientation.hh>
#include <wordrep/repro.hh>
#include <wordrep/solver.hh>
#include <wordrep/subiso.hh>
#include <wordrep/trace.hh>

#include <chrono>
#include <functional>
#include <sstream>

using std::string;
using std::vector;

using namespace wordrep;

namespace
{
    auto verdict_name(VerdictKind k) -> string
    {
        switch (k) {
        case VerdictKind::SemiTransitive: return "SemiTransitive";
        case VerdictKind::NonSemiTransitive: return "NonSemiTransitive";
        case VerdictKind::BudgetExceeded: return "BudgetExceeded";
        }
        return "?";
    }

    auto oracle_name(OracleOutcome o) -> string
    {
        switch (o) {
        case OracleOutcome::Exists: return "Exists";
        case OracleOutcome::NotExists: return "NotExists";
        case OracleOutcome::BudgetExceeded: return "BudgetExceeded";
        }
        return "?";
    }

    /// Solver says no, and its trace verifies against g.
    auto refuted_with_trace(const LabeledGraph & g, uint64_t budget, std::ostringstream & detail) -> bool
    {
        SolverConfig config;
        config.budget = budget;
        auto v = solve(g, config);
        detail << "solver " << verdict_name(v.kind) << " (" << v.nodes << " nodes";
        if (v.trace)
            detail << ", " << v.trace->lines.size() << " lines";
        detail << ")";
        if (v.kind != VerdictKind::NonSemiTransitive || ! v.trace)
            return false;
        auto report = verify_trace(g, *v.trace, VerifyOptions{true});
        detail << ", own trace " << (report.accepted ? "verifies" : "REJECTED");
        return report.accepted;
    }
}

auto wordrep::run_repro(const ReproOptions & options) -> vector<StageResult>
{
    vector<StageResult> results;
    auto stage = [&](const string & name, const std::function<bool(std::ostringstream &)> & body) {
        StageResult r;
        r.name = name;
        std::ostringstream detail;
        auto start = std::chrono::steady_clock::now();
        try {
            r.passed = body(detail);
        }
        catch (const std::exception & e) {
            detail << " exception: " << e.what();
            r.passed = false;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.detail = detail.str();
        if (options.log)
            *options.log << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " [" << r.seconds << "s]" << std::endl;
        results.push_back(std::move(r));
    };

    stage("S(n,2) three-colouring, n=1..10", [&](auto & detail) {
        for (int n = 1; n <= 10; ++n) {
            auto [s, colouring] = color_s_n_2(n);
            if (! is_proper_coloring(s.graph, colouring)) {
                detail << "improper at n=" << n;
                return false;
            }
        }
        detail << "all proper";
        return true;
    });

    stage("W5 not word-representable", [&](auto & detail) {
        auto w5 = build_wheel(5);
        auto oracle = brute_force_semitransitive(w5, options.oracle_budget, options.jobs);
        detail << "oracle " << oracle_name(oracle.outcome) << ", ";
        bool ok = oracle.outcome == OracleOutcome::NotExists;
        ok = refuted_with_trace(w5, options.solver_budget, detail) && ok;
        auto chi = exact_chromatic_number(w5, 4);
        detail << ", chromatic number " << (chi ? std::to_string(*chi) : "> 4");
        return ok && chi == 4;
    });

    stage("S(2,3) not word-representable", [&](auto & detail) {
        auto s = build_simplified(2, 3);
        auto oracle = brute_force_semitransitive(s.graph, options.oracle_budget, options.jobs);
        detail << "oracle " << oracle_name(oracle.outcome) << " over " << oracle.examined << " orientations, ";
        bool ok = oracle.outcome == OracleOutcome::NotExists;
        ok = refuted_with_trace(s.graph, options.solver_budget, detail) && ok;
        auto w5 = find_induced_embedding(build_wheel(5), s.graph);
        detail << ", induced W5 " << (w5 ? "found" : "missing");
        return ok && w5.has_value();
    });

    auto trace = paper_trace();
    auto extracted = extract_graph(trace);

    stage("witness trace verifies against the extracted graph", [&](auto & detail) {
        auto report = verify_trace(extracted, trace);
        detail << trace.lines.size() << " lines, " << report.accepted_lines() << " accepted, ledger "
               << (report.ledger_balanced ? "balanced" : "unbalanced") << " over " << report.ledger.size()
               << " copies, " << extracted.size() << " vertices, max degree vertex "
               << extracted.label(max_degree_vertex(extracted)) << ", replayed "
               << (report.wlog_imposed ? "with" : "without") << " the W.L.O.G. arc";
        return report.accepted && trace.lines.size() == 100;
    });

    stage("extracted graph embeds in S(3,3) and the trace re-verifies", [&](auto & detail) {
        auto host = build_simplified(3, 3);
        auto e = find_induced_embedding(extracted, host.graph, {{"1", "102"}, {"2", "210"}});
        if (! e) {
            detail << "no anchored embedding";
            return false;
        }
        auto image = embedded_image(extracted, host.graph, *e);
        auto report = verify_trace(image, trace);
        detail << "embedding found, image " << (image == extracted ? "equals" : "differs from")
               << " the extracted graph, trace " << (report.accepted ? "verifies" : "REJECTED") << ", ";
        bool ok = report.accepted;
        ok = refuted_with_trace(image, options.solver_budget, detail) && ok;
        return ok;
    });

    return results;
}
