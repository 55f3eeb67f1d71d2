#include <wordrep/coloring.hh>
#include <wordrep/debruijn.hh>
#include <wordrep/errors.hh>
#include <wordrep/orientation.hh>
#include <wordrep/solver.hh>
#include <wordrep/subiso.hh>
#include <wordrep/trace.hh>
#include <wordrep/words.hh>

#include "generators.hh"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace wordrep;
using namespace wordrep::test;

using std::string;

namespace
{
    struct Outcome
    {
        bool passed;
        string detail;
    };

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    auto expected_kind(const LabeledGraph & g) -> VerdictKind
    {
        auto o = brute_force_semitransitive(g, std::uint64_t{1} << 24);
        if (o.outcome == OracleOutcome::BudgetExceeded)
            throw BudgetExceeded("oracle");
        return o.outcome == OracleOutcome::Exists ? VerdictKind::SemiTransitive : VerdictKind::NonSemiTransitive;
    }

    auto criterion1() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 10; ++n) {
            auto [s, c] = color_s_n_2(n);
            if (s.graph.size() != (std::size_t{1} << n) || ! is_proper_coloring(s.graph, c))
                return {false, "S(" + std::to_string(n) + ",2) colouring not proper"};
        }
        auto t = seconds_since(start);
        return {t < 1.0, "S(n,2) n=1..10 properly 3-coloured in " + std::to_string(t) + " s"};
    }

    auto criterion2() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 5; ++n) {
            auto g = build_simplified(n, 2).graph;
            auto v = solve(g);
            if (v.kind != VerdictKind::SemiTransitive || ! v.orientation || ! is_semitransitive(*v.orientation))
                return {false, "S(" + std::to_string(n) + ",2) not certified semi-transitive"};
        }
        auto t = seconds_since(start);
        return {t < 30.0, "S(n,2) n=1..5 SemiTransitive with verified certificates in " + std::to_string(t) + " s"};
    }

    auto criterion3() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        auto w5 = build_wheel(5);
        auto oracle = brute_force_semitransitive(w5);
        auto v = solve(w5);
        bool trace_ok = v.trace && verify_trace(w5, *v.trace, VerifyOptions{.strict_wlog = true}).accepted;
        auto chi = exact_chromatic_number(w5, 4);
        auto t = seconds_since(start);
        bool ok = oracle.outcome == OracleOutcome::NotExists && oracle.examined == 1024
            && v.kind == VerdictKind::NonSemiTransitive && trace_ok && chi == 4 && t < 1.0;
        std::ostringstream s;
        s << "oracle " << (oracle.outcome == OracleOutcome::NotExists ? "NotExists" : "Exists") << " over "
          << oracle.examined << " orientations, solver " << (v.kind == VerdictKind::NonSemiTransitive ? "NonSemiTransitive" : "other")
          << ", trace " << (trace_ok ? "verifies" : "rejected") << ", chi=" << (chi ? std::to_string(*chi) : "none")
          << ", " << t << " s";
        return {ok, s.str()};
    }

    auto criterion4() -> Outcome
    {
        auto g = build_simplified(2, 3).graph;
        auto start = std::chrono::steady_clock::now();
        auto oracle = brute_force_semitransitive(g, std::uint64_t{1} << 21);
        auto oracle_t = seconds_since(start);
        start = std::chrono::steady_clock::now();
        auto v = solve(g);
        auto solver_t = seconds_since(start);
        bool trace_ok = v.trace && verify_trace(g, *v.trace).accepted;
        auto e = find_induced_embedding(build_wheel(5), g);
        bool ok = g.size() == 9 && g.edge_count() == 21 && oracle.outcome == OracleOutcome::NotExists
            && oracle.examined == (std::uint64_t{1} << 21) && oracle_t < 120.0 && v.kind == VerdictKind::NonSemiTransitive
            && trace_ok && solver_t < 5.0 && e && is_induced_embedding(build_wheel(5), g, *e);
        std::ostringstream s;
        s << "oracle NotExists=" << (oracle.outcome == OracleOutcome::NotExists) << " over " << oracle.examined << " in "
          << oracle_t << " s, solver NonSemiTransitive=" << (v.kind == VerdictKind::NonSemiTransitive) << " in " << solver_t
          << " s, W5 embedding " << (e ? "found" : "missing");
        return {ok, s.str()};
    }

    auto criterion5() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        auto t = paper_trace();
        std::size_t created = 0, consumed = 0;
        for (auto & line : t.lines) {
            consumed += std::holds_alternative<MoveCopy>(line.opener);
            for (auto & step : line.steps)
                created += std::holds_alternative<BranchStep>(step);
        }
        auto g = extract_graph(t);
        auto top = g.label(max_degree_vertex(g));
        auto report = verify_trace(g, t);
        auto strict = verify_trace(g, t, VerifyOptions{.strict_wlog = true});
        bool copies_2_to_100 = report.ledger.size() == 99 && report.ledger.front().copy_id == 2 && report.ledger.back().copy_id == 100;
        auto secs = seconds_since(start);
        bool ok = t.lines.size() == 100 && created == 99 && consumed == 99 && copies_2_to_100 && report.ledger_balanced
            && g.size() == 17 && top == "13" && t.preamble.source == "13" && t.preamble.wlog_arc == TraceArc{"15", "17"}
            && report.accepted && report.accepted_lines() == 100 && secs < 5.0;
        std::ostringstream s;
        s << t.lines.size() << " lines, ledger " << (report.ledger_balanced ? "balanced" : "unbalanced") << " over copies 2.."
          << (report.ledger.empty() ? 0 : report.ledger.back().copy_id) << ", " << g.size() << " vertices, max degree " << top
          << ", " << report.accepted_lines() << "/100 lines accepted with source 13";
        if (report.wlog_imposed)
            s << " and W.L.O.G. 15->17 imposed";
        else {
            s << "; W.L.O.G. 15->17 NOT imposed (the trace itself orients 17->15 on line 1";
            if (auto f = strict.first_failure())
                s << ", strict replay fails at line " << f->line_number << " step " << f->failing_step.value_or(0);
            s << ")";
        }
        return {ok, s.str()};
    }

    auto criterion6() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        auto t = paper_trace();
        auto s = extract_graph(t);
        auto host = build_simplified(3, 3).graph;
        auto e = find_induced_embedding(s, host, {{"1", "102"}, {"2", "210"}});
        if (! e || ! is_induced_embedding(s, host, *e))
            return {false, "no anchored induced embedding into S(3,3)"};
        auto image = embedded_image(s, host, *e);
        auto report = verify_trace(image, t);
        auto v = solve(image);
        bool solver_ok = v.kind == VerdictKind::NonSemiTransitive && v.trace
            && verify_trace(image, *v.trace, VerifyOptions{.strict_wlog = true}).accepted;
        auto secs = seconds_since(start);
        std::ostringstream d;
        d << "embedded with 1->102, 2->210; paper trace " << (report.accepted ? "re-verifies" : "rejected")
          << " on the image; solver " << (solver_ok ? "NonSemiTransitive with a verifying trace" : "failed") << " ("
          << v.nodes << " nodes); " << secs << " s";
        return {report.accepted && solver_ok && secs < 300.0, d.str()};
    }

    auto criterion7() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        std::size_t graphs = 0, disagreements = 0, words = 0, word_budget = 0, word_violations = 0;
        auto check = [&](const LabeledGraph & g) {
            ++graphs;
            auto kind = solve(g).kind;
            if (kind != expected_kind(g))
                ++disagreements;
            try {
                if (find_uniform_representant(g, 2)) {
                    ++words;
                    if (kind != VerdictKind::SemiTransitive)
                        ++word_violations;
                }
            }
            catch (const BudgetExceeded &) {
                ++word_budget;
            }
        };
        for (auto & g : all_graphs(5))
            check(g);
        std::mt19937_64 rng(2016);
        for (int i = 0; i < 240; ++i) {
            std::size_t n = i % 2 == 0 ? 6 : 7;
            check(random_graph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng));
        }
        auto secs = seconds_since(start);
        std::ostringstream s;
        s << graphs << " graphs (1024 on 5 vertices, 240 random on 6-7), " << disagreements << " solver/oracle disagreements, "
          << words << " with a 2-uniform representant, " << word_violations << " of those not SemiTransitive, "
          << word_budget << " word searches over budget, " << secs << " s";
        return {disagreements == 0 && word_violations == 0 && secs < 600.0, s.str()};
    }

    auto criterion8() -> Outcome
    {
        std::size_t reversal = 0, reversal_bad = 0;
        for (std::size_t n = 1; n <= 5; ++n)
            for (auto & g : all_graphs(n))
                for (std::uint64_t c = 0; c < (std::uint64_t{1} << g.edge_count()); ++c) {
                    auto o = orientation_from_counter(g, c);
                    ++reversal;
                    reversal_bad += is_semitransitive(o) != is_semitransitive(o.reverse());
                }

        std::size_t source_runs = 0, source_bad = 0;
        auto all_sources = [&](const LabeledGraph & g) {
            auto base = solve(g).kind;
            for (auto & l : g.labels()) {
                ++source_runs;
                source_bad += solve(g, SolverConfig{.source = l}).kind != base;
            }
        };
        for (auto & g : all_graphs(5))
            all_sources(g);
        std::mt19937_64 rng(8);
        for (int i = 0; i < 100; ++i)
            all_sources(random_graph(6 + i % 2, 0.6, rng));
        all_sources(build_simplified(2, 3).graph);
        all_sources(extract_graph(paper_trace()));

        std::size_t containing = 0, hereditary_bad = 0;
        auto w5 = build_wheel(5);
        auto hereditary = [&](const LabeledGraph & g) {
            if (! contains_induced(w5, g))
                return;
            ++containing;
            hereditary_bad += solve(g).kind != VerdictKind::NonSemiTransitive;
        };
        for (auto & g : all_graphs(6))
            hereditary(g);
        hereditary(build_simplified(2, 3).graph);
        hereditary(build_simplified(2, 4).graph);
        hereditary(extract_graph(paper_trace()));

        std::ostringstream s;
        s << "reversal: " << reversal << " orientations, " << reversal_bad << " asymmetric; sources: " << source_runs
          << " runs, " << source_bad << " verdict changes; hereditary: " << containing
          << " graphs with induced W5 (all 6-vertex, S(2,3), S(2,4), S), " << hereditary_bad << " not NonSemiTransitive";
        return {reversal_bad == 0 && source_bad == 0 && hereditary_bad == 0 && containing > 0, s.str()};
    }
}

auto main() -> int
{
    std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                   criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        }
        catch (const std::exception & e) {
            o = {false, string{"exception: "} + e.what()};
        }
        all = all && o.passed;
        std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.detail << ")" << std::endl;
    }
    return all ? 0 : 1;
}
