#include <wordrep/coloring.hh>
#include <wordrep/debruijn.hh>
#include <wordrep/errors.hh>
#include <wordrep/graph_io.hh>
#include <wordrep/orientation.hh>
#include <wordrep/repro.hh>
#include <wordrep/solver.hh>
#include <wordrep/subiso.hh>
#include <wordrep/trace.hh>
#include <wordrep/words.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using namespace wordrep;

namespace
{
    constexpr int exit_semitransitive = 0;
    constexpr int exit_non_semitransitive = 1;
    constexpr int exit_budget = 2;
    constexpr int exit_usage = 64;

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto env_budget(const char * name, uint64_t fallback) -> uint64_t
    {
        if (auto value = std::getenv(name)) {
            try {
                return static_cast<uint64_t>(std::stod(value));
            }
            catch (const std::exception &) {
                throw UsageError(string{name} + " is not a number: '" + value + "'");
            }
        }
        return fallback;
    }

    auto to_budget(double value) -> uint64_t
    {
        if (! (value >= 1))
            throw UsageError("budgets must be positive");
        return static_cast<uint64_t>(value);
    }

    auto load_graph(const string & path) -> LabeledGraph
    {
        return graph_from_json(read_file(path));
    }

    auto emit(const string & text, const string & output) -> void
    {
        if (output.empty() || output == "-")
            cout << text;
        else
            write_file(output, text);
    }

    auto parse_arc(const string & text) -> TraceArc
    {
        for (const string sep : {"->", "\xe2\x86\x92"}) {
            auto at = text.find(sep);
            if (at != string::npos && at > 0 && at + sep.size() < text.size())
                return TraceArc{text.substr(0, at), text.substr(at + sep.size())};
        }
        throw UsageError("expected an arc 'a->b', got '" + text + "'");
    }

    auto load_trace(const string & path, bool latex) -> ProofTrace
    {
        auto text = read_file(path);
        return parse_trace(latex ? preprocess_latex(text) : text);
    }

    auto verdict_name(VerdictKind k) -> string
    {
        switch (k) {
        case VerdictKind::SemiTransitive: return "SemiTransitive";
        case VerdictKind::NonSemiTransitive: return "NonSemiTransitive";
        case VerdictKind::BudgetExceeded: return "BudgetExceeded";
        }
        return "?";
    }

    auto arcs_json(const Orientation & o) -> json
    {
        return json::parse(orientation_to_json(o));
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Word-representability of graphs via semi-transitive orientations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    uint64_t default_solver_budget_value = default_solver_budget;
    uint64_t default_oracle_budget_value = 20'000'000;
    try {
        default_solver_budget_value = env_budget("WORDREP_BUDGET", default_solver_budget);
        default_oracle_budget_value = env_budget("WORDREP_ORACLE_BUDGET", 20'000'000);
    }
    catch (const UsageError & e) {
        cerr << e.what() << "\n";
        return exit_usage;
    }

    string graph_path, output, format = "json", trace_path, source, wlog, pattern_path, host_path, word;
    int n = 0, k = 0, max_colors = 4, kmax = 2;
    unsigned jobs = 1, cycle_length = default_cycle_length;
    double budget = 0;
    bool simplified = false, latex = false, strict_wlog = false, no_wlog = false;
    vector<string> anchors;

    auto debruijn = app.add_subcommand("debruijn", "Build B(n,k) or S(n,k)");
    debruijn->add_option("--n", n, "Word length")->required();
    debruijn->add_option("--k", k, "Alphabet size")->required();
    debruijn->add_flag("--simplified", simplified, "Build S(n,k)");
    debruijn->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    debruijn->add_option("-o,--output", output, "Output file");

    auto color3 = app.add_subcommand("color3", "Three-colour S(n,2) by trailing runs");
    color3->add_option("--n", n, "Word length")->required();
    color3->add_option("-o,--output", output, "Output file");

    auto chromatic = app.add_subcommand("chromatic", "Exact chromatic number");
    chromatic->add_option("--graph", graph_path, "Graph JSON")->required();
    chromatic->add_option("--max", max_colors, "Largest colour count to try");

    auto check = app.add_subcommand("check", "Decide semi-transitivity by branch and propagate");
    check->add_option("--graph", graph_path, "Graph JSON")->required();
    check->add_option("--source", source, "Source vertex label, or maxdeg");
    check->add_option("--trace", trace_path, "Write the refutation trace here");
    check->add_option("--budget", budget, "Node budget (default WORDREP_BUDGET or 2e6)");
    check->add_option("--cycle-len", cycle_length, "Longest cycle used by the cycle rule")->check(CLI::Range(4u, 64u));
    check->add_flag("--no-wlog", no_wlog, "Explore both orientations of the root branch edge");
    check->add_option("--format", format, "json or dot for the orientation")->check(CLI::IsMember({"json", "dot"}));
    check->add_option("-o,--output", output, "Orientation output file");

    auto oracle = app.add_subcommand("oracle", "Exhaustive search over all orientations");
    oracle->add_option("--graph", graph_path, "Graph JSON")->required();
    oracle->add_option("--budget", budget, "Largest orientation count (default WORDREP_ORACLE_BUDGET or 2e7)");
    oracle->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto verify = app.add_subcommand("verify-trace", "Replay a proof trace against a graph");
    verify->add_option("--graph", graph_path, "Graph JSON (default: the graph extracted from the trace)");
    verify->add_option("--trace", trace_path, "Trace text; 'paper' for the bundled witness trace")->required();
    verify->add_option("--wlog", wlog, "W.L.O.G. arc, e.g. 15->17");
    verify->add_option("--source", source, "Source vertex label");
    verify->add_flag("--latex", latex, "Trace is LaTeX source");
    verify->add_flag("--strict-wlog", strict_wlog, "Fail instead of retrying without the W.L.O.G. arc");

    auto extract = app.add_subcommand("extract-graph", "Graph of all pairs a trace mentions");
    extract->add_option("--trace", trace_path, "Trace text; 'paper' for the bundled witness trace")->required();
    extract->add_flag("--latex", latex, "Trace is LaTeX source");
    extract->add_option("-o,--output", output, "Output file");

    auto findsub = app.add_subcommand("findsub", "Find an induced embedding");
    findsub->add_option("--pattern", pattern_path, "Pattern graph JSON")->required();
    findsub->add_option("--host", host_path, "Host graph JSON")->required();
    findsub->add_option("--anchor", anchors, "pattern=host label pairs");

    auto represent = app.add_subcommand("represent-check", "Does a word represent the graph?");
    represent->add_option("--graph", graph_path, "Graph JSON")->required();
    represent->add_option("--word", word, "Space separated labels")->required();

    auto word_search = app.add_subcommand("word-search", "Search for a uniform representant");
    word_search->add_option("--graph", graph_path, "Graph JSON")->required();
    word_search->add_option("--kmax", kmax, "Largest uniformity")->check(CLI::Range(1, 8));
    word_search->add_option("--budget", budget, "Search node budget");

    auto repro = app.add_subcommand("repro", "Run the full reproduction pipeline");
    repro->add_option("--jobs", jobs, "Oracle worker threads")->check(CLI::Range(1u, 256u));
    repro->add_option("--budget", budget, "Solver node budget");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*debruijn) {
            if (simplified) {
                auto s = build_simplified(n, k);
                emit(format == "dot" ? debruijn_to_dot(s) : graph_to_json(s.graph), output);
            }
            else {
                auto b = build_debruijn(n, k);
                if (format == "dot") {
                    string dot = "digraph B_" + std::to_string(n) + "_" + std::to_string(k) + " {\n";
                    for (size_t v = 0; v < b.vertices.size(); ++v)
                        dot += "  v" + std::to_string(v) + " [label=\"" + b.vertices[v] + "\"];\n";
                    for (auto & a : b.arcs)
                        dot += "  v" + std::to_string(a.tail) + " -> v" + std::to_string(a.head) + " [label=\"" + a.word + "\"];\n";
                    emit(dot + "}\n", output);
                }
                else {
                    json j;
                    j["n"] = n;
                    j["k"] = k;
                    j["vertices"] = b.vertices;
                    j["arcs"] = json::array();
                    for (auto & a : b.arcs)
                        j["arcs"].push_back({b.vertices[a.tail], b.vertices[a.head]});
                    emit(j.dump() + "\n", output);
                }
            }
            return 0;
        }

        if (*color3) {
            auto [s, colouring] = color_s_n_2(n);
            emit(coloring_to_json(s.graph, colouring), output);
            cerr << "S(" << n << ",2): " << s.graph.size() << " vertices, " << s.graph.edge_count()
                 << " edges, colouring " << (is_proper_coloring(s.graph, colouring) ? "proper" : "NOT proper") << "\n";
            return 0;
        }

        if (*chromatic) {
            auto g = load_graph(graph_path);
            auto chi = exact_chromatic_number(g, max_colors);
            json j;
            j["chromatic_number"] = chi ? json(*chi) : json(nullptr);
            j["max"] = max_colors;
            cout << j.dump() << "\n";
            return 0;
        }

        if (*check) {
            auto g = load_graph(graph_path);
            SolverConfig config;
            if (! source.empty() && source != "maxdeg")
                config.source = source;
            config.wlog = ! no_wlog;
            config.budget = budget > 0 ? to_budget(budget) : default_solver_budget_value;
            config.trace = ! trace_path.empty();
            config.cycle_length = cycle_length;
            auto v = solve(g, config);
            cerr << verdict_name(v.kind) << " (" << v.nodes << " nodes)\n";
            if (v.kind == VerdictKind::SemiTransitive)
                emit(format == "dot" ? orientation_to_dot(*v.orientation) : orientation_to_json(*v.orientation), output);
            if (v.kind == VerdictKind::NonSemiTransitive && v.trace)
                write_file(trace_path, emit_trace(*v.trace));
            switch (v.kind) {
            case VerdictKind::SemiTransitive: return exit_semitransitive;
            case VerdictKind::NonSemiTransitive: return exit_non_semitransitive;
            case VerdictKind::BudgetExceeded: return exit_budget;
            }
        }

        if (*oracle) {
            auto g = load_graph(graph_path);
            auto v = brute_force_semitransitive(g, budget > 0 ? to_budget(budget) : default_oracle_budget_value, jobs);
            json j;
            j["examined"] = v.examined;
            switch (v.outcome) {
            case OracleOutcome::Exists:
                j["verdict"] = "Exists";
                j["orientation"] = arcs_json(*v.orientation);
                break;
            case OracleOutcome::NotExists: j["verdict"] = "NotExists"; break;
            case OracleOutcome::BudgetExceeded: j["verdict"] = "BudgetExceeded"; break;
            }
            cout << j.dump() << "\n";
            return v.outcome == OracleOutcome::Exists ? exit_semitransitive
                : v.outcome == OracleOutcome::NotExists ? exit_non_semitransitive : exit_budget;
        }

        if (*verify) {
            auto trace = trace_path == "paper" ? paper_trace() : load_trace(trace_path, latex);
            if (! wlog.empty())
                trace.preamble.wlog_arc = parse_arc(wlog);
            if (! source.empty())
                trace.preamble.source = source;
            auto g = graph_path.empty() ? extract_graph(trace) : load_graph(graph_path);
            auto report = verify_trace(g, trace, VerifyOptions{strict_wlog});

            json j;
            j["accepted"] = report.accepted;
            j["lines"] = report.lines.size();
            j["accepted_lines"] = report.accepted_lines();
            j["ledger_balanced"] = report.ledger_balanced;
            j["copies"] = report.ledger.size();
            j["wlog_imposed"] = report.wlog_imposed;
            j["failures"] = json::array();
            for (auto & l : report.lines)
                if (! l.accepted)
                    j["failures"].push_back({{"line", l.line_number}, {"step", l.failing_step ? json(*l.failing_step) : json(nullptr)}, {"reason", l.reason}});
            j["unbalanced_copies"] = json::array();
            for (auto & c : report.ledger)
                if (! c.created_at || ! c.consumed_at)
                    j["unbalanced_copies"].push_back(c.copy_id);
            cout << j.dump() << "\n";
            cerr << (report.accepted ? "accepted" : "rejected") << ": " << report.accepted_lines() << "/" << report.lines.size() << " lines\n";
            return report.accepted ? 0 : 1;
        }

        if (*extract) {
            auto trace = trace_path == "paper" ? paper_trace() : load_trace(trace_path, latex);
            auto g = extract_graph(trace);
            emit(graph_to_json(g), output);
            cerr << g.size() << " vertices, " << g.edge_count() << " edges\n";
            return 0;
        }

        if (*findsub) {
            auto pattern = load_graph(pattern_path);
            auto host = load_graph(host_path);
            Anchors parsed;
            for (auto & a : anchors) {
                auto eq = a.find('=');
                if (eq == string::npos || eq == 0 || eq + 1 == a.size())
                    throw UsageError("anchor must be pattern=host, got '" + a + "'");
                parsed.emplace_back(a.substr(0, eq), a.substr(eq + 1));
            }
            auto e = find_induced_embedding(pattern, host, parsed);
            cout << (e ? embedding_to_json(pattern, host, *e) : string{"null\n"});
            return e ? 0 : 1;
        }

        if (*represent) {
            auto g = load_graph(graph_path);
            auto w = parse_word(word, g);
            auto yes = represents(w, g);
            cout << json{{"represents", yes}}.dump() << "\n";
            return yes ? 0 : 1;
        }

        if (*word_search) {
            auto g = load_graph(graph_path);
            auto w = budget > 0 ? find_uniform_representant(g, kmax, to_budget(budget)) : find_uniform_representant(g, kmax);
            cout << (w ? json(word_to_string(*w, g)) : json(nullptr)).dump() << "\n";
            return w ? 0 : 1;
        }

        if (*repro) {
            ReproOptions options;
            options.jobs = jobs;
            options.solver_budget = budget > 0 ? to_budget(budget) : default_solver_budget_value;
            options.oracle_budget = default_oracle_budget_value;
            options.log = &cerr;
            auto results = run_repro(options);
            json j = json::array();
            bool all = true;
            for (auto & r : results) {
                j.push_back({{"stage", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
                all = all && r.passed;
            }
            cout << j.dump(2) << "\n";
            return all ? 0 : 1;
        }
    }
    catch (const BudgetExceeded & e) {
        cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
