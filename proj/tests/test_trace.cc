#include <wordrep/errors.hh>
#include <wordrep/graph.hh>
#include <wordrep/graph_io.hh>
#include <wordrep/orientation.hh>
#include <wordrep/solver.hh>
#include <wordrep/trace.hh>

#include "generators.hh"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>
#include <set>

using namespace wordrep;
using namespace wordrep::test;

namespace
{
    auto only_step(const std::string & text) -> TraceStep
    {
        auto t = parse_trace(text + " S:a-b");
        REQUIRE(t.lines.size() == 1);
        REQUIRE(t.lines[0].steps.size() == 1);
        return t.lines[0].steps[0];
    }

    auto edge_set(const LabeledGraph & g) -> std::set<std::pair<std::string, std::string>>
    {
        std::set<std::pair<std::string, std::string>> result;
        for (auto e : g.edges())
            result.emplace(std::min(g.label(e.u), g.label(e.v)), std::max(g.label(e.u), g.label(e.v)));
        return result;
    }

    auto trim(std::string s) -> std::string
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
        return s;
    }
}

TEST_CASE("parse_trace examples")
{
    auto o = std::get<OrientStep>(only_step("O14→12 (C12-14-16-13)"));
    CHECK(o.arcs == std::vector<TraceArc>{{"14", "12"}});
    CHECK(o.cycle == std::vector<std::string>{"12", "14", "16", "13"});

    auto b = std::get<BranchStep>(only_step("B5→6 (Copy 3)"));
    CHECK(b.arc == TraceArc{"5", "6"});
    CHECK(b.copy_id == 3);

    auto two = std::get<OrientStep>(only_step("O11->12 O5->11 (C4-12-11-5)"));
    CHECK(two.arcs == std::vector<TraceArc>{{"11", "12"}, {"5", "11"}});
    CHECK(two.cycle.size() == 4);

    auto t = parse_trace("1. B15->12 (Copy 7) S:a-b\n2. MC7 15→12 O15->14 (C12-15-14) S:13-3-1-16\n");
    REQUIRE(t.lines.size() == 2);
    CHECK(t.lines[1].line_number == 2);
    CHECK(std::get<MoveCopy>(t.lines[1].opener) == MoveCopy{7, {"15", "12"}});
    CHECK(t.lines[1].shortcut == std::vector<std::string>{"13", "3", "1", "16"});
    CHECK(std::holds_alternative<RootOpener>(t.lines[0].opener));

    auto pre = parse_trace("# source: 13\n# wlog: 15->17\n# a comment\n\nS:a-b\n");
    CHECK(pre.preamble.source == "13");
    CHECK(pre.preamble.wlog_arc == TraceArc{"15", "17"});
    CHECK(pre.lines.size() == 1);
}

TEST_CASE("parse_trace errors")
{
    CHECK_THROWS_AS(parse_trace("B1->2 (Copy 2)"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("O1->2 S:1-2"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("X1->2 S:1-2"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("S:1-2 S:1-2"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("S:1"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("S:1-2\nS:1-2"), TraceSyntaxError);
    CHECK_THROWS_AS(parse_trace("B1->2 (Copy 2) S:1-2\nMC3 2->1 S:1-2"), UnknownCopyReference);
    try {
        parse_trace("S:1-2\nMC9 2->1 S:1-2");
        FAIL("expected UnknownCopyReference");
    }
    catch (const UnknownCopyReference & e) {
        CHECK(e.copy_id == 9);
    }
}

TEST_CASE("preprocess_latex")
{
    auto text = preprocess_latex("\\noindent {\\bf 1.} B14$\\rightarrow$16 (Copy 2) S:13-3-1-16 \\\\\n\n{\\bf 2.} MC2 16$\\rightarrow$14 S:1-2\n");
    CHECK(text == "1. B14->16 (Copy 2) S:13-3-1-16\n2. MC2 16->14 S:1-2\n");
    CHECK(parse_trace(text).lines.size() == 2);
}

TEST_CASE("the bundled trace matches the LaTeX source in paper.md")
{
    auto path = std::filesystem::path(WORDREP_SOURCE_DIR) / "paper.md";
    if (! std::filesystem::exists(path))
        SKIP("paper.md not present");
    auto paper = read_file(path.string());
    auto begin = paper.find("{\\bf 1.}");
    auto last = paper.find("{\\bf 100.}");
    REQUIRE(begin != std::string::npos);
    REQUIRE(last != std::string::npos);
    auto end = paper.find('\n', last);
    auto bundled = read_file((std::filesystem::path(WORDREP_SOURCE_DIR) / "data" / "s33_witness_trace.txt").string());
    CHECK(trim(preprocess_latex(paper.substr(begin, end - begin))) == trim(bundled));
}

TEST_CASE("the paper trace")
{
    auto t = paper_trace();
    CHECK(t.lines.size() == 100);
    CHECK(t.preamble.source == "13");
    CHECK(t.preamble.wlog_arc == TraceArc{"15", "17"});

    // copies 2..100, each created once and consumed once
    std::map<long, int> created, consumed;
    for (auto & line : t.lines) {
        if (auto mc = std::get_if<MoveCopy>(&line.opener))
            ++consumed[mc->copy_id];
        for (auto & step : line.steps)
            if (auto b = std::get_if<BranchStep>(&step))
                ++created[b->copy_id];
    }
    CHECK(created.size() == 99);
    CHECK(created.begin()->first == 2);
    CHECK(created.rbegin()->first == 100);
    for (auto & [id, n] : created) {
        CHECK(n == 1);
        CHECK(consumed[id] == 1);
    }

    CHECK(parse_trace(emit_trace(t)) == t);

    auto g = extract_graph(t);
    CHECK(g.size() == 17);
    for (int i = 1; i <= 17; ++i)
        CHECK(g.find(std::to_string(i)));
    CHECK(g.label(max_degree_vertex(g)) == "13");
}

TEST_CASE("extract_graph examples")
{
    auto t = parse_trace("B a->b (Copy 2) O b->c (Ca-b-c) S:a-b-c\nMC2 b->a S:a-c\n");
    auto g = extract_graph(t);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_count() == 3);

    auto pre = parse_trace("# wlog: x->y\nS:x-y\n");
    auto h = extract_graph(pre);
    CHECK(h.size() == 2);
    CHECK(h.edge_count() == 1);

    auto src = parse_trace("# source: z\nS:x-y\n");
    CHECK(extract_graph(src).size() == 3);
}

TEST_CASE("verify_trace on the paper trace")
{
    auto t = paper_trace();
    auto g = extract_graph(t);
    auto report = verify_trace(g, t);
    CHECK(report.accepted);
    CHECK(report.accepted_lines() == 100);
    CHECK(report.ledger_balanced);
    CHECK(report.ledger.size() == 99);
    CHECK(report.first_failure() == nullptr);

    auto strict = verify_trace(g, t, VerifyOptions{.strict_wlog = true});
    CHECK(strict.wlog_imposed);
    CHECK(! strict.accepted);
    REQUIRE(strict.first_failure());
    CHECK(strict.first_failure()->line_number == 1);

    auto mutated = t;
    mutated.lines[0].shortcut = {"13", "3", "1", "15"};
    auto bad = verify_trace(g, mutated);
    CHECK(! bad.accepted);
    REQUIRE(bad.first_failure());
    CHECK(bad.first_failure()->line_number == 1);
    CHECK(bad.first_failure()->failing_step == mutated.lines[0].steps.size());

    auto truncated = t;
    truncated.lines.pop_back();
    auto unbalanced = verify_trace(g, truncated);
    CHECK(unbalanced.accepted_lines() == 99);
    CHECK(! unbalanced.ledger_balanced);
    CHECK(! unbalanced.accepted);

    // closing both defect pairs of line 1's shortcut invalidates it
    auto denser_edges = edge_set(g);
    std::vector<std::pair<std::string, std::string>> edges(denser_edges.begin(), denser_edges.end());
    edges.emplace_back("13", "1");
    edges.emplace_back("3", "16");
    auto denser = build_graph(g.labels(), edges);
    CHECK(! verify_trace(denser, t).accepted);
}

TEST_CASE("verify_trace step checks")
{
    auto w5 = build_wheel(5);
    // mislabelled copy resumption
    auto t = parse_trace("# source: h\nB c0->c1 (Copy 2) S:c0-c1\nMC2 c0->c1 S:c0-c1\n");
    auto r = verify_trace(w5, t);
    CHECK(! r.accepted);

    // Orient without justification
    auto u = parse_trace("# source: h\nO c0->c1 (Cc0-c1-c2) S:c0-c1\n");
    CHECK(! verify_trace(w5, u).accepted);

    // conflicting with the source arcs
    auto v = parse_trace("# source: h\nO c0->h (Ch-c0-c1) S:c0-c1\n");
    CHECK(! verify_trace(w5, v).accepted);
}

TEST_CASE("emit/parse round trip on generated traces")
{
    std::mt19937_64 rng(41);
    auto label = [&] { return std::to_string(std::uniform_int_distribution<int>(1, 30)(rng)); };
    auto arc = [&] { return TraceArc{label(), label()}; };
    for (int trial = 0; trial < 300; ++trial) {
        ProofTrace t;
        if (std::bernoulli_distribution(0.5)(rng))
            t.preamble.source = label();
        if (std::bernoulli_distribution(0.5)(rng))
            t.preamble.wlog_arc = arc();
        long next_copy = 2;
        std::vector<long> open;
        auto lines = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int l = 0; l < lines; ++l) {
            TraceLine line;
            line.line_number = std::size_t(l + 1);
            if (l > 0) {
                if (open.empty())
                    break;
                line.opener = MoveCopy{open.back(), arc()};
                open.pop_back();
            }
            auto steps = std::uniform_int_distribution<int>(0, 5)(rng);
            for (int s = 0; s < steps; ++s) {
                if (std::bernoulli_distribution(0.3)(rng)) {
                    line.steps.push_back(BranchStep{arc(), next_copy});
                    open.push_back(next_copy++);
                }
                else {
                    OrientStep o;
                    o.arcs.push_back(arc());
                    if (std::bernoulli_distribution(0.3)(rng))
                        o.arcs.push_back(arc());
                    auto len = std::uniform_int_distribution<int>(3, 6)(rng);
                    for (int i = 0; i < len; ++i)
                        o.cycle.push_back(label());
                    line.steps.push_back(o);
                }
            }
            auto len = std::uniform_int_distribution<int>(2, 5)(rng);
            for (int i = 0; i < len; ++i)
                line.shortcut.push_back(label());
            t.lines.push_back(line);
        }
        REQUIRE(parse_trace(emit_trace(t)) == t);
    }

    ProofTrace bare;
    TraceLine root;
    root.line_number = 1;
    root.steps.push_back(BranchStep{{"a", "b"}, 2});
    root.shortcut = {"a", "b"};
    TraceLine resumed;
    resumed.line_number = 2;
    resumed.opener = MoveCopy{2, {"b", "a"}};
    resumed.shortcut = {"b", "c", "a"};
    bare.lines = {root, resumed};
    auto text = emit_trace(bare);
    CHECK(text.find("2. MC2 b->a S:b-c-a") != std::string::npos);
}

TEST_CASE("accepted solver traces imply the oracle finds nothing")
{
    std::mt19937_64 rng(43);
    int refuted = 0;
    auto w5 = build_wheel(5);
    for (int trial = 0; trial < 100; ++trial) {
        // W5 or a random graph, plus a vertex with random neighbours
        auto base = trial % 2 == 0 ? w5 : random_graph(6, 0.7, rng);
        auto labels = base.labels();
        labels.push_back("x");
        std::vector<std::pair<std::string, std::string>> edges;
        for (auto e : base.edges())
            edges.emplace_back(base.label(e.u), base.label(e.v));
        for (auto & l : base.labels())
            if (std::bernoulli_distribution(0.5)(rng))
                edges.emplace_back("x", l);
        auto g = build_graph(labels, edges);
        auto v = solve(g);
        if (v.kind != VerdictKind::NonSemiTransitive)
            continue;
        ++refuted;
        REQUIRE(v.trace);
        auto report = verify_trace(g, *v.trace, VerifyOptions{.strict_wlog = true});
        REQUIRE(report.accepted);
        REQUIRE(brute_force_semitransitive(g).outcome == OracleOutcome::NotExists);
    }
    CHECK(refuted > 0);

    auto v = solve(w5);
    REQUIRE(v.trace);
    CHECK(verify_trace(w5, *v.trace).accepted);
    CHECK(parse_trace(emit_trace(*v.trace)) == *v.trace);
}
