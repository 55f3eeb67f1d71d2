#include <wordrep/coloring.hh>
#include <wordrep/debruijn.hh>
#include <wordrep/errors.hh>
#include <wordrep/graph.hh>
#include <wordrep/graph_io.hh>
#include <wordrep/orientation.hh>
#include <wordrep/solver.hh>
#include <wordrep/subiso.hh>
#include <wordrep/trace.hh>
#include <wordrep/words.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

using std::optional;
using std::pair;
using std::string;
using std::vector;

using namespace wordrep;

namespace
{
    auto label_edges(const LabeledGraph & g) -> vector<pair<string, string>>
    {
        vector<pair<string, string>> result;
        for (auto e : g.edges())
            result.emplace_back(g.label(e.u), g.label(e.v));
        return result;
    }

    auto label_arcs(const Orientation & o) -> vector<pair<string, string>>
    {
        auto & g = o.graph();
        vector<pair<string, string>> result;
        for (auto a : o.arcs())
            result.emplace_back(g.label(a.tail), g.label(a.head));
        return result;
    }

    auto orientation_of(const LabeledGraph & g, const vector<pair<string, string>> & arcs) -> Orientation
    {
        vector<Arc> result;
        for (auto & [a, b] : arcs)
            result.push_back(Arc{g.vertex(a), g.vertex(b)});
        return Orientation::from_arcs(g, result);
    }

    auto verdict_name(VerdictKind k) -> const char *
    {
        switch (k) {
        case VerdictKind::SemiTransitive: return "SemiTransitive";
        case VerdictKind::NonSemiTransitive: return "NonSemiTransitive";
        case VerdictKind::BudgetExceeded: return "BudgetExceeded";
        }
        return "";
    }

    auto oracle_name(OracleOutcome o) -> const char *
    {
        switch (o) {
        case OracleOutcome::Exists: return "Exists";
        case OracleOutcome::NotExists: return "NotExists";
        case OracleOutcome::BudgetExceeded: return "BudgetExceeded";
        }
        return "";
    }
}

PYBIND11_MODULE(_wordrep, m)
{
    m.doc() = "Word-representability of simplified de Bruijn graphs";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);
    py::register_exception<TraceSyntaxError>(m, "TraceSyntaxError", PyExc_ValueError);
    py::register_exception<UnknownCopyReference>(m, "UnknownCopyReference", PyExc_ValueError);

    py::class_<LabeledGraph>(m, "Graph")
        .def(py::init([](vector<string> labels, const vector<pair<string, string>> & edges) {
            return build_graph(std::move(labels), edges);
        }), py::arg("labels"), py::arg("edges"))
        .def_property_readonly("labels", &LabeledGraph::labels)
        .def_property_readonly("edges", &label_edges)
        .def("__len__", &LabeledGraph::size)
        .def("edge_count", &LabeledGraph::edge_count)
        .def("adjacent", [](const LabeledGraph & g, const string & a, const string & b) {
            return g.adjacent(g.vertex(a), g.vertex(b));
        })
        .def("degree", [](const LabeledGraph & g, const string & v) { return g.degree(g.vertex(v)); })
        .def("max_degree_vertex", [](const LabeledGraph & g) { return g.label(max_degree_vertex(g)); })
        .def("induced", [](const LabeledGraph & g, const vector<string> & keep) {
            vector<VertexId> ids;
            for (auto & l : keep)
                ids.push_back(g.vertex(l));
            return induced_subgraph(g, ids);
        })
        .def("to_json", &graph_to_json)
        .def("to_dot", &graph_to_dot)
        .def_static("from_json", &graph_from_json)
        .def("__eq__", [](const LabeledGraph & a, const LabeledGraph & b) { return a == b; })
        .def("__repr__", [](const LabeledGraph & g) {
            return "Graph(" + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges)";
        });

    m.def("wheel", &build_wheel, py::arg("m"));
    m.def("debruijn", [](int n, int k) {
        auto b = build_debruijn(n, k);
        vector<pair<string, string>> arcs;
        for (auto & a : b.arcs)
            arcs.emplace_back(b.vertices[a.tail], b.vertices[a.head]);
        return py::make_tuple(b.vertices, arcs);
    }, py::arg("n"), py::arg("k"), "Vertices and arcs of B(n,k)");
    m.def("simplified_debruijn", [](int n, int k) { return build_simplified(n, k).graph; }, py::arg("n"), py::arg("k"));

    m.def("color_s_n_2", [](int n) {
        auto [s, c] = color_s_n_2(n);
        py::dict result;
        for (VertexId v = 0; v < s.graph.size(); ++v)
            result[py::str(s.graph.label(v))] = string{colour_name(static_cast<Colour>(c.colors[v]))};
        return result;
    }, py::arg("n"));
    m.def("chromatic_number", &exact_chromatic_number, py::arg("graph"), py::arg("max_colors"),
        py::arg("vertex_limit") = default_chromatic_vertex_limit);

    m.def("is_semitransitive", [](const LabeledGraph & g, const vector<pair<string, string>> & arcs) {
        return is_semitransitive(orientation_of(g, arcs));
    }, py::arg("graph"), py::arg("arcs"));

    m.def("oracle", [](const LabeledGraph & g, std::uint64_t budget, unsigned jobs) {
        OracleVerdict v;
        {
            py::gil_scoped_release release;
            v = brute_force_semitransitive(g, budget, jobs);
        }
        py::dict result;
        result["verdict"] = oracle_name(v.outcome);
        result["examined"] = v.examined;
        result["orientation"] = v.orientation ? py::cast(label_arcs(*v.orientation)) : py::none();
        return result;
    }, py::arg("graph"), py::arg("budget") = 20'000'000, py::arg("jobs") = 1);

    m.def("solve", [](const LabeledGraph & g, optional<string> source, bool wlog, std::uint64_t budget, bool trace) {
        SolverConfig config;
        config.source = std::move(source);
        config.wlog = wlog;
        config.budget = budget;
        config.trace = trace;
        auto v = solve(g, config);
        py::dict result;
        result["verdict"] = verdict_name(v.kind);
        result["nodes"] = v.nodes;
        result["orientation"] = v.orientation ? py::cast(label_arcs(*v.orientation)) : py::none();
        result["trace"] = v.trace ? py::cast(emit_trace(*v.trace)) : py::none();
        return result;
    }, py::arg("graph"), py::arg("source") = py::none(), py::arg("wlog") = true,
        py::arg("budget") = default_solver_budget, py::arg("trace") = true);

    m.def("find_induced_embedding", [](const LabeledGraph & pattern, const LabeledGraph & host, const Anchors & anchors)
        -> optional<py::dict> {
        auto e = find_induced_embedding(pattern, host, anchors);
        if (! e)
            return std::nullopt;
        py::dict result;
        for (VertexId v = 0; v < pattern.size(); ++v)
            result[py::str(pattern.label(v))] = host.label(e->map[v]);
        return result;
    }, py::arg("pattern"), py::arg("host"), py::arg("anchors") = Anchors{});
    m.def("contains_induced", &contains_induced, py::arg("pattern"), py::arg("host"));

    m.def("paper_trace_text", &paper_trace_text);
    m.def("preprocess_latex", &preprocess_latex, py::arg("latex"));
    m.def("extract_graph", [](const string & text) { return extract_graph(parse_trace(text)); }, py::arg("trace"));
    m.def("normalize_trace", [](const string & text) { return emit_trace(parse_trace(text)); }, py::arg("trace"));
    m.def("verify_trace", [](const LabeledGraph & g, const string & text, bool strict_wlog) {
        auto report = verify_trace(g, parse_trace(text), VerifyOptions{strict_wlog});
        py::dict result;
        result["accepted"] = report.accepted;
        result["lines"] = report.lines.size();
        result["accepted_lines"] = report.accepted_lines();
        result["ledger_balanced"] = report.ledger_balanced;
        result["copies"] = report.ledger.size();
        result["wlog_imposed"] = report.wlog_imposed;
        if (auto f = report.first_failure())
            result["first_failure"] = py::make_tuple(f->line_number, f->failing_step, f->reason);
        else
            result["first_failure"] = py::none();
        return result;
    }, py::arg("graph"), py::arg("trace"), py::arg("strict_wlog") = false);

    m.def("represents", [](const LabeledGraph & g, const vector<string> & word) {
        Word w;
        for (auto & l : word)
            w.letters.push_back(g.vertex(l));
        return represents(w, g);
    }, py::arg("graph"), py::arg("word"));
    m.def("find_uniform_representant", [](const LabeledGraph & g, int k_max, std::uint64_t budget) -> optional<vector<string>> {
        auto w = find_uniform_representant(g, k_max, budget);
        if (! w)
            return std::nullopt;
        vector<string> result;
        for (auto v : w->letters)
            result.push_back(g.label(v));
        return result;
    }, py::arg("graph"), py::arg("k_max") = 2, py::arg("budget") = 50'000'000);
}
