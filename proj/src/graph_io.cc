#include <wordrep/graph_io.hh>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

using std::pair;
using std::string;
using std::vector;

using namespace wordrep;

namespace
{
    auto quote(const string & s) -> string
    {
        string out = "\"";
        for (auto c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }

    auto parse(const string & text) -> json
    {
        try {
            return json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw std::invalid_argument(string{"malformed JSON: "} + e.what());
        }
    }

    auto label_pair(const json & j) -> pair<string, string>
    {
        if (! j.is_array() || j.size() != 2 || ! j[0].is_string() || ! j[1].is_string())
            throw std::invalid_argument("expected a pair of labels, got " + j.dump());
        return {j[0].get<string>(), j[1].get<string>()};
    }
}

auto wordrep::graph_to_json(const LabeledGraph & g) -> string
{
    auto labels = g.labels();
    std::sort(labels.begin(), labels.end());
    vector<pair<string, string>> edges;
    for (auto e : g.edges()) {
        auto a = g.label(e.u), b = g.label(e.v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());

    json j;
    j["labels"] = labels;
    j["edges"] = json::array();
    for (auto & [a, b] : edges)
        j["edges"].push_back({a, b});
    return j.dump() + "\n";
}

auto wordrep::graph_from_json(const string & text) -> LabeledGraph
{
    auto j = parse(text);
    if (! j.is_object() || ! j.contains("labels") || ! j["labels"].is_array())
        throw std::invalid_argument("graph JSON needs a \"labels\" array");
    vector<string> labels;
    for (auto & l : j["labels"]) {
        if (! l.is_string())
            throw std::invalid_argument("vertex labels must be strings");
        labels.push_back(l.get<string>());
    }
    vector<pair<string, string>> edges;
    if (j.contains("edges")) {
        if (! j["edges"].is_array())
            throw std::invalid_argument("\"edges\" must be an array");
        for (auto & e : j["edges"])
            edges.push_back(label_pair(e));
    }
    return build_graph(std::move(labels), edges);
}

auto wordrep::orientation_to_json(const Orientation & o) -> string
{
    auto & g = o.graph();
    json j = json::array();
    for (auto a : o.arcs())
        j.push_back({g.label(a.tail), g.label(a.head)});
    return j.dump() + "\n";
}

auto wordrep::orientation_from_json(const LabeledGraph & g, const string & text) -> Orientation
{
    auto j = parse(text);
    if (! j.is_array())
        throw std::invalid_argument("orientation JSON must be an array of label pairs");
    vector<Arc> arcs;
    for (auto & a : j) {
        auto [t, h] = label_pair(a);
        arcs.push_back(Arc{g.vertex(t), g.vertex(h)});
    }
    return Orientation::from_arcs(g, arcs);
}

auto wordrep::embedding_to_json(const LabeledGraph & pattern, const LabeledGraph & host, const Embedding & e) -> string
{
    json j = json::object();
    for (VertexId p = 0; p < pattern.size(); ++p)
        j[pattern.label(p)] = host.label(e.map.at(p));
    return j.dump() + "\n";
}

auto wordrep::coloring_to_json(const LabeledGraph & g, const ColorAssignment & c) -> string
{
    json j = json::object();
    for (VertexId v = 0; v < g.size(); ++v) {
        auto colour = c.colors.at(v);
        if (colour >= 0 && colour <= 2)
            j[g.label(v)] = string{colour_name(static_cast<Colour>(colour))};
        else
            j[g.label(v)] = colour;
    }
    return j.dump() + "\n";
}

auto wordrep::graph_to_dot(const LabeledGraph & g) -> string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.size(); ++v)
        out << "  v" << v << " [label=" << quote(g.label(v)) << "];\n";
    for (auto e : g.edges())
        out << "  v" << e.u << " -- v" << e.v << ";\n";
    out << "}\n";
    return out.str();
}

auto wordrep::orientation_to_dot(const Orientation & o) -> string
{
    auto & g = o.graph();
    std::ostringstream out;
    out << "digraph G {\n";
    for (VertexId v = 0; v < g.size(); ++v)
        out << "  v" << v << " [label=" << quote(g.label(v)) << "];\n";
    for (auto a : o.arcs())
        out << "  v" << a.tail << " -> v" << a.head << ";\n";
    out << "}\n";
    return out.str();
}

auto wordrep::debruijn_to_dot(const SimplifiedDeBruijnGraph & s) -> string
{
    auto & g = s.graph;
    std::ostringstream out;
    out << "graph S_" << s.n << "_" << s.k << " {\n";
    for (VertexId v = 0; v < g.size(); ++v)
        out << "  v" << v << " [label=" << quote(g.label(v)) << "];\n";
    for (auto e : g.edges())
        out << "  v" << e.u << " -- v" << e.v << " [label=" << quote(s.canonical_label(e)) << "];\n";
    out << "}\n";
    return out.str();
}

auto wordrep::read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto wordrep::write_file(const string & path, const string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}
