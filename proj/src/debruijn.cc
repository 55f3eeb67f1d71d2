#include <wordrep/debruijn.hh>
#include <wordrep/errors.hh>

#include <algorithm>
#include <stdexcept>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

using namespace wordrep;

auto DeBruijnDigraph::loop_count() const -> size_t
{
    return std::count_if(arcs.begin(), arcs.end(), [](const DeBruijnArc & a) { return a.tail == a.head; });
}

auto SimplifiedDeBruijnGraph::canonical_label(Edge e) const -> const string &
{
    return edge_labels.at(Edge::between(e.u, e.v)).front();
}

auto wordrep::build_debruijn(int n, int k, size_t vertex_limit) -> DeBruijnDigraph
{
    if (n < 1)
        throw std::invalid_argument("de Bruijn word length must be at least 1, got " + to_string(n));
    if (k < 2 || k > 10)
        throw std::invalid_argument("de Bruijn alphabet size must be in 2..10, got " + to_string(k));

    size_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<size_t>(k);
        if (count > vertex_limit)
            throw SizeLimitExceeded("B(" + to_string(n) + "," + to_string(k) + ") exceeds the vertex limit of " + to_string(vertex_limit));
    }

    DeBruijnDigraph b;
    b.n = n;
    b.k = k;
    b.vertices.reserve(count);
    for (size_t index = 0; index < count; ++index) {
        string word(static_cast<size_t>(n), '0');
        auto rest = index;
        for (int pos = n - 1; pos >= 0; --pos) {
            word[static_cast<size_t>(pos)] = static_cast<char>('0' + rest % static_cast<size_t>(k));
            rest /= static_cast<size_t>(k);
        }
        b.vertices.push_back(std::move(word));
    }

    // x1..xn -> x2..x(n+1): the head index drops the leading digit and appends the new one.
    b.arcs.reserve(count * static_cast<size_t>(k));
    for (size_t tail = 0; tail < count; ++tail)
        for (int letter = 0; letter < k; ++letter) {
            auto head = (tail * static_cast<size_t>(k)) % count + static_cast<size_t>(letter);
            b.arcs.push_back(DeBruijnArc{static_cast<VertexId>(tail), static_cast<VertexId>(head),
                b.vertices[tail] + static_cast<char>('0' + letter)});
        }
    return b;
}

auto wordrep::simplify(const DeBruijnDigraph & b) -> SimplifiedDeBruijnGraph
{
    SimplifiedDeBruijnGraph s;
    s.n = b.n;
    s.k = b.k;

    vector<Edge> edges;
    for (auto & arc : b.arcs) {
        if (arc.tail == arc.head)
            continue;
        auto e = Edge::between(arc.tail, arc.head);
        auto & labels = s.edge_labels[e];
        if (labels.empty())
            edges.push_back(e);
        labels.push_back(arc.word);
    }
    for (auto & [_, labels] : s.edge_labels) {
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    }
    s.graph = LabeledGraph::from_indices(b.vertices, edges);
    return s;
}

auto wordrep::build_simplified(int n, int k, size_t vertex_limit) -> SimplifiedDeBruijnGraph
{
    return simplify(build_debruijn(n, k, vertex_limit));
}
