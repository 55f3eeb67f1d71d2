#include <wordrep/errors.hh>
#include <wordrep/words.hh>

#include <sstream>
#include <stdexcept>

using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

using namespace wordrep;

auto wordrep::alternate(const Word & w, VertexId x, VertexId y) -> bool
{
    if (x == y)
        throw std::invalid_argument("alternate: letters must differ");
    optional<VertexId> previous;
    for (auto letter : w.letters) {
        if (letter != x && letter != y)
            continue;
        if (previous == letter)
            return false;
        previous = letter;
    }
    return true;
}

auto wordrep::graph_of_word(const Word & w, const vector<string> & labels) -> LabeledGraph
{
    auto n = labels.size();
    vector<bool> occurs(n, false);
    for (auto letter : w.letters) {
        if (letter >= n)
            throw std::invalid_argument("graph_of_word: letter " + std::to_string(letter) + " outside the alphabet");
        occurs[letter] = true;
    }
    for (size_t v = 0; v < n; ++v)
        if (! occurs[v])
            throw MissingLetter(v);

    // One left-to-right pass: a pair stops alternating once the same letter shows up twice
    // in a row in its restriction.
    vector<long> last(n, -1);
    vector<vector<bool>> broken(n, vector<bool>(n, false));
    for (size_t pos = 0; pos < w.letters.size(); ++pos) {
        auto x = w.letters[pos];
        if (last[x] >= 0)
            for (size_t y = 0; y < n; ++y)
                if (y != x && last[y] < last[x])
                    broken[x][y] = broken[y][x] = true;
        last[x] = static_cast<long>(pos);
    }

    vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (! broken[a][b])
                edges.push_back(Edge{a, b});
    return LabeledGraph::from_indices(labels, edges);
}

auto wordrep::graph_of_word(const Word & w, size_t n_vertices) -> LabeledGraph
{
    vector<string> labels;
    for (size_t v = 0; v < n_vertices; ++v)
        labels.push_back(std::to_string(v));
    return graph_of_word(w, labels);
}

auto wordrep::represents(const Word & w, const LabeledGraph & g) -> bool
{
    return graph_of_word(w, g.labels()).edges() == g.edges();
}

namespace
{
    struct UniformSearch
    {
        const LabeledGraph & g;
        size_t n;
        int k;
        uint64_t budget;
        uint64_t & nodes;

        vector<VertexId> word;
        vector<int> used;
        vector<long> last;

        auto alternation_still_possible(VertexId x) const -> bool
        {
            // x is about to be appended; every neighbour y must have appeared since x's last copy.
            if (last[x] < 0)
                return true;
            bool ok = true;
            g.neighbours(x).for_each([&](size_t y) {
                if (last[y] < last[x])
                    ok = false;
            });
            return ok;
        }

        auto complete_word_matches() const -> bool
        {
            Word w{word};
            for (VertexId a = 0; a < n; ++a)
                for (VertexId b = a + 1; b < n; ++b)
                    if (! g.adjacent(a, b) && alternate(w, a, b))
                        return false;
            return true;
        }

        auto search() -> bool
        {
            if (++nodes > budget)
                throw BudgetExceeded("uniform word search exceeded " + std::to_string(budget) + " nodes");
            if (word.size() == n * static_cast<size_t>(k))
                return complete_word_matches();

            for (VertexId x = 0; x < n; ++x) {
                if (used[x] == k)
                    continue;
                // a cyclic shift of a uniform representant is one too, so the word may start with vertex 0
                if (word.empty() && x != 0)
                    break;
                if (! alternation_still_possible(x))
                    continue;

                auto saved_last = last[x];
                word.push_back(x);
                ++used[x];
                last[x] = static_cast<long>(word.size() - 1);

                if (search())
                    return true;

                last[x] = saved_last;
                --used[x];
                word.pop_back();
            }
            return false;
        }
    };
}

auto wordrep::find_uniform_representant(const LabeledGraph & g, int k_max, uint64_t budget) -> optional<Word>
{
    if (k_max < 1)
        throw std::invalid_argument("find_uniform_representant: k_max must be at least 1");
    if (g.size() == 0)
        return Word{};

    uint64_t nodes = 0;
    for (int k = 1; k <= k_max; ++k) {
        UniformSearch s{g, g.size(), k, budget, nodes, {}, vector<int>(g.size(), 0), vector<long>(g.size(), -1)};
        if (s.search())
            return Word{std::move(s.word)};
    }
    return nullopt;
}

auto wordrep::word_to_string(const Word & w, const LabeledGraph & g) -> string
{
    string result;
    for (auto letter : w.letters) {
        if (! result.empty())
            result += ' ';
        result += g.label(letter);
    }
    return result;
}

auto wordrep::parse_word(const string & text, const LabeledGraph & g) -> Word
{
    std::istringstream in(text);
    Word w;
    string token;
    while (in >> token)
        w.letters.push_back(g.vertex(token));
    return w;
}
