#include <wordrep/debruijn.hh>
#include <wordrep/errors.hh>
#include <wordrep/subiso.hh>

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace wordrep;

namespace
{
    auto all_words(int length, int k) -> std::vector<std::string>
    {
        std::vector<std::string> result{""};
        for (int i = 0; i < length; ++i) {
            std::vector<std::string> next;
            for (auto & w : result)
                for (int c = 0; c < k; ++c)
                    next.push_back(w + char('0' + c));
            result = std::move(next);
        }
        return result;
    }

    auto label_edges(const SimplifiedDeBruijnGraph & s) -> std::map<std::pair<std::string, std::string>, std::vector<std::string>>
    {
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> result;
        for (auto & [e, labels] : s.edge_labels)
            result[{s.graph.label(e.u), s.graph.label(e.v)}] = labels;
        return result;
    }
}

TEST_CASE("build_debruijn examples")
{
    auto b1 = build_debruijn(1, 2);
    CHECK(b1.vertices == std::vector<std::string>{"0", "1"});
    std::multiset<std::pair<std::string, std::string>> arcs;
    for (auto & a : b1.arcs)
        arcs.emplace(b1.vertices[a.tail], b1.vertices[a.head]);
    CHECK(arcs == std::multiset<std::pair<std::string, std::string>>{{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});

    auto b2 = build_debruijn(2, 2);
    CHECK(b2.vertices.size() == 4);
    CHECK(b2.arcs.size() == 8);
    CHECK(b2.loop_count() == 2);

    auto b23 = build_debruijn(2, 3);
    CHECK(b23.vertices.size() == 9);
    CHECK(b23.arcs.size() == 27);
    CHECK(b23.loop_count() == 3);

    CHECK_THROWS_AS(build_debruijn(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_debruijn(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_debruijn(13, 2), SizeLimitExceeded);
    CHECK_NOTHROW(build_debruijn(13, 2, 1u << 13));
}

TEST_CASE("simplify examples")
{
    auto s1 = build_simplified(1, 2);
    CHECK(s1.graph.size() == 2);
    CHECK(s1.graph.edge_count() == 1);
    CHECK(label_edges(s1)[{"0", "1"}] == std::vector<std::string>{"01", "10"});

    auto s22 = build_simplified(2, 2);
    CHECK(s22.graph.size() == 4);
    auto edges = label_edges(s22);
    std::set<std::pair<std::string, std::string>> keys;
    for (auto & [k, v] : edges)
        keys.insert(k);
    CHECK(keys == std::set<std::pair<std::string, std::string>>{{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}, {"01", "10"}});
    CHECK(edges[{"01", "10"}] == std::vector<std::string>{"010", "101"});
    CHECK(s22.canonical_label(Edge::between(s22.graph.vertex("01"), s22.graph.vertex("10"))) == "010");

    auto s23 = build_simplified(2, 3);
    CHECK(s23.graph.size() == 9);
    CHECK(s23.graph.edge_count() == 21);

    auto s33 = build_simplified(3, 3);
    CHECK(s33.graph.size() == 27);
    CHECK(s33.graph.edge_count() == 75);

    CHECK(build_simplified(4, 2).graph.size() == 16);
}

TEST_CASE("de Bruijn counting invariants")
{
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) {
            auto b = build_debruijn(n, k);
            std::size_t kn = 1;
            for (int i = 0; i < n; ++i)
                kn *= k;
            CHECK(b.vertices.size() == kn);
            CHECK(b.arcs.size() == kn * k);
            CHECK(b.loop_count() == std::size_t(k));
            CHECK(b.vertices == all_words(n, k));

            // Arcs straight from the definition: x1..xn -> x2..x{n+1} for each (n+1)-word.
            std::set<std::pair<std::string, std::string>> arc_set;
            for (auto & w : all_words(n + 1, k))
                if (w.substr(0, n) != w.substr(1))
                    arc_set.emplace(w.substr(0, n), w.substr(1));
            std::size_t mutual = 0;
            for (auto & [u, v] : arc_set)
                if (u < v && arc_set.contains({v, u}))
                    ++mutual;
            // The mutual pairs are exactly the alternating words abab.. / baba..
            std::size_t alternating = 0;
            for (auto & w : all_words(n, k)) {
                bool alt = w.size() >= 2 && w[0] != w[1];
                for (std::size_t i = 2; i < w.size(); ++i)
                    alt = alt && w[i] == w[i - 2];
                if (n == 1)
                    alt = true;
                alternating += alt;
            }
            CHECK(mutual * 2 == (n == 1 ? std::size_t(k * (k - 1)) : alternating));

            auto s = simplify(b);
            CHECK(s.graph.edge_count() == kn * k - k - mutual);

            for (auto & [e, labels] : s.edge_labels) {
                REQUIRE(! labels.empty());
                CHECK(std::is_sorted(labels.begin(), labels.end()));
                auto a = s.graph.label(e.u), c = s.graph.label(e.v);
                CHECK(labels.size() == (arc_set.contains({a, c}) && arc_set.contains({c, a}) ? 2u : 1u));
                for (auto & l : labels) {
                    CHECK(l.size() == std::size_t(n + 1));
                    auto prefix = l.substr(0, n), suffix = l.substr(1);
                    CHECK(((prefix == a && suffix == c) || (prefix == c && suffix == a)));
                }
            }
        }
}

TEST_CASE("S(n,k) is an induced subgraph of S(n,k+1) under label inclusion")
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k) {
            auto small = build_simplified(n, k).graph;
            auto big = build_simplified(n, k + 1).graph;
            Embedding e;
            for (auto & l : small.labels())
                e.map.push_back(big.vertex(l));
            CHECK(is_induced_embedding(small, big, e));
        }
}
