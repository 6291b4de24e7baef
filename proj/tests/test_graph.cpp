#include "doctest.h"

#include "gocha/errors.hpp"
#include "gocha/graph.hpp"
#include "gocha/groebner.hpp"
#include "helpers.hpp"

using namespace gocha;

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    Graph g(3, {{2, 1}});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("two_color")
{
    Graph path(3, {{1, 2}, {2, 3}});
    auto c = two_color(path);
    REQUIRE(c.has_value());
    CHECK((*c)[1] == Color::white);
    CHECK((*c)[2] == Color::black);
    CHECK((*c)[3] == Color::white);

    Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(two_color(triangle).has_value());

    Graph wedge(3, {{1, 2}, {1, 3}});
    auto cw = two_color(wedge);
    REQUIRE(cw.has_value());
    for (auto [i, j] : wedge.edges)
        CHECK((*cw)[size_t(i)] != (*cw)[size_t(j)]);
}

TEST_CASE("two_color agrees with the odd-walk oracle")
{
    for (int d = 1; d <= 4; ++d)
        for (const auto& g : testing::all_graphs(d))
            CHECK(two_color(g).has_value() == testing::bipartite_by_walks(g));
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 5 + int(rng() % 4);
        Graph g = random_graph(rng, d, 0.4);
        CHECK(two_color(g).has_value() == testing::bipartite_by_walks(g));
    }
}

TEST_CASE("bipartite_relabeling")
{
    Graph wedge(3, {{1, 2}, {1, 3}});
    auto perm = bipartite_relabeling(wedge);
    REQUIRE(perm.has_value());
    for (int v = 1; v <= 3; ++v)
        CHECK((*perm)[size_t(v)] == v); // identity: 1 is the only tail

    Graph single(2, {{1, 2}});
    auto p2 = bipartite_relabeling(single);
    REQUIRE(p2.has_value());
    CHECK((*p2)[1] == 1);
    CHECK((*p2)[2] == 2);

    CHECK_FALSE(bipartite_relabeling(Graph(3, {{1, 2}, {1, 3}, {2, 3}})).has_value());
}

TEST_CASE("relabeled arcs are combinatorially free exactly when bipartite")
{
    auto check_graph = [](const Graph& g) {
        auto perm = bipartite_relabeling(g);
        CHECK(perm.has_value() == two_color(g).has_value());
        if (!perm || g.edges.empty())
            return;
        Graph h = apply_relabeling(g, *perm);
        std::vector<Word> arcs;
        for (auto [i, j] : h.edges)
            arcs.push_back(Word::generator(i) * Word::generator(j));
        CHECK(combinatorially_free(arcs));
    };
    for (int d = 1; d <= 4; ++d)
        for (const auto& g : testing::all_graphs(d))
            check_graph(g);
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial)
        check_graph(random_graph(rng, 5 + int(rng() % 3), 0.35));
}

TEST_CASE("clique_table")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    CliqueTable t = clique_table(example, 6);
    CHECK(t.counts[0] == 1);
    CHECK(t.counts[1] == 6);
    CHECK(t.counts[2] == 5);
    CHECK(t.counts[3] == 1);
    CHECK(t.counts[4] == 0);
    CHECK(t.clique_number == 3);

    Graph edgeless(4, {});
    CliqueTable e = clique_table(edgeless, 3);
    CHECK(e.counts == std::vector<long long>{1, 4, 0, 0});
    CHECK(e.clique_number == 1);

    // K_4 against the subset-enumeration oracle
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CliqueTable k = clique_table(k4, 5);
    auto choose = [](int n, int r) {
        long long v = 1;
        for (int i = 0; i < r; ++i)
            v = v * (n - i) / (i + 1);
        return v;
    };
    for (int n = 0; n <= 4; ++n)
        CHECK(k.counts[size_t(n)] == choose(4, n));
    CHECK(k.counts[5] == 0);
}

TEST_CASE("clique_table equals brute-force subset enumeration")
{
    auto brute = [](const Graph& g, int max_n) {
        std::vector<long long> counts(size_t(max_n) + 1, 0);
        for (uint32_t mask = 0; mask < (1u << g.d); ++mask) {
            std::vector<int> vs;
            for (int v = 1; v <= g.d; ++v)
                if (mask >> (v - 1) & 1)
                    vs.push_back(v);
            if (int(vs.size()) > max_n)
                continue;
            bool complete = true;
            for (size_t a = 0; a < vs.size() && complete; ++a)
                for (size_t b = a + 1; b < vs.size(); ++b)
                    if (!g.has_edge(vs[a], vs[b])) {
                        complete = false;
                        break;
                    }
            if (complete)
                ++counts[vs.size()];
        }
        return counts;
    };
    for (int d = 1; d <= 4; ++d)
        for (const auto& g : testing::all_graphs(d)) {
            CliqueTable t = clique_table(g, d);
            CHECK(std::vector<long long>(t.counts.begin(), t.counts.begin() + d + 1) ==
                  brute(g, d));
        }
    std::mt19937 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        CliqueTable t = clique_table(g, 6);
        CHECK(std::vector<long long>(t.counts.begin(), t.counts.begin() + 7) == brute(g, 6));
    }
}

TEST_CASE("clique count identities")
{
    // sum_n c_n(K_m) = 2^m
    for (int m = 1; m <= 6; ++m) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                edges.emplace_back(i, j);
        CliqueTable t = clique_table(Graph(m, std::move(edges)), m);
        long long total = 0;
        for (long long c : t.counts)
            total += c;
        CHECK(total == (1ll << m));
    }
    // disjoint union adds counts for n >= 1
    std::mt19937 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = random_graph(rng, 3, 0.5);
        Graph b = random_graph(rng, 3, 0.5);
        std::vector<std::pair<int, int>> edges = a.edges;
        for (auto [i, j] : b.edges)
            edges.emplace_back(i + 3, j + 3);
        Graph u(6, std::move(edges));
        CliqueTable ta = clique_table(a, 6), tb = clique_table(b, 6), tu = clique_table(u, 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(tu.counts[size_t(n)] == ta.counts[size_t(n)] + tb.counts[size_t(n)]);
    }
}

TEST_CASE("clique_polynomial")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    IntSeries cp = clique_polynomial(example, 3);
    CHECK(cp.coeffs() == std::vector<BigInt>{1, -6, 5, -1});

    IntSeries tri = clique_polynomial(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 3);
    CHECK(tri.coeffs() == std::vector<BigInt>{1, -3, 3, -1}); // = (1-t)^3

    IntSeries e2 = clique_polynomial(Graph(2, {}), 1);
    CHECK(e2.coeffs() == std::vector<BigInt>{1, -2});
}

TEST_CASE("condition_decompose")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    ConditionSplit s = condition_decompose(example);
    CHECK(s.a_vertices == std::vector<int>{1, 2, 3});
    CHECK(s.b_vertices == std::vector<int>{4, 5, 6});
    CHECK(s.a_edges.size() == 2);
    CHECK(s.b_edges.size() == 3);
    CHECK(split_b_clique_number(example, s) == 3);

    ConditionSplit bip = condition_decompose(Graph(3, {{1, 2}, {1, 3}}));
    CHECK(bip.b_vertices.empty());

    ConditionSplit tri = condition_decompose(Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(tri.a_vertices.empty());
    CHECK(tri.b_vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("graph parsers")
{
    Graph g = parse_graph_json(R"({"d": 3, "edges": [[1,2],[1,3]]})");
    CHECK(g.d == 3);
    CHECK(g.edges.size() == 2);
    CHECK(parse_graph_json(graph_to_json(g)).edges == g.edges);

    Graph t = parse_graph_text("d 3\n1 2\n2 3 # comment\n");
    CHECK(t.d == 3);
    CHECK(t.edges.size() == 2);

    CHECK_THROWS_AS(parse_graph_text("d 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("d 6\n7 9\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("d 3\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"d": 3})"), ParseError);
    try {
        parse_graph_text("d 3\n1 2\n1 4\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}
