#include "doctest.h"

#include <algorithm>
#include <random>

#include "gocha/errors.hpp"
#include "gocha/gradation.hpp"
#include "helpers.hpp"

using namespace gocha;

namespace {

Presentation literal_raag(Context ctx, const Graph& g, int N)
{
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = N;
    for (auto [i, j] : g.edges)
        pres.relations.emplace_back(
            GroupWord::commutator(GroupWord::generator(i), GroupWord::generator(j)),
            RelationTag::b_edge, i, j);
    return pres;
}

IntSeries free_dims(uint32_t d, int N)
{
    IntSeries s = IntSeries::zeros(N);
    BigInt dp = 1;
    for (int n = 0; n <= N; ++n, dp *= d)
        s[n] = dp;
    return s;
}

} // namespace

TEST_CASE("single quadratic relation on two generators")
{
    Context ctx(2, 2);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 3;
    pres.relations.emplace_back(parse_group_word("[x1,x2]", 2));
    FilteredIdealBasis basis = ideal_image(pres);
    CHECK(basis.pivot_dims()[2] == 1);
    CHECK(basis.pivot_dims()[3] == 4);
    IntSeries dims = graded_dims(basis);
    CHECK(dims.coeffs() == std::vector<BigInt>{1, 2, 3, 4});
}

TEST_CASE("free presentation")
{
    Context ctx(2, 2);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 5;
    GochaReport rep = compute_gocha(pres);
    CHECK(rep.dims == free_dims(2, 5));
    CHECK(rep.matched_model == "free");
    CHECK(rep.mild);
}

TEST_CASE("valuation-1 relation kills a generator")
{
    Context ctx(3, 3);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 4;
    pres.relations.emplace_back(parse_group_word("x1", 3));
    FilteredIdealBasis basis = ideal_image(pres);
    CHECK_FALSE(basis.warnings().empty());
    IntSeries dims = graded_dims(basis);
    // killing one generator leaves the free algebra on two
    BigInt dp = 1;
    for (int n = 0; n <= 4; ++n, dp *= 2)
        CHECK(dims[n] == dp);
}

TEST_CASE("zero and overly deep relations are rejected")
{
    Context ctx(2, 3);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 2;
    pres.relations.emplace_back(parse_group_word("x1*x1^-1", 3));
    CHECK_THROWS_AS(ideal_image(pres), std::invalid_argument);

    Presentation deep;
    deep.ctx = ctx;
    deep.cutoff = 2;
    deep.relations.emplace_back(parse_group_word("[[x1,x2],x3]", 3)); // valuation 3 > N
    CHECK_THROWS_AS(ideal_image(deep), std::invalid_argument);
}

TEST_CASE("literal commutator presentations match the graph algebra")
{
    Context ctx(2, 6);
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    Presentation pres = literal_raag(ctx, example, 4);
    IntSeries dims = graded_dims(ideal_image(pres));
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 6);
    CHECK(dims[2] == 31);
    CHECK(dims[3] == 157);
    CHECK(dims.prefix_equal(invert_int_series(clique_polynomial(example, 4)), 4));

    GochaReport rep = compute_gocha(pres);
    CHECK(rep.matched_model == "clique-polynomial");
}

TEST_CASE("tails of high valuation do not change the graded dimensions")
{
    Context ctx(2, 6);
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    const int N = 4;
    IntSeries expect = invert_int_series(clique_polynomial(example, N));

    auto with_tails = [&](const std::string& t12, const std::string& t13) {
        Presentation pres;
        pres.ctx = ctx;
        pres.cutoff = N;
        pres.relations.emplace_back(parse_group_word("[x1,x2]*" + t12, 6), RelationTag::a_edge,
                                    1, 2);
        pres.relations.emplace_back(parse_group_word("[x1,x3]*" + t13, 6), RelationTag::a_edge,
                                    1, 3);
        pres.relations.emplace_back(parse_group_word("[x4,x5]", 6), RelationTag::b_edge, 4, 5);
        pres.relations.emplace_back(parse_group_word("[x4,x6]", 6), RelationTag::b_edge, 4, 6);
        pres.relations.emplace_back(parse_group_word("[x5,x6]", 6), RelationTag::b_edge, 5, 6);
        return pres;
    };

    for (auto [t12, t13] : {std::make_pair("[[x1,x2],x3]", "[x2,[x1,x3]]"),
                            std::make_pair("[[x1,x4],x5]", "[x6,[x2,x3]]"),
                            std::make_pair("[[x1,x2],[x1,x3]]", "[[x5,x6],x4]")}) {
        Presentation pres = with_tails(t12, t13);
        for (const auto& r : pres.relations) {
            auto v = zassenhaus_degree(r.word, ctx, N);
            REQUIRE(v.has_value());
            CHECK(*v == 2);
        }
        IntSeries dims = graded_dims(ideal_image(pres));
        CHECK(dims.prefix_equal(expect, N));
    }
}

TEST_CASE("compressed and full top-block modes agree")
{
    std::mt19937 rng(3111);
    for (uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 12; ++trial) {
            uint32_t d = 2 + rng() % 2;
            Context ctx(p, d);
            int N = 3 + int(rng() % 3);
            Graph g = random_graph(rng, int(d), 0.7);
            if (g.edges.empty())
                continue;
            Presentation pres;
            pres.ctx = ctx;
            pres.cutoff = N;
            for (auto [i, j] : g.edges) {
                std::string word = "[x" + std::to_string(i) + ",x" + std::to_string(j) + "]";
                if (trial % 2 == 0)
                    word += "*[[x1,x2],x" + std::to_string(1 + (trial % d)) + "]";
                pres.relations.emplace_back(parse_group_word(word, int(d)));
            }
            IdealImageOptions full, comp;
            full.top_block = IdealImageOptions::TopBlock::full;
            comp.top_block = IdealImageOptions::TopBlock::compressed;
            IntSeries a = graded_dims(ideal_image(pres, full));
            IntSeries b = graded_dims(ideal_image(pres, comp));
            CHECK(a == b);
        }
    }
}

TEST_CASE("pivot dimensions are monotone under adding relations")
{
    Context ctx(2, 3);
    std::mt19937 rng(321);
    std::vector<std::string> pool = {"[x1,x2]", "[x2,x3]", "[x1,x3]", "x1^2", "[x1,[x2,x3]]"};
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 4;
    std::vector<int64_t> prev(5, 0);
    for (const auto& word : pool) {
        pres.relations.emplace_back(parse_group_word(word, 3));
        FilteredIdealBasis basis = ideal_image(pres);
        for (int n = 0; n <= 4; ++n) {
            CHECK(basis.pivot_dims()[size_t(n)] >= prev[size_t(n)]);
            prev[size_t(n)] = basis.pivot_dims()[size_t(n)];
        }
    }
}

TEST_CASE("relation order does not change the dimensions")
{
    Context ctx(2, 4);
    Graph g(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    Presentation pres = literal_raag(ctx, g, 4);
    IntSeries base = graded_dims(ideal_image(pres));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(pres.relations.begin(), pres.relations.end(), rng);
        CHECK(graded_dims(ideal_image(pres)) == base);
    }
}

TEST_CASE("echelon rows are interreduced with distinct pivots")
{
    Context ctx(3, 2);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 4;
    pres.relations.emplace_back(parse_group_word("[x1,x2]*[[x1,x2],x1]", 2));
    IdealImageOptions full;
    full.top_block = IdealImageOptions::TopBlock::full;
    FilteredIdealBasis basis = ideal_image(pres, full);
    auto rows = basis.echelon_rows_below_top();
    REQUIRE_FALSE(rows.empty());
    std::vector<Word> pivots;
    for (const auto& r : rows) {
        REQUIRE_FALSE(r.support.empty());
        CHECK(r.support.front().first.degree() == r.valuation);
        pivots.push_back(r.support.front().first);
    }
    // pivot monomials are distinct, and no row's support meets another's pivot
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < rows.size(); ++b) {
            if (a == b)
                continue;
            for (const auto& [word, c] : rows[a].support)
                CHECK_FALSE(word == pivots[b]);
        }
}

TEST_CASE("filtered and graded constructions agree on homogeneous input")
{
    Context ctx(2, 6);
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    auto rep = verify_homogeneous_gradation(ctx, example, 4);
    CHECK(rep.equal);

    Context c3(3, 3);
    auto edgeless = verify_homogeneous_gradation(c3, Graph(3, {}), 4);
    CHECK(edgeless.equal);
    CHECK(edgeless.filtered_dims == free_dims(3, 4));

    auto k3 = verify_homogeneous_gradation(c3, Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 5);
    CHECK(k3.equal);
    for (int n = 0; n <= 5; ++n)
        CHECK(k3.filtered_dims[n] == BigInt((n + 1) * (n + 2) / 2));
}

TEST_CASE("graded_algebra_match")
{
    Context ctx(2, 6);
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    Presentation pres = literal_raag(ctx, example, 4);
    GradedMatchReport rep = graded_algebra_match(example, pres);
    CHECK(rep.equal);
    CHECK(rep.condition_satisfied);

    // path graph placed entirely in the B part: no bipartite hypothesis
    Context c3(2, 3);
    Graph path(3, {{1, 2}, {2, 3}});
    Presentation ppres = literal_raag(c3, path, 5);
    GradedMatchReport prep = graded_algebra_match(path, ppres);
    CHECK(prep.equal);

    // a wrong presentation is reported unequal but still compared
    Presentation wrong;
    wrong.ctx = c3;
    wrong.cutoff = 4;
    wrong.relations.emplace_back(parse_group_word("x1^2", 3));
    GradedMatchReport wrep = graded_algebra_match(path, wrong);
    CHECK_FALSE(wrep.condition_satisfied);
    CHECK_FALSE(wrep.equal);
    CHECK(wrep.first_discrepancy >= 2);
}

TEST_CASE("resource guard refuses oversized requests")
{
    Context ctx(2, 6);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 12;
    pres.relations.emplace_back(parse_group_word("[x1,x2]", 6));
    IdealImageOptions opts;
    opts.max_megabytes = 64;
    CHECK_THROWS_AS(ideal_image(pres, opts), ResourceError);
}
