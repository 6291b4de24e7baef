#include "doctest.h"

#include "gocha/errors.hpp"
#include "gocha/magnus.hpp"
#include "helpers.hpp"

using namespace gocha;

namespace {

Word w(std::initializer_list<int> letters)
{
    Word out;
    for (int i : letters)
        out = out * Word::generator(i);
    return out;
}

} // namespace

TEST_CASE("word parser")
{
    GroupWord c = parse_group_word("[x1,x2]", 4);
    CHECK(c.kind() == GroupWord::Kind::commutator);
    CHECK(c.children()[0].kind() == GroupWord::Kind::generator);
    CHECK(c.children()[0].generator_index() == 1);
    CHECK(c.children()[1].generator_index() == 2);

    GroupWord nested = parse_group_word("[x1,x2]*[[x1,x2],x3]", 4);
    CHECK(nested.kind() == GroupWord::Kind::product);
    CHECK(nested.children().size() == 2);
    CHECK(nested.children()[1].kind() == GroupWord::Kind::commutator);
    CHECK(nested.children()[1].children()[0].kind() == GroupWord::Kind::commutator);

    GroupWord pw = parse_group_word("x1^-1*x2^3", 4);
    CHECK(pw.kind() == GroupWord::Kind::product);
    CHECK(pw.children()[0].kind() == GroupWord::Kind::power);
    CHECK(pw.children()[0].exponent() == -1);
    CHECK(pw.children()[1].exponent() == 3);

    CHECK_THROWS_AS(parse_group_word("x5", 4), ParseError);
    CHECK_THROWS_AS(parse_group_word("[x1,x2", 4), ParseError);
    CHECK_THROWS_AS(parse_group_word("x1**x2", 4), ParseError);
    try {
        parse_group_word("x1 * y2", 4);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.col() == 6);
    }
}

TEST_CASE("word render round-trip")
{
    std::vector<std::string> words = {"x1", "[x1,x2]", "x1^-1*x2^3", "[x1,x2]*[[x1,x2],x3]",
                                      "(x1*x2)^2*[x3,[x1,x4]]"};
    for (const auto& text : words) {
        GroupWord word = parse_group_word(text, 4).simplified();
        GroupWord again = parse_group_word(render_group_word(word), 4).simplified();
        CHECK(word == again);
    }
}

TEST_CASE("magnus expansion basics")
{
    Context ctx(5, 3);
    const int N = 3;
    TruncatedSeries x1 = magnus_expand(parse_group_word("x1", 3), ctx, N);
    CHECK(x1.component(1) == Polynomial::generator(ctx, 1));
    CHECK(x1.component(2).is_zero());

    TruncatedSeries xinv = magnus_expand(parse_group_word("x1^-1", 3), ctx, N);
    CHECK(xinv.component(1) == Polynomial::generator(ctx, 1).scaled(4));
    CHECK(xinv.component(2) == Polynomial::monomial(ctx, w({1, 1}), 1));
    CHECK(xinv.component(3) == Polynomial::monomial(ctx, w({1, 1, 1}), 4));

    TruncatedSeries comm = magnus_expand(parse_group_word("[x1,x2]", 3), ctx, N);
    CHECK(comm.component(1).is_zero());
    CHECK(comm.component(2) == generator_commutator(ctx, 1, 2));
}

TEST_CASE("expansion is multiplicative and inverts")
{
    Context ctx(3, 3);
    const int N = 5;
    std::mt19937 rng(99);
    auto random_word = [&](auto&& self, int depth) -> GroupWord {
        int kind = int(rng() % (depth > 2 ? 2 : 5));
        switch (kind) {
        case 0:
            return GroupWord::generator(1 + int(rng() % 3));
        case 1:
            return GroupWord::power(GroupWord::generator(1 + int(rng() % 3)),
                                    int(rng() % 5) - 2);
        case 2:
            return GroupWord::inverse(self(self, depth + 1));
        case 3:
            return GroupWord::commutator(self(self, depth + 1), self(self, depth + 1));
        default:
            return GroupWord::product({self(self, depth + 1), self(self, depth + 1)});
        }
    };
    TruncatedSeries one = TruncatedSeries::one(ctx, N);
    for (int trial = 0; trial < 25; ++trial) {
        GroupWord a = random_word(random_word, 0);
        GroupWord b = random_word(random_word, 0);
        TruncatedSeries ea = magnus_expand(a, ctx, N);
        TruncatedSeries eb = magnus_expand(b, ctx, N);
        TruncatedSeries eab = magnus_expand(GroupWord::product({a, b}), ctx, N);
        CHECK(eab + one == (ea + one) * (eb + one));
        TruncatedSeries einv = magnus_expand(GroupWord::inverse(a), ctx, N);
        CHECK((ea + one) * (einv + one) == one);
    }
}

TEST_CASE("zassenhaus degree")
{
    Context ctx(3, 2);
    CHECK(zassenhaus_degree(parse_group_word("x1", 2), ctx, 6) == 1);
    CHECK(zassenhaus_degree(parse_group_word("[x1,x2]", 2), ctx, 6) == 2);
    CHECK(zassenhaus_degree(parse_group_word("x1^3", 2), ctx, 6) == 3); // p = 3
    CHECK(zassenhaus_degree(parse_group_word("[x1,[x1,x2]]", 2), ctx, 6) == 3);
    CHECK_FALSE(zassenhaus_degree(parse_group_word("x1*x1^-1", 2), ctx, 4).has_value());
    CHECK(format_zassenhaus(std::nullopt, 4) == ">= 5");

    Context f2(2, 2);
    CHECK(zassenhaus_degree(parse_group_word("x1^2", 2), f2, 6) == 2);
}

TEST_CASE("closed-form commutator expansion")
{
    Context ctx(3, 4);
    TruncatedSeries cf = commutator_closed_form(1, 2, ctx, 5);
    CHECK(cf.component(1).is_zero());
    CHECK(cf.component(2) == generator_commutator(ctx, 1, 2));
    // degree 3: -(X_u + X_v) [X_u; X_v]
    Polynomial expected3 = (Polynomial::generator(ctx, 1) + Polynomial::generator(ctx, 2))
                               .scaled(ctx.p - 1) *
                           generator_commutator(ctx, 1, 2);
    CHECK(cf.component(3) == expected3);

    CHECK_THROWS_AS(commutator_closed_form(2, 2, ctx, 4), std::invalid_argument);
}

TEST_CASE("closed form equals the expansion for all pairs")
{
    for (uint32_t p : {2u, 3u, 5u}) {
        Context ctx(p, 4);
        for (int N : {2, 5, 8}) {
            for (int u = 1; u <= 4; ++u) {
                for (int v = 1; v <= 4; ++v) {
                    if (u == v)
                        continue;
                    GroupWord word = GroupWord::commutator(GroupWord::generator(u),
                                                           GroupWord::generator(v));
                    CHECK(magnus_expand(word, ctx, N) == commutator_closed_form(u, v, ctx, N));
                }
            }
        }
    }
}

TEST_CASE("pair power identities")
{
    for (uint32_t p : {2u, 3u}) {
        Context ctx(p, 2);
        auto rep = check_pair_power_identities(10, ctx);
        CHECK(rep.append_right);
        CHECK(rep.prepend_left);
        CHECK(rep.sandwich);
        CHECK(rep.all());
    }
}

TEST_CASE("presentation files")
{
    std::string text = "# the 6-vertex example\n"
                       "p 2\n"
                       "d 6\n"
                       "N 6\n"
                       "rel A 1 2 [x1,x2]*[[x1,x2],x3]\n"
                       "rel A 1 3 [x1,x3]*[x2,[x1,x3]]\n"
                       "rel B 4 5 [x4,x5]\n"
                       "rel B 4 6 [x4,x6]\n"
                       "rel B 5 6 [x5,x6]\n";
    Presentation pres = parse_presentation(text);
    CHECK(pres.ctx.p == 2);
    CHECK(pres.ctx.d == 6);
    CHECK(pres.cutoff == 6);
    CHECK(pres.relations.size() == 5);
    CHECK(pres.relations[0].tag == RelationTag::a_edge);
    CHECK(pres.relations[2].tag == RelationTag::b_edge);

    auto g = graph_from_tags(pres);
    REQUIRE(g.has_value());
    CHECK(g->edges.size() == 5);
    auto split = split_from_tags(pres);
    REQUIRE(split.has_value());
    CHECK(split->a_edges.size() == 2);
    CHECK(split->b_vertices == std::vector<int>{4, 5, 6});

    CHECK_THROWS_AS(parse_presentation("d 2\nrel - x1\n"), ParseError); // missing p
    CHECK_THROWS_AS(parse_presentation("p 4\nd 2\n"), ParseError);      // not prime
    try {
        parse_presentation("p 2\nd 2\nrel A 1 2 x1*\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("edge relation hypotheses")
{
    std::string text = "p 2\nd 6\nN 4\n"
                       "rel A 1 2 [x1,x2]*[[x1,x2],x3]\n"
                       "rel A 1 3 [x1,x3]*[x2,[x1,x3]]\n"
                       "rel B 4 5 [x4,x5]\n"
                       "rel B 4 6 [x4,x6]\n"
                       "rel B 5 6 [x5,x6]\n";
    Presentation pres = parse_presentation(text);
    Graph g(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    auto split = split_from_tags(pres);
    REQUIRE(split.has_value());
    EdgeRelationReport rep = check_edge_relations(g, *split, pres);
    CHECK(rep.satisfied);
    CHECK(rep.a_part_bipartite);

    // tail of too-low valuation on an A edge
    Presentation bad = parse_presentation("p 2\nd 2\nN 4\nrel A 1 2 x1*x2\n");
    Graph g2(2, {{1, 2}});
    auto split2 = split_from_tags(bad);
    EdgeRelationReport rep2 = check_edge_relations(g2, *split2, bad);
    CHECK_FALSE(rep2.satisfied);
    CHECK(rep2.edges[0].reason == "degree-1 component is nonzero");

    // B edge must be the literal commutator
    Presentation bad3 = parse_presentation("p 2\nd 2\nN 4\nrel B 1 2 [x1,x2]*[[x1,x2],x1]\n");
    EdgeRelationReport rep3 = check_edge_relations(g2, *split_from_tags(bad3), bad3);
    CHECK_FALSE(rep3.satisfied);

    // missing relation
    Presentation partial = parse_presentation("p 2\nd 6\nN 4\nrel B 4 5 [x4,x5]\n");
    EdgeRelationReport rep4 = check_edge_relations(g, condition_decompose(g), partial);
    CHECK_FALSE(rep4.satisfied);
    CHECK_FALSE(rep4.problems.empty());
}
