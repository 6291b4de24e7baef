#include "doctest.h"

#include "gocha/cohomology.hpp"
#include "gocha/json_io.hpp"
#include "helpers.hpp"

using namespace gocha;

TEST_CASE("cohomology table of the 6-vertex example")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    CohomologyTable t = cohomology_table(example);
    CHECK(t.h == std::vector<long long>{1, 6, 5, 1, 0});
    CHECK(t.cd == 3);
    CHECK(t.certified);
    CHECK(t.certificate == "raag");
}

TEST_CASE("free and bipartite baselines")
{
    for (int d = 2; d <= 4; ++d) {
        CohomologyTable t = cohomology_table(Graph(d, {}));
        CHECK(t.h == std::vector<long long>{1, d, 0});
        CHECK(t.cd == 1);
    }
    Graph wedge(3, {{1, 2}, {1, 3}});
    CohomologyTable t = cohomology_table(wedge);
    CHECK(t.h == std::vector<long long>{1, 3, 2, 0});
    CHECK(t.cd == 2);
}

TEST_CASE("certificates depend on the presentation")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    Presentation pres = parse_presentation("p 2\nd 6\nN 4\n"
                                           "rel A 1 2 [x1,x2]*[[x1,x2],x3]\n"
                                           "rel A 1 3 [x1,x3]*[x2,[x1,x3]]\n"
                                           "rel B 4 5 [x4,x5]\n"
                                           "rel B 4 6 [x4,x6]\n"
                                           "rel B 5 6 [x5,x6]\n");
    CohomologyTable t = cohomology_table(example, pres);
    CHECK(t.certified);
    CHECK(t.certificate == "condition1");
    REQUIRE(t.split_cd.has_value());
    CHECK(*t.split_cd == 3); // max(2, clique number of the B part)
    CHECK(t.cd == 3);

    // bipartite-only graph with quadratic relations: the mild quadratic case
    Graph wedge(3, {{1, 2}, {1, 3}});
    Presentation mp = parse_presentation("p 2\nd 3\nN 4\n"
                                         "rel A 1 2 [x1,x2]*[[x1,x3],x2]\n"
                                         "rel A 1 3 [x1,x3]*[[x1,x2],x3]\n");
    CohomologyTable mt = cohomology_table(wedge, mp);
    CHECK(mt.certified);
    CHECK(mt.certificate == "mild-quadratic");
    CHECK(mt.cd == 2);
    REQUIRE(mt.split_cd.has_value());
    CHECK(*mt.split_cd == 2);

    // a presentation that fails the hypotheses still gets a flagged table
    Presentation bad = parse_presentation("p 2\nd 3\nN 4\nrel A 1 2 x1*x2\nrel A 1 3 [x1,x3]\n");
    CohomologyTable bt = cohomology_table(wedge, bad);
    CHECK_FALSE(bt.certified);
    CHECK(bt.certificate == "none");
    CHECK(bt.note == "Koszulity not certified by this tool for this input");

    // literal commutators everywhere certify without bipartite hypotheses
    Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    Presentation lit = parse_presentation("p 2\nd 3\nN 4\n"
                                          "rel B 1 2 [x1,x2]\nrel B 1 3 [x1,x3]\n"
                                          "rel B 2 3 [x2,x3]\n");
    CohomologyTable lt = cohomology_table(k3, lit);
    CHECK(lt.certified);
    CHECK(lt.certificate == "raag");
}

TEST_CASE("dual dimensions equal clique counts")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    DualDimsReport rep = dual_dims_crosscheck(example, 5);
    CHECK(rep.equal);

    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    DualDimsReport k = dual_dims_crosscheck(k4, 5);
    CHECK(k.equal);
    CHECK(k.dual_dims.coeffs() == std::vector<BigInt>{1, 4, 6, 4, 1, 0});

    DualDimsReport e = dual_dims_crosscheck(Graph(3, {}), 4);
    CHECK(e.equal);
    CHECK(e.dual_dims.coeffs() == std::vector<BigInt>{1, 3, 0, 0, 0});

    for (int d = 1; d <= 4; ++d)
        for (const auto& g : testing::all_graphs(d))
            CHECK(dual_dims_crosscheck(g, 5).equal);
}

TEST_CASE("Koszul numeric identity")
{
    Graph example(6, {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(koszul_numeric_identity(example, 6).holds);

    // trees: clique polynomial 1 - d t + (d-1) t^2
    Graph tree(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
    IntSeries cp = clique_polynomial(tree, 2);
    CHECK(cp.coeffs() == std::vector<BigInt>{1, -5, 4});
    CHECK(koszul_numeric_identity(tree, 6).holds);

    Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(koszul_numeric_identity(k3, 6).holds);
}

TEST_CASE("Euler characteristic consistency")
{
    std::mt19937 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 2 + int(rng() % 5), 0.5);
        CohomologyTable t = cohomology_table(g);
        long long alt = 0;
        for (size_t n = 0; n < t.h.size(); ++n)
            alt += (n % 2 == 0 ? 1 : -1) * t.h[n];
        IntSeries cp = clique_polynomial(g, t.cd);
        BigInt sum = 0;
        for (const auto& c : cp.coeffs())
            sum += c;
        CHECK(BigInt(alt) == sum);
    }
}

TEST_CASE("prescribed cohomological dimension witnesses")
{
    for (int n = 1; n <= 6; ++n) {
        PrescribedCdWitness w = prescribed_cd_witness(n);
        CHECK(w.ok);
        CHECK(w.table.cd == n);
        if (n == 1)
            CHECK(w.graph.d == 2);
        else if (n == 2)
            CHECK(w.graph.d == 3);
        else
            CHECK(w.graph.d == n + 3);
    }
    // n = 3 is the 6-vertex example
    PrescribedCdWitness w3 = prescribed_cd_witness(3);
    CHECK(w3.graph.edges ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}});
    // n = 5: h = (1, 8, 2 + C(5,2), C(5,3), C(5,4), 1, 0)
    PrescribedCdWitness w5 = prescribed_cd_witness(5);
    CHECK(w5.table.h == std::vector<long long>{1, 8, 12, 10, 5, 1, 0});
    CHECK_THROWS_AS(prescribed_cd_witness(0), std::invalid_argument);
}

TEST_CASE("JSON reports are stable")
{
    Graph wedge(3, {{1, 2}, {1, 3}});
    CohomologyTable t = cohomology_table(wedge);
    CHECK(cohomology_table_json(t) ==
          R"({"cd":2,"certificate":"raag","certified":true,"h":[1,3,2,0],"note":"","split_cd":null})");

    Context ctx(2, 2);
    Presentation pres;
    pres.ctx = ctx;
    pres.cutoff = 3;
    GochaReport rep = compute_gocha(pres);
    CHECK(gocha_report_json(rep) ==
          R"({"dims":[1,2,4,8],"exact_to_degree":3,"matched_model":"free","mild":true,"warnings":[]})");
}
