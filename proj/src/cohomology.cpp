#include "gocha/cohomology.hpp"

#include <algorithm>

namespace gocha {

namespace {

CohomologyTable table_from_cliques(const Graph& g)
{
    CohomologyTable t;
    CliqueTable ct = clique_table(g, 0);
    t.cd = ct.clique_number;
    t.h.assign(ct.counts.begin(), ct.counts.begin() + t.cd + 1);
    t.h.push_back(0);
    return t;
}

bool all_literal_for_all_edges(const Graph& g, const Presentation& pres)
{
    if (pres.relations.size() != g.edges.size())
        return false;
    std::vector<std::pair<int, int>> seen;
    for (const auto& r : pres.relations) {
        int u = 0, v = 0;
        if (!r.word.is_literal_commutator(u, v))
            return false;
        auto e = std::minmax(u, v);
        if (!g.has_edge(e.first, e.second))
            return false;
        seen.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size() == g.edges.size();
}

} // namespace

CohomologyTable cohomology_table(const Graph& g)
{
    CohomologyTable t = table_from_cliques(g);
    // Without a presentation the table is that of the graph algebra (and
    // of the pro-p group presented by the literal commutators of g).
    t.certified = true;
    t.certificate = "raag";
    if (g.edges.empty())
        t.note = "no edges: free case, cd = 1";
    return t;
}

CohomologyTable cohomology_table(const Graph& g, const Presentation& pres)
{
    CohomologyTable t = table_from_cliques(g);
    if (int(pres.ctx.d) != g.d) {
        t.note = "presentation generator count differs from the graph";
        return t;
    }

    if (all_literal_for_all_edges(g, pres)) {
        t.certified = true;
        t.certificate = "raag"; // no bipartite hypothesis needed
    }

    auto split = split_from_tags(pres);
    ConditionSplit sp = split ? *split : condition_decompose(g);
    EdgeRelationReport cond = check_edge_relations(g, sp, pres);
    if (cond.satisfied) {
        if (!t.certified) {
            t.certified = true;
            t.certificate = sp.b_edges.empty() && !sp.a_edges.empty() ? "mild-quadratic"
                                                                      : "condition1";
        }
        if (!sp.a_edges.empty()) {
            int nb = split_b_clique_number(g, sp);
            t.split_cd = std::max(2, nb);
        }
    }

    if (!t.certified)
        t.note = "Koszulity not certified by this tool for this input";
    return t;
}

DualDimsReport dual_dims_crosscheck(const Graph& g, int max_n)
{
    DualDimsReport rep;
    Context ctx(2, uint32_t(g.d)); // dimensions are characteristic-free
    CliqueTable ct = clique_table(g, max_n);
    rep.clique_counts.assign(ct.counts.begin(),
                             ct.counts.begin() + std::min<size_t>(ct.counts.size(),
                                                                  size_t(max_n) + 1));
    rep.clique_counts.resize(size_t(max_n) + 1, 0);

    auto gens = quadratic_dual_ideal(ctx, g);
    GroebnerBasis gb = complete(ctx, gens, std::max(max_n, 2));
    rep.dual_dims = hilbert_dims(gb, max_n);

    rep.equal = true;
    for (int n = 0; n <= max_n; ++n) {
        if (rep.dual_dims[n] != rep.clique_counts[size_t(n)]) {
            rep.equal = false;
            rep.first_mismatch = n;
            break;
        }
    }
    return rep;
}

KoszulIdentityReport koszul_numeric_identity(const Graph& g, int N)
{
    KoszulIdentityReport rep;
    Context ctx(2, uint32_t(g.d));
    GroebnerBasis gb = complete(ctx, raaa_ideal(ctx, g), N);
    IntSeries dims = hilbert_dims(gb, N);
    IntSeries cpoly = clique_polynomial(g, N);
    rep.product = dims.mul_truncated(cpoly, N);
    rep.holds = true;
    for (int n = 0; n <= N; ++n) {
        if (rep.product[n] != (n == 0 ? 1 : 0)) {
            rep.holds = false;
            break;
        }
    }
    return rep;
}

PrescribedCdWitness prescribed_cd_witness(int n)
{
    if (n < 1)
        throw std::invalid_argument("cohomological dimension must be >= 1");
    PrescribedCdWitness w;
    w.n = n;
    if (n == 1) {
        w.graph = Graph(2, {});
    } else if (n == 2) {
        w.graph = Graph(3, {{1, 2}, {1, 3}});
    } else {
        // bipartite wedge on {1,2,3} plus a complete graph on n vertices
        std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}};
        for (int i = 4; i <= n + 3; ++i)
            for (int j = i + 1; j <= n + 3; ++j)
                edges.emplace_back(i, j);
        w.graph = Graph(n + 3, std::move(edges));
    }
    w.table = cohomology_table(w.graph);
    w.ok = w.table.cd == n;
    return w;
}

} // namespace gocha
