#ifndef GOCHA_TEST_HELPERS_HPP
#define GOCHA_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "gocha/graph.hpp"
#include "gocha/polynomial.hpp"
#include "gocha/series.hpp"

namespace gocha::testing {

inline Polynomial random_sparse_poly(std::mt19937& rng, Context ctx, int max_terms, int max_deg)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> letter(1, int(ctx.d));
    std::uniform_int_distribution<uint32_t> coeff(0, ctx.p - 1);
    Polynomial f(ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int k = deg(rng);
        for (int i = 0; i < k; ++i)
            w = w * Word::generator(letter(rng));
        f.add_term(w, coeff(rng));
    }
    return f;
}

inline TruncatedSeries random_series(std::mt19937& rng, Context ctx, int cutoff, int max_terms)
{
    return TruncatedSeries::from_polynomial(random_sparse_poly(rng, ctx, max_terms, cutoff),
                                            cutoff);
}

// All labeled graphs on exactly d vertices.
inline std::vector<Graph> all_graphs(int d)
{
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1)
                edges.push_back(slots[k]);
        out.emplace_back(d, std::move(edges));
    }
    return out;
}

// Independent bipartiteness oracle: a graph has an odd cycle iff some odd
// power of the adjacency matrix has a nonzero diagonal entry (an odd
// closed walk always contains an odd cycle, and cycles have length <= d).
inline bool bipartite_by_walks(const Graph& g)
{
    int d = g.d;
    std::vector<std::vector<bool>> a(size_t(d), std::vector<bool>(size_t(d), false));
    for (auto [i, j] : g.edges)
        a[size_t(i - 1)][size_t(j - 1)] = a[size_t(j - 1)][size_t(i - 1)] = true;
    auto mul = [&](const auto& x, const auto& y) {
        std::vector<std::vector<bool>> z(size_t(d), std::vector<bool>(size_t(d), false));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (x[size_t(i)][size_t(k)])
                    for (int j = 0; j < d; ++j)
                        if (y[size_t(k)][size_t(j)])
                            z[size_t(i)][size_t(j)] = true;
        return z;
    };
    auto walk = a;
    for (int len = 1; len <= 2 * d + 1; ++len) {
        if (len % 2 == 1)
            for (int i = 0; i < d; ++i)
                if (walk[size_t(i)][size_t(i)])
                    return false;
        walk = mul(walk, a);
    }
    return true;
}

} // namespace gocha::testing

#endif
