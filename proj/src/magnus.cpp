#include "gocha/magnus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gocha/errors.hpp"

namespace gocha {

namespace {

// phi(w) itself (constant term 1), so products compose directly.
TruncatedSeries expand_full(const GroupWord& w, Context ctx, int N)
{
    using Kind = GroupWord::Kind;
    switch (w.kind()) {
    case Kind::generator:
        return TruncatedSeries::one(ctx, N) + TruncatedSeries::generator(ctx, N, w.generator_index());
    case Kind::inverse:
        return invert_unit(expand_full(w.children()[0], ctx, N));
    case Kind::product: {
        TruncatedSeries r = TruncatedSeries::one(ctx, N);
        for (const auto& c : w.children())
            r = r * expand_full(c, ctx, N);
        return r;
    }
    case Kind::power: {
        long long e = w.exponent();
        TruncatedSeries base = expand_full(w.children()[0], ctx, N);
        if (e < 0) {
            base = invert_unit(base);
            e = -e;
        }
        TruncatedSeries r = TruncatedSeries::one(ctx, N);
        while (e) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    case Kind::commutator: {
        TruncatedSeries a = expand_full(w.children()[0], ctx, N);
        TruncatedSeries b = expand_full(w.children()[1], ctx, N);
        return invert_unit(a) * invert_unit(b) * a * b;
    }
    }
    throw std::logic_error("unreachable word kind");
}

} // namespace

TruncatedSeries magnus_expand(const GroupWord& w, Context ctx, int cutoff)
{
    if (w.max_generator() > int(ctx.d))
        throw std::invalid_argument("word uses a generator beyond d");
    return expand_full(w, ctx, cutoff) - TruncatedSeries::one(ctx, cutoff);
}

std::optional<int> zassenhaus_degree(const GroupWord& w, Context ctx, int cutoff)
{
    return magnus_expand(w, ctx, cutoff).valuation();
}

std::string format_zassenhaus(std::optional<int> deg, int cutoff)
{
    if (deg)
        return std::to_string(*deg);
    return ">= " + std::to_string(cutoff + 1);
}

TruncatedSeries commutator_closed_form(int u, int v, Context ctx, int cutoff)
{
    if (u == v)
        throw std::invalid_argument("commutator indices must differ");
    if (u < 1 || v < 1 || u > int(ctx.d) || v > int(ctx.d))
        throw std::invalid_argument("generator index out of range");
    const int N = cutoff;
    Polynomial xu = Polynomial::generator(ctx, u);
    Polynomial xv = Polynomial::generator(ctx, v);
    Polynomial comm = generator_commutator(ctx, u, v);

    // sum_{n>=0} (-1)^n Q_n, truncated so Q_n * comm fits under N.
    TruncatedSeries factor(ctx, N);
    Polynomial q = Polynomial::unit(ctx); // Q_0
    for (int n = 0; n + 2 <= N; ++n) {
        if (n > 0) {
            // Q_n = X_u Q_{n-1} + X_v^n
            Polynomial xvn = Polynomial::unit(ctx);
            for (int k = 0; k < n; ++k)
                xvn = xvn * xv;
            q = xu * q + xvn;
        }
        factor.set_component(n, n % 2 == 0 ? q : q.scaled(fp_neg(1, ctx.p)));
    }
    return factor * TruncatedSeries::from_polynomial(comm, N);
}

PairPowerIdentityReport check_pair_power_identities(int n_max, Context ctx)
{
    if (n_max < 2)
        throw std::invalid_argument("n_max must be >= 2");
    if (ctx.d < 2)
        throw std::invalid_argument("need at least two generators");
    PairPowerIdentityReport rep;
    rep.n_max = n_max;
    rep.append_right = rep.prepend_left = rep.sandwich = true;

    Polynomial xu = Polynomial::generator(ctx, 1);
    Polynomial xv = Polynomial::generator(ctx, 2);
    auto qpoly = [&](int n) {
        Polynomial q(ctx);
        for (int k = 0; k <= n; ++k) {
            Word t;
            for (int a = 0; a < k; ++a)
                t = t * Word::generator(1);
            for (int a = 0; a < n - k; ++a)
                t = t * Word::generator(2);
            q.add_term(t, 1);
        }
        return q;
    };
    auto power = [&](const Polynomial& x, int n) {
        Polynomial r = Polynomial::unit(ctx);
        for (int k = 0; k < n; ++k)
            r = r * x;
        return r;
    };
    for (int n = 2; n <= n_max; ++n) {
        Polynomial qn = qpoly(n), q1 = qpoly(n - 1), q2 = qpoly(n - 2);
        if (!(qn == power(xu, n) + q1 * xv))
            rep.append_right = false;
        if (!(qn == power(xv, n) + xu * q1))
            rep.prepend_left = false;
        if (!(qn == power(xu, n) + power(xv, n) + xu * q2 * xv))
            rep.sandwich = false;
    }
    return rep;
}

Presentation parse_presentation(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<uint32_t> p;
    std::optional<uint32_t> d;
    std::optional<int> N;
    std::vector<std::tuple<int, std::string, RelationTag, int, int, std::string>> raw;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "p") {
            uint32_t v;
            if (!(ls >> v))
                throw ParseError("expected prime after \"p\"", lineno);
            p = v;
        } else if (kw == "d") {
            uint32_t v;
            if (!(ls >> v))
                throw ParseError("expected generator count after \"d\"", lineno);
            d = v;
        } else if (kw == "N") {
            int v;
            if (!(ls >> v))
                throw ParseError("expected cutoff after \"N\"", lineno);
            N = v;
        } else if (kw == "rel") {
            std::string tag;
            if (!(ls >> tag))
                throw ParseError("expected tag 'A i j', 'B u v' or '-'", lineno);
            RelationTag t = RelationTag::untagged;
            int i = 0, j = 0;
            if (tag == "A" || tag == "B") {
                t = tag == "A" ? RelationTag::a_edge : RelationTag::b_edge;
                if (!(ls >> i >> j))
                    throw ParseError("expected edge endpoints after tag", lineno);
            } else if (tag != "-") {
                throw ParseError("unknown tag \"" + tag + "\"", lineno);
            }
            std::string rest;
            std::getline(ls, rest);
            if (rest.find_first_not_of(" \t\r") == std::string::npos)
                throw ParseError("missing word expression", lineno);
            raw.emplace_back(lineno, tag, t, i, j, rest);
        } else {
            throw ParseError("unknown keyword \"" + kw + "\"", lineno);
        }
    }
    if (!p)
        throw ParseError("missing \"p <prime>\" header");
    if (!d)
        throw ParseError("missing \"d <count>\" header");
    Presentation pres;
    try {
        pres.ctx = Context(*p, *d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    pres.cutoff = N.value_or(6);
    if (pres.cutoff < 1 || pres.cutoff > 12)
        throw ParseError("cutoff N must be in 1..12");
    for (auto& [ln, tagtext, t, i, j, wtext] : raw) {
        if (t != RelationTag::untagged) {
            if (i == j || i < 1 || j < 1 || i > int(*d) || j > int(*d))
                throw ParseError("bad edge endpoints", ln);
        }
        try {
            GroupWord w = parse_group_word(wtext, int(*d));
            pres.relations.emplace_back(std::move(w), t, std::min(i, j), std::max(i, j));
        } catch (const ParseError& e) {
            throw ParseError(e.what() + std::string(" (in relation word)"), ln);
        }
    }
    return pres;
}

Presentation load_presentation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::optional<Graph> graph_from_tags(const Presentation& pres)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& r : pres.relations) {
        if (r.tag == RelationTag::untagged)
            return std::nullopt;
        edges.emplace_back(r.i, r.j);
    }
    try {
        return Graph(int(pres.ctx.d), std::move(edges));
    } catch (const std::invalid_argument&) {
        return std::nullopt; // duplicate tags etc.
    }
}

std::optional<ConditionSplit> split_from_tags(const Presentation& pres)
{
    ConditionSplit s;
    std::vector<int> a_v, b_v;
    for (const auto& r : pres.relations) {
        if (r.tag == RelationTag::untagged)
            return std::nullopt;
        if (r.tag == RelationTag::a_edge) {
            s.a_edges.emplace_back(r.i, r.j);
            a_v.push_back(r.i);
            a_v.push_back(r.j);
        } else {
            s.b_edges.emplace_back(r.i, r.j);
            b_v.push_back(r.i);
            b_v.push_back(r.j);
        }
    }
    auto uniq = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(a_v);
    uniq(b_v);
    std::sort(s.a_edges.begin(), s.a_edges.end());
    std::sort(s.b_edges.begin(), s.b_edges.end());
    s.a_vertices = std::move(a_v);
    s.b_vertices = std::move(b_v);
    return s;
}

EdgeRelationReport check_edge_relations(const Graph& g, const ConditionSplit& split,
                                        const Presentation& pres)
{
    EdgeRelationReport rep;

    // A and B parts must share no vertex.
    for (int v : split.a_vertices)
        if (std::binary_search(split.b_vertices.begin(), split.b_vertices.end(), v))
            rep.problems.push_back("vertex " + std::to_string(v) + " is in both parts");

    // Bipartiteness of the A part (induced subgraph).
    {
        std::vector<int> index(size_t(g.d) + 1, 0);
        int k = 0;
        for (int v : split.a_vertices)
            index[size_t(v)] = ++k;
        std::vector<std::pair<int, int>> edges;
        for (auto [i, j] : split.a_edges)
            edges.emplace_back(index[size_t(i)], index[size_t(j)]);
        rep.a_part_bipartite =
            split.a_vertices.empty() || two_color(Graph(k, std::move(edges))).has_value();
        if (!rep.a_part_bipartite)
            rep.problems.push_back("the A part is not bipartite");
    }

    // One relation per edge, matched by unordered endpoints.
    std::map<std::pair<int, int>, const RelationSpec*> by_edge;
    for (const auto& r : pres.relations) {
        if (r.tag == RelationTag::untagged) {
            rep.problems.push_back("untagged relation cannot be matched to an edge");
            continue;
        }
        auto key = std::make_pair(r.i, r.j);
        if (by_edge.count(key))
            rep.problems.push_back("duplicate relation for edge {" + std::to_string(r.i) + "," +
                                   std::to_string(r.j) + "}");
        by_edge[key] = &r;
    }
    auto all_edges = split.a_edges;
    all_edges.insert(all_edges.end(), split.b_edges.begin(), split.b_edges.end());
    for (auto e : all_edges)
        if (!by_edge.count(e))
            rep.problems.push_back("missing relation for edge {" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + "}");
    for (const auto& [e, r] : by_edge)
        if (std::find(all_edges.begin(), all_edges.end(), e) == all_edges.end())
            rep.problems.push_back("relation for {" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + "} matches no edge of the split");

    const int N = std::max(3, pres.cutoff);
    for (auto e : split.a_edges) {
        EdgeRelationVerdict v;
        v.i = e.first;
        v.j = e.second;
        v.is_a_edge = true;
        auto it = by_edge.find(e);
        if (it == by_edge.end()) {
            v.reason = "no relation";
            rep.edges.push_back(v);
            continue;
        }
        TruncatedSeries w = magnus_expand(it->second->word, pres.ctx, N);
        Polynomial expect = generator_commutator(pres.ctx, e.first, e.second);
        if (!w.component(1).is_zero())
            v.reason = "degree-1 component is nonzero";
        else if (!(w.component(2) == expect))
            v.reason = "degree-2 component is not [X" + std::to_string(e.first) + ";X" +
                       std::to_string(e.second) + "]";
        else
            v.ok = true;
        rep.edges.push_back(v);
    }
    for (auto e : split.b_edges) {
        EdgeRelationVerdict v;
        v.i = e.first;
        v.j = e.second;
        auto it = by_edge.find(e);
        if (it == by_edge.end()) {
            v.reason = "no relation";
            rep.edges.push_back(v);
            continue;
        }
        int u = 0, w = 0;
        if (!it->second->word.is_literal_commutator(u, w))
            v.reason = "word is not a literal commutator";
        else if (std::minmax(u, w) != std::minmax(e.first, e.second))
            v.reason = "commutator indices do not match the edge";
        else
            v.ok = true;
        rep.edges.push_back(v);
    }

    rep.satisfied = rep.problems.empty() && rep.a_part_bipartite &&
                    std::all_of(rep.edges.begin(), rep.edges.end(),
                                [](const EdgeRelationVerdict& v) { return v.ok; });
    return rep;
}

} // namespace gocha
