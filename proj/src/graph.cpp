#include "gocha/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "gocha/errors.hpp"
#include "json.hpp"

namespace gocha {

Graph::Graph(int d_, std::vector<std::pair<int, int>> edges_) : d(d_)
{
    if (d < 1)
        throw std::invalid_argument("vertex count must be positive");
    edges.reserve(edges_.size());
    for (auto [i, j] : edges_) {
        if (i == j)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        if (i < 1 || j < 1 || i > d || j > d)
            throw std::invalid_argument("edge endpoint out of range 1..d");
        if (i > j)
            std::swap(i, j);
        edges.emplace_back(i, j);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
}

bool Graph::has_edge(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> Graph::adjacency() const
{
    std::vector<std::vector<int>> adj(size_t(d) + 1);
    for (auto [i, j] : edges) {
        adj[size_t(i)].push_back(j);
        adj[size_t(j)].push_back(i);
    }
    for (auto& v : adj)
        std::sort(v.begin(), v.end());
    return adj;
}

std::optional<TwoColoring> two_color(const Graph& g)
{
    auto adj = g.adjacency();
    std::vector<int> state(size_t(g.d) + 1, -1); // -1 unvisited
    for (int root = 1; root <= g.d; ++root) {
        if (state[size_t(root)] != -1)
            continue;
        state[size_t(root)] = 0; // white
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : adj[size_t(v)]) {
                if (state[size_t(u)] == -1) {
                    state[size_t(u)] = 1 - state[size_t(v)];
                    queue.push_back(u);
                } else if (state[size_t(u)] == state[size_t(v)]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    TwoColoring colors(size_t(g.d) + 1, Color::white);
    for (int v = 1; v <= g.d; ++v)
        colors[size_t(v)] = state[size_t(v)] == 0 ? Color::white : Color::black;
    return colors;
}

std::optional<std::vector<int>> bipartite_relabeling(const Graph& g)
{
    auto colors = two_color(g);
    if (!colors)
        return std::nullopt;
    std::vector<int> perm(size_t(g.d) + 1, 0);
    int next = 1;
    for (int v = 1; v <= g.d; ++v)
        if ((*colors)[size_t(v)] == Color::white)
            perm[size_t(v)] = next++;
    for (int v = 1; v <= g.d; ++v)
        if ((*colors)[size_t(v)] == Color::black)
            perm[size_t(v)] = next++;
    return perm;
}

Graph apply_relabeling(const Graph& g, const std::vector<int>& perm)
{
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [i, j] : g.edges)
        edges.emplace_back(perm[size_t(i)], perm[size_t(j)]);
    return Graph(g.d, std::move(edges));
}

namespace {

void extend_cliques(const std::vector<std::vector<int>>& adj, std::vector<int>& clique,
                    const std::vector<int>& candidates, std::vector<long long>& counts)
{
    size_t n = clique.size();
    if (n >= counts.size())
        counts.resize(n + 1, 0);
    ++counts[n];
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        std::vector<int> next;
        const auto& nb = adj[size_t(v)];
        for (size_t k = idx + 1; k < candidates.size(); ++k)
            if (std::binary_search(nb.begin(), nb.end(), candidates[k]))
                next.push_back(candidates[k]);
        clique.push_back(v);
        extend_cliques(adj, clique, next, counts);
        clique.pop_back();
    }
}

} // namespace

CliqueTable clique_table(const Graph& g, int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be >= 0");
    auto adj = g.adjacency();
    std::vector<long long> counts;
    std::vector<int> clique;
    std::vector<int> all(size_t(g.d));
    for (int v = 1; v <= g.d; ++v)
        all[size_t(v) - 1] = v;
    extend_cliques(adj, clique, all, counts);

    CliqueTable t;
    t.clique_number = 0;
    for (size_t n = 0; n < counts.size(); ++n)
        if (counts[n] > 0)
            t.clique_number = int(n);
    counts.resize(size_t(std::max(max_n, t.clique_number)) + 1, 0);
    t.counts = std::move(counts);
    return t;
}

IntSeries clique_polynomial(const Graph& g, int max_n)
{
    CliqueTable t = clique_table(g, max_n);
    IntSeries s = IntSeries::zeros(int(t.counts.size()) - 1);
    for (size_t k = 0; k < t.counts.size(); ++k)
        s[int(k)] = (k % 2 == 0) ? BigInt(t.counts[k]) : BigInt(-t.counts[k]);
    return s;
}

bool ConditionSplit::vertex_in_a(int v) const
{
    return std::binary_search(a_vertices.begin(), a_vertices.end(), v);
}

ConditionSplit condition_decompose(const Graph& g)
{
    auto adj = g.adjacency();
    std::vector<int> comp(size_t(g.d) + 1, -1);
    int ncomp = 0;
    for (int root = 1; root <= g.d; ++root) {
        if (comp[size_t(root)] != -1)
            continue;
        int c = ncomp++;
        std::deque<int> queue{root};
        comp[size_t(root)] = c;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : adj[size_t(v)])
                if (comp[size_t(u)] == -1) {
                    comp[size_t(u)] = c;
                    queue.push_back(u);
                }
        }
    }
    // A component is bipartite iff the whole-graph coloring restricted to
    // it works; test per component via a subgraph coloring.
    std::vector<bool> comp_bipartite(size_t(ncomp), true);
    {
        std::vector<int> state(size_t(g.d) + 1, -1);
        for (int root = 1; root <= g.d; ++root) {
            if (state[size_t(root)] != -1)
                continue;
            state[size_t(root)] = 0;
            std::deque<int> queue{root};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int u : adj[size_t(v)]) {
                    if (state[size_t(u)] == -1) {
                        state[size_t(u)] = 1 - state[size_t(v)];
                        queue.push_back(u);
                    } else if (state[size_t(u)] == state[size_t(v)]) {
                        comp_bipartite[size_t(comp[size_t(v)])] = false;
                    }
                }
            }
        }
    }
    ConditionSplit split;
    for (int v = 1; v <= g.d; ++v) {
        if (comp_bipartite[size_t(comp[size_t(v)])])
            split.a_vertices.push_back(v);
        else
            split.b_vertices.push_back(v);
    }
    for (auto e : g.edges) {
        if (comp_bipartite[size_t(comp[size_t(e.first)])])
            split.a_edges.push_back(e);
        else
            split.b_edges.push_back(e);
    }
    return split;
}

int split_b_clique_number(const Graph& g, const ConditionSplit& split)
{
    if (split.b_vertices.empty())
        return 0;
    // Renumber the induced subgraph 1..k.
    std::vector<int> index(size_t(g.d) + 1, 0);
    for (size_t k = 0; k < split.b_vertices.size(); ++k)
        index[size_t(split.b_vertices[k])] = int(k) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : split.b_edges)
        edges.emplace_back(index[size_t(i)], index[size_t(j)]);
    Graph sub(int(split.b_vertices.size()), std::move(edges));
    return clique_table(sub, 0).clique_number;
}

Graph parse_graph_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("edges"))
        throw ParseError("graph JSON needs fields \"d\" and \"edges\"");
    if (!j["d"].is_number_integer())
        throw ParseError("\"d\" must be an integer");
    int d = j["d"].get<int>();
    if (!j["edges"].is_array())
        throw ParseError("\"edges\" must be an array of pairs");
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (const auto& e : j["edges"]) {
        ++idx;
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edge #" + std::to_string(idx) + ": expected [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(d, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Graph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int d = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (d < 0) {
            std::string kw;
            if (!(ls >> kw))
                continue; // blank before header
            if (kw != "d")
                throw ParseError("expected header \"d <count>\"", lineno);
            if (!(ls >> d) || d < 1)
                throw ParseError("bad vertex count", lineno);
            continue;
        }
        int i, j;
        if (!(ls >> i))
            continue; // blank line
        if (!(ls >> j))
            throw ParseError("expected \"i j\" pair", lineno);
        std::string extra;
        if (ls >> extra)
            throw ParseError("trailing tokens after edge", lineno);
        if (i == j)
            throw ParseError("self-loop at vertex " + std::to_string(i), lineno);
        if (i < 1 || j < 1 || i > d || j > d)
            throw ParseError("edge endpoint out of range 1.." + std::to_string(d), lineno);
        auto e = std::minmax(i, j);
        for (size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == std::make_pair(e.first, e.second))
                throw ParseError("duplicate of edge on line " + std::to_string(edge_line[k]),
                                 lineno);
        edges.emplace_back(e.first, e.second);
        edge_line.push_back(lineno);
    }
    if (d < 0)
        throw ParseError("missing header \"d <count>\"", lineno);
    return Graph(d, std::move(edges));
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string graph_to_json(const Graph& g)
{
    nlohmann::json j;
    j["d"] = g.d;
    auto edges = nlohmann::json::array();
    for (auto [i, k] : g.edges)
        edges.push_back({i, k});
    j["edges"] = edges;
    return j.dump();
}

Graph random_graph(std::mt19937& rng, int d, double edge_prob)
{
    std::bernoulli_distribution take(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (take(rng))
                edges.emplace_back(i, j);
    return Graph(d, std::move(edges));
}

Graph random_bipartite_graph(std::mt19937& rng, int d, double edge_prob)
{
    // Random proper bipartition, edges only across it, then relabel so the
    // standard orientation has the tail-never-head property.
    std::uniform_int_distribution<int> side(0, 1);
    std::vector<int> color(size_t(d) + 1);
    for (int v = 1; v <= d; ++v)
        color[size_t(v)] = side(rng);
    std::bernoulli_distribution take(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (color[size_t(i)] != color[size_t(j)] && take(rng))
                edges.emplace_back(i, j);
    Graph g(d, std::move(edges));
    auto perm = bipartite_relabeling(g);
    return apply_relabeling(g, *perm);
}

} // namespace gocha
