#ifndef GOCHA_GRAPH_HPP
#define GOCHA_GRAPH_HPP

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gocha/series.hpp"

namespace gocha {

// Undirected graph on vertices 1..d. Edges are stored normalized (i < j)
// and sorted; no self-loops, no duplicates.
struct Graph {
    int d = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int d_, std::vector<std::pair<int, int>> edges_);

    int edge_count() const { return int(edges.size()); }
    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> adjacency() const; // index 0 unused
};

enum class Color : uint8_t { white, black };

// color[v] for v in 1..d; index 0 unused.
using TwoColoring = std::vector<Color>;

// Proper 2-coloring, or nullopt when the graph is not bipartite.
// Deterministic: BFS from the smallest-index vertex of each component,
// that vertex colored white.
std::optional<TwoColoring> two_color(const Graph& g);

// A vertex relabeling perm (perm[old] = new) after which every edge (i,j)
// with i < j has a tail that is never a head: whites get the lower labels,
// ordered by original index within each color class. nullopt when not
// bipartite.
std::optional<std::vector<int>> bipartite_relabeling(const Graph& g);

Graph apply_relabeling(const Graph& g, const std::vector<int>& perm);

struct CliqueTable {
    std::vector<long long> counts; // counts[n] = number of n-cliques; counts[0] = 1
    int clique_number = 0;         // largest n with counts[n] > 0
};

// Exact clique counts by ordered extension (each clique enumerated once as
// an increasing vertex sequence). Worst case is exponential in d, which is
// fine at the intended scale (d <= ~20). counts runs to at least max_n and
// always covers the clique number.
CliqueTable clique_table(const Graph& g, int max_n);

// Coefficients (-1)^k c_k for k = 0..max(max_n, clique number).
IntSeries clique_polynomial(const Graph& g, int max_n);

// Split of the connected components into a bipartite part A and the rest.
// Every bipartite component goes to A (maximal-A convention); callers
// matching a presentation may override the split via relation tags.
struct ConditionSplit {
    std::vector<int> a_vertices, b_vertices;
    std::vector<std::pair<int, int>> a_edges, b_edges;

    bool vertex_in_a(int v) const;
};

ConditionSplit condition_decompose(const Graph& g);

// Clique number of the subgraph induced by the B part (0 when empty).
int split_b_clique_number(const Graph& g, const ConditionSplit& split);

// Input formats. JSON: {"d": <int>, "edges": [[i,j], ...]}. Text: first
// line "d <int>", then one "i j" pair per line; '#' starts a comment.
// Both reject self-loops, duplicates and out-of-range endpoints with a
// positioned error.
Graph parse_graph_json(const std::string& text);
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path); // dispatches on extension/content
std::string graph_to_json(const Graph& g);

// Seeded generators used by randomized checks; deterministic for a given
// engine state.
Graph random_graph(std::mt19937& rng, int d, double edge_prob);
// Random bipartite graph already in standard-orientation labeling.
Graph random_bipartite_graph(std::mt19937& rng, int d, double edge_prob);

} // namespace gocha

#endif
