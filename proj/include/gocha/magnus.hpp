#ifndef GOCHA_MAGNUS_HPP
#define GOCHA_MAGNUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gocha/graph.hpp"
#include "gocha/group_word.hpp"
#include "gocha/series.hpp"

namespace gocha {

// The Magnus embedding sends x_j to 1 + X_j. magnus_expand(w) returns
// phi(w) - 1 truncated at the cutoff, by structural recursion on the word:
// inverses via series inversion, powers by repeated squaring.
TruncatedSeries magnus_expand(const GroupWord& w, Context ctx, int cutoff);

// Valuation of phi(w) - 1, i.e. the largest n <= cutoff with w in the n-th
// Zassenhaus subgroup. nullopt means the expansion vanishes mod E_{N+1},
// reported as ">= N+1" (truncation cannot certify the identity).
std::optional<int> zassenhaus_degree(const GroupWord& w, Context ctx, int cutoff);
std::string format_zassenhaus(std::optional<int> deg, int cutoff);

// Closed form of phi([x_u, x_v]) - 1: the alternating sum over n of all
// words X_u^k X_v^{n-k}, multiplied by [X_u; X_v]. Requires u != v.
TruncatedSeries commutator_closed_form(int u, int v, Context ctx, int cutoff);

// The pair-power sums Q_n = sum_{k=0..n} X_u^k X_v^{n-k} satisfy, in the
// free algebra,
//   Q_n = X_u^n + Q_{n-1} X_v
//   Q_n = X_v^n + X_u Q_{n-1}
//   Q_n = X_u^n + X_v^n + X_u Q_{n-2} X_v
// (note which side each factor multiplies on). Verifies all three for
// 2 <= n <= n_max by exact expansion.
struct PairPowerIdentityReport {
    bool append_right = false, prepend_left = false, sandwich = false;
    int n_max = 0;
    bool all() const { return append_right && prepend_left && sandwich; }
};
PairPowerIdentityReport check_pair_power_identities(int n_max, Context ctx);

enum class RelationTag : uint8_t { a_edge, b_edge, untagged };

struct RelationSpec {
    GroupWord word;
    RelationTag tag = RelationTag::untagged;
    int i = 0, j = 0; // tagged edge, unordered

    RelationSpec(GroupWord w) : word(std::move(w)) {}
    RelationSpec(GroupWord w, RelationTag t, int i_, int j_)
        : word(std::move(w)), tag(t), i(i_), j(j_) {}
};

// A finitely presented pro-p group: d generators, relations, the working
// prime and cutoff. An empty relation list is the free group.
struct Presentation {
    Context ctx;
    int cutoff = 6;
    std::vector<RelationSpec> relations;
};

// Text format:
//   p 2
//   d 6
//   N 6
//   rel A 1 2 [x1,x2]*[[x1,x2],x3]
//   rel B 4 5 [x4,x5]
//   rel - x1^2
// '#' starts a comment. Errors carry line (and column for word syntax).
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

// Graph implied by the relation tags, when every relation is tagged.
std::optional<Graph> graph_from_tags(const Presentation& pres);
// Split implied by the tags (A edges / B edges), with vertex classes
// taken from edge membership; untagged relations yield nullopt.
std::optional<ConditionSplit> split_from_tags(const Presentation& pres);

// Checks the hypotheses under which the relation ideal is generated by
// the graph commutators: each A-edge relation must expand with zero
// degree-1 part and degree-2 part exactly [X_i; X_j]; each B-edge
// relation must be syntactically the literal commutator of its edge
// (either order, up to unit powers); edges and relations must match
// one-to-one, and the A side must be bipartite.
struct EdgeRelationVerdict {
    int i = 0, j = 0;
    bool is_a_edge = false;
    bool ok = false;
    std::string reason;
};
struct EdgeRelationReport {
    bool satisfied = false;
    bool a_part_bipartite = false;
    std::vector<EdgeRelationVerdict> edges;
    std::vector<std::string> problems; // missing/extra relations etc.
};
EdgeRelationReport check_edge_relations(const Graph& g, const ConditionSplit& split,
                                        const Presentation& pres);

} // namespace gocha

#endif
