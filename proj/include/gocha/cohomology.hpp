#ifndef GOCHA_COHOMOLOGY_HPP
#define GOCHA_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gocha/gradation.hpp"

namespace gocha {

// Cohomology dimensions read off the clique table: h^n = c_n. The
// certificate states which hypothesis licenses the identification for the
// given presentation:
//   "raag"           literal commutator relations for every edge (or no
//                    presentation given: the table is the graph algebra's)
//   "condition1"     bipartite A part with commutator-led quadratic
//                    relations plus literal B-edge commutators
//   "mild-quadratic" the same with an empty B part
//   "none"           hypotheses not verified; table still reported
struct CohomologyTable {
    std::vector<long long> h; // h^0..h^(cd+1), last entry 0
    int cd = 0;               // clique number; 0 edges on >=1 vertices gives cd = 1
    bool certified = false;
    std::string certificate = "none";
    // max(2, clique number of the B part), reported when a split with a
    // nonempty A part that has at least one edge applies.
    std::optional<int> split_cd;
    std::string note;
};

CohomologyTable cohomology_table(const Graph& g);
CohomologyTable cohomology_table(const Graph& g, const Presentation& pres);

// Dimensions of the quadratic dual algebra per degree (normal-monomial
// counts of the completed dual ideal) against the clique counts.
struct DualDimsReport {
    bool equal = false;
    int first_mismatch = -1;
    IntSeries dual_dims;
    std::vector<long long> clique_counts;
};
DualDimsReport dual_dims_crosscheck(const Graph& g, int max_n);

// hilbert_dims(graph commutator ideal) * sum (-1)^k c_k t^k == 1, exactly
// as integer series through degree N.
struct KoszulIdentityReport {
    bool holds = false;
    IntSeries product; // should be 1, 0, 0, ...
};
KoszulIdentityReport koszul_numeric_identity(const Graph& g, int N);

// Witness graph whose cohomological dimension is exactly n: edgeless on 2
// vertices (n = 1), a bipartite 3-vertex wedge (n = 2), or that wedge
// plus a complete graph on n vertices (n >= 3, d = n + 3).
struct PrescribedCdWitness {
    int n = 0;
    Graph graph;
    CohomologyTable table;
    bool ok = false; // computed cd equals n
};
PrescribedCdWitness prescribed_cd_witness(int n);

} // namespace gocha

#endif
