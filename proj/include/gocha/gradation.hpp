#ifndef GOCHA_GRADATION_HPP
#define GOCHA_GRADATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gocha/groebner.hpp"
#include "gocha/magnus.hpp"

namespace gocha {

struct IdealImageOptions {
    enum class TopBlock { automatic, full, compressed };
    TopBlock top_block = TopBlock::automatic;
    // Refuse when the dense worst-case estimate exceeds this.
    uint64_t max_megabytes = 4096;
};

// The image of the relation ideal I in E/E_{N+1}, as a row space in
// reduced-on-insert echelon form over the monomial coordinates ordered by
// (degree, deglex-descending). Graded dimensions are read off the pivot
// degrees: dim of the degree-n graded piece of the ideal = pivots at
// degree n, and dim of the quotient's piece = d^n minus that.
//
// The span inserted is {truncate(m * w * m') : deg m + val(w) + deg m'
// <= N} over monomial multipliers; higher multipliers truncate to zero,
// so this span is all of I mod E_{N+1}. For the top degree the engine
// normally works in coordinates of the quotient modulo the ideal J
// generated by the relations' leading forms (Groebner normal-form
// compression): the degree-N piece always contains J_N, whose dimension
// the basis of J counts combinatorially, and only the rows that die below
// the top degree can contribute beyond it. Both routes give identical
// dimensions; "full" keeps raw top coordinates and is the cross-check.
class FilteredIdealBasis {
  public:
    struct Row {
        int valuation = 0;                                // degree of the pivot monomial
        std::vector<std::pair<Word, uint32_t>> support;   // materialized on demand
    };

    int cutoff() const { return cutoff_; }
    const Context& context() const { return ctx_; }
    // dim of the ideal's graded piece per degree 0..N.
    const std::vector<int64_t>& pivot_dims() const { return pivot_dims_; }
    bool used_compressed_top() const { return compressed_top_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Rows with pivot degree < N, fully interreduced (computed lazily, so
    // the first call is not thread-safe); deterministic for a given
    // coordinate order regardless of insertion order. Top-degree rows are
    // summarized by pivot_dims; in compressed mode their coordinates live
    // in the quotient modulo the leading-form ideal, so supports are
    // listed through degree N-1 there (full mode lists everything).
    std::vector<Row> echelon_rows_below_top() const;

    friend FilteredIdealBasis ideal_image_series(Context ctx, int cutoff,
                                                 const std::vector<TruncatedSeries>& relations,
                                                 IdealImageOptions opts);

  private:
    Context ctx_;
    int cutoff_ = 0;
    bool compressed_top_ = false;
    std::vector<int64_t> pivot_dims_;
    std::vector<std::string> warnings_;
    std::shared_ptr<void> detail_; // row storage, engine-internal
};

// Relation images w = phi(l - 1) as series; rejects relations that vanish
// mod E_{N+1} (identity words are indistinguishable at the cutoff).
FilteredIdealBasis ideal_image(const Presentation& pres, IdealImageOptions opts = {});
// Same engine on explicit series relations (e.g. homogeneous commutator
// polynomials fed directly).
FilteredIdealBasis ideal_image_series(Context ctx, int cutoff,
                                      const std::vector<TruncatedSeries>& relations,
                                      IdealImageOptions opts = {});

// dim of the quotient's graded pieces: d^n - pivot_dims[n], exact for
// n <= cutoff.
IntSeries graded_dims(const FilteredIdealBasis& basis);

struct GochaReport {
    IntSeries dims;            // dim of each graded piece, 0..N
    bool mild = false;
    std::string matched_model; // "free", "mild", "clique-polynomial" or ""
    int exact_to_degree = 0;
    std::vector<std::string> warnings;
};

// Graded dimensions of the presented group's algebra plus the mildness
// verdict and, when a graph is supplied (or implied by relation tags),
// the clique-polynomial comparison.
GochaReport compute_gocha(const Presentation& pres, const std::optional<Graph>& graph = std::nullopt,
                  IdealImageOptions opts = {});

// Degree-by-degree comparison of the presentation's graded dimensions
// with the graph algebra's Hilbert dimensions. The edge-relation
// hypotheses are checked first; on failure the comparison is still run
// and labeled informational.
struct GradedMatchReport {
    bool condition_satisfied = false;
    std::vector<std::string> condition_problems;
    bool equal = false;
    int first_discrepancy = -1; // degree, or -1
    IntSeries presentation_dims;
    IntSeries graph_dims;
    int through_degree = 0;
};
GradedMatchReport graded_algebra_match(const Graph& g, const Presentation& pres,
                                       IdealImageOptions opts = {});

// Feeds the graph's commutator polynomials through the filtered engine
// and checks the graded dimensions against the Groebner normal-monomial
// count: the filtered and graded constructions of the graph algebra must
// agree.
struct HomogeneousGradationReport {
    bool equal = false;
    int first_discrepancy = -1;
    IntSeries filtered_dims;
    IntSeries graded_dims;
};
HomogeneousGradationReport verify_homogeneous_gradation(Context ctx, const Graph& g, int cutoff,
                                                        IdealImageOptions opts = {});

} // namespace gocha

#endif
