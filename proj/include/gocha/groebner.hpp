#ifndef GOCHA_GROEBNER_HPP
#define GOCHA_GROEBNER_HPP

#include <string>
#include <vector>

#include "gocha/graph.hpp"
#include "gocha/polynomial.hpp"
#include "gocha/series.hpp"

namespace gocha {

// True iff no monomial of the set is a factor of another and no nonempty
// proper suffix of one equals a prefix of another (self-overlaps count).
// Such a set is an immediate Groebner basis of the ideal it generates.
bool combinatorially_free(const std::vector<Word>& monomials);

// Two-sided Groebner basis of a homogeneous ideal in F_p<X_1..X_d>,
// complete up to a degree bound: every overlap ambiguity whose S-element
// has degree <= complete_to_degree reduces to zero. Elements are monic,
// homogeneous and interreduced (fully autoreduced, so the basis is the
// canonical reduced one and does not depend on generator order).
class GroebnerBasis {
  public:
    GroebnerBasis(Context ctx, int complete_to_degree)
        : ctx_(ctx), degree_bound_(complete_to_degree) {}

    const Context& context() const { return ctx_; }
    int complete_to_degree() const { return degree_bound_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<Word>& leading_monomials() const { return leads_; }

    friend GroebnerBasis complete(Context ctx, const std::vector<Polynomial>& generators,
                                  int degree_bound);

  private:
    Context ctx_;
    int degree_bound_;
    std::vector<Polynomial> elements_;
    std::vector<Word> leads_;
};

// Overlap completion bounded by degree. Generators must be homogeneous
// and nonzero; they are made monic on entry; an empty list gives the zero
// ideal. The bound must be at least the largest generator degree.
// Reduction of any degree-n element is confluent for n <= degree_bound,
// so normal-monomial counts are exact dimensions of the quotient through
// that degree.
GroebnerBasis complete(Context ctx, const std::vector<Polynomial>& generators, int degree_bound);

// Unique representative of f modulo the basis: no term contains a basis
// leading monomial as a factor. f must be homogeneous of degree <= the
// completion bound (linear combinations reduce componentwise elsewhere).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Monomials of each degree containing no basis lead as a factor; a basis
// of the quotient algebra in each degree <= the completion bound.
struct NormalMonomialTable {
    int max_degree = 0;
    std::vector<std::vector<Word>> by_degree;
};
NormalMonomialTable normal_monomials(const GroebnerBasis& gb, int max_degree);

// Quotient dimensions dim (free algebra / ideal) per degree 0..N, counted
// by a factor-avoidance automaton over the leading monomials (no explicit
// monomial enumeration, so large d^n are fine). N must not exceed the
// completion bound.
IntSeries hilbert_dims(const GroebnerBasis& gb, int N);

// One commutator [X_i; X_j] (i < j) per edge of the graph.
std::vector<Polynomial> raaa_ideal(Context ctx, const Graph& g);

// Quadratic dual relations of the graph algebra: X_i X_j for non-edges
// (both orders), X_u^2 for every u, anticommutators X_u X_v + X_v X_u for
// all pairs; deduplicated, monic.
std::vector<Polynomial> quadratic_dual_ideal(Context ctx, const Graph& g);

// True iff dims agree through their length with the reciprocal of
// 1 - d t + sum_i t^{deg w_i}.
bool mildness_check(const IntSeries& dims, int d, const std::vector<int>& relation_degrees);

// Dump format: "# complete_to_degree D" then one element per line.
std::string render_basis(const GroebnerBasis& gb);

} // namespace gocha

#endif
