#ifndef GOCHA_POLYNOMIAL_HPP
#define GOCHA_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gocha/fp.hpp"
#include "gocha/word.hpp"

namespace gocha {

// An element of F_p<X_1..X_d>: a finite F_p-linear combination of words.
// The term map never holds zero coefficients, so equality is structural.
class Polynomial {
  public:
    using TermMap = std::map<Word, uint32_t, TermKeyOrder>;

    explicit Polynomial(Context ctx) : ctx_(ctx) {}
    static Polynomial zero(Context ctx) { return Polynomial(ctx); }
    static Polynomial unit(Context ctx) { return monomial(ctx, Word(), 1); }
    static Polynomial generator(Context ctx, int i);
    static Polynomial monomial(Context ctx, const Word& w, uint32_t coeff);

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return int(terms_.size()); }

    // Largest and smallest term degrees; -1 on the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    int valuation() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    bool is_homogeneous() const { return terms_.empty() || degree() == valuation(); }

    // The deglex-greatest monomial of the lowest nonzero degree, with its
    // coefficient. For homogeneous input this is the usual leading
    // monomial; for mixed input the lowest-degree component is used.
    std::pair<Word, uint32_t> leading_monomial() const;

    uint32_t coeff(const Word& w) const;
    void add_term(const Word& w, uint32_t c); // accumulates, canonicalizes

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const = default;

    Polynomial scaled(uint32_t c) const;
    Polynomial negated() const { return scaled(fp_neg(1, ctx_.p)); }
    // this * o, discarding all terms of degree > maxdeg.
    Polynomial mul_truncated(const Polynomial& o, int maxdeg) const;
    // m * this * n for monomials m, n.
    Polynomial sandwich(const Word& left, const Word& right) const;

    Polynomial homogeneous_component(int n) const;
    // Leading form: the homogeneous component of lowest degree.
    Polynomial leading_form() const;
    Polynomial monic() const; // divide by the leading coefficient

  private:
    Context ctx_;
    TermMap terms_;
};

Polynomial commutator(const Polynomial& a, const Polynomial& b);
// [X_i; X_j] = X_i X_j - X_j X_i.
Polynomial generator_commutator(Context ctx, int i, int j);

// Text form, terms in descending deglex order: "3*X1*X2 + 4*X2*X1".
// Coefficients are residues 0..p-1; a unit coefficient is omitted.
std::string render_polynomial(const Polynomial& f);
// Parses the same grammar. Unknown generators (index > d) are rejected.
Polynomial parse_polynomial(const std::string& text, Context ctx);

} // namespace gocha

#endif
