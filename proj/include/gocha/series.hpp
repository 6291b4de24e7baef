#ifndef GOCHA_SERIES_HPP
#define GOCHA_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gocha/polynomial.hpp"

namespace gocha {

using BigInt = boost::multiprecision::cpp_int;

// An element of E modulo E_{N+1}: one homogeneous polynomial per degree
// 0..N. All arithmetic discards degree > N, so results are exact images
// in the truncated quotient.
class TruncatedSeries {
  public:
    TruncatedSeries(Context ctx, int cutoff);
    static TruncatedSeries one(Context ctx, int cutoff);
    static TruncatedSeries generator(Context ctx, int cutoff, int i);
    static TruncatedSeries from_polynomial(const Polynomial& f, int cutoff);

    const Context& context() const { return ctx_; }
    int cutoff() const { return cutoff_; }
    const Polynomial& component(int n) const { return comps_[size_t(n)]; }
    void set_component(int n, Polynomial f); // must be homogeneous of degree n

    bool is_zero() const;
    // Smallest n with a nonzero component; nullopt when zero mod E_{N+1}.
    std::optional<int> valuation() const;
    std::pair<Word, uint32_t> leading_monomial() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const = default;

    TruncatedSeries scaled(uint32_t c) const;

  private:
    Context ctx_;
    int cutoff_;
    std::vector<Polynomial> comps_;
};

// Inverse of a series with invertible constant term, exact mod E_{N+1}.
// Throws std::domain_error when the constant term is zero.
TruncatedSeries invert_unit(const TruncatedSeries& a);

// Integer coefficient sequences (degree 0..N), exact over Z. Used for
// Hilbert/gocha bookkeeping where coefficients grow exponentially.
class IntSeries {
  public:
    IntSeries() = default;
    explicit IntSeries(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {}
    static IntSeries zeros(int n) { return IntSeries(std::vector<BigInt>(size_t(n) + 1)); }

    int max_degree() const { return int(c_.size()) - 1; }
    const BigInt& operator[](int n) const { return c_[size_t(n)]; }
    BigInt& operator[](int n) { return c_[size_t(n)]; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntSeries mul_truncated(const IntSeries& o, int maxdeg) const;
    bool prefix_equal(const IntSeries& o, int through_degree) const;
    bool operator==(const IntSeries& o) const = default;

    std::string to_string() const; // "1 6 31 157"

  private:
    std::vector<BigInt> c_;
};

// Exact reciprocal to the degree of c: a_0 = 1, a_n = -sum c_k a_{n-k}.
// Requires c_0 == 1.
IntSeries invert_int_series(const IntSeries& c);

} // namespace gocha

#endif
