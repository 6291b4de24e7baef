#include "gocha/series.hpp"

#include <sstream>

namespace gocha {

TruncatedSeries::TruncatedSeries(Context ctx, int cutoff)
    : ctx_(ctx), cutoff_(cutoff), comps_(size_t(cutoff) + 1, Polynomial(ctx))
{
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be >= 0");
}

TruncatedSeries TruncatedSeries::one(Context ctx, int cutoff)
{
    TruncatedSeries s(ctx, cutoff);
    s.comps_[0] = Polynomial::unit(ctx);
    return s;
}

TruncatedSeries TruncatedSeries::generator(Context ctx, int cutoff, int i)
{
    TruncatedSeries s(ctx, cutoff);
    if (cutoff >= 1)
        s.comps_[1] = Polynomial::generator(ctx, i);
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& f, int cutoff)
{
    TruncatedSeries s(f.context(), cutoff);
    for (const auto& [w, c] : f.terms())
        if (w.degree() <= cutoff)
            s.comps_[size_t(w.degree())].add_term(w, c);
    return s;
}

void TruncatedSeries::set_component(int n, Polynomial f)
{
    if (n < 0 || n > cutoff_)
        throw std::out_of_range("component degree outside cutoff");
    if (!f.is_zero() && (f.valuation() != n || f.degree() != n))
        throw std::invalid_argument("component must be homogeneous of its degree");
    comps_[size_t(n)] = std::move(f);
}

bool TruncatedSeries::is_zero() const
{
    for (const auto& f : comps_)
        if (!f.is_zero())
            return false;
    return true;
}

std::optional<int> TruncatedSeries::valuation() const
{
    for (int n = 0; n <= cutoff_; ++n)
        if (!comps_[size_t(n)].is_zero())
            return n;
    return std::nullopt;
}

std::pair<Word, uint32_t> TruncatedSeries::leading_monomial() const
{
    auto v = valuation();
    if (!v)
        throw std::domain_error("leading monomial of zero series");
    return comps_[size_t(*v)].leading_monomial();
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    require_same(ctx_, o.ctx_);
    if (cutoff_ != o.cutoff_)
        throw std::invalid_argument("cutoff mismatch");
    TruncatedSeries r(ctx_, cutoff_);
    for (int n = 0; n <= cutoff_; ++n)
        r.comps_[size_t(n)] = comps_[size_t(n)] + o.comps_[size_t(n)];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    require_same(ctx_, o.ctx_);
    if (cutoff_ != o.cutoff_)
        throw std::invalid_argument("cutoff mismatch");
    TruncatedSeries r(ctx_, cutoff_);
    for (int n = 0; n <= cutoff_; ++n)
        r.comps_[size_t(n)] = comps_[size_t(n)] - o.comps_[size_t(n)];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    require_same(ctx_, o.ctx_);
    if (cutoff_ != o.cutoff_)
        throw std::invalid_argument("cutoff mismatch");
    TruncatedSeries r(ctx_, cutoff_);
    for (int g = 0; g <= cutoff_; ++g) {
        if (comps_[size_t(g)].is_zero())
            continue;
        for (int h = 0; g + h <= cutoff_; ++h) {
            if (o.comps_[size_t(h)].is_zero())
                continue;
            r.comps_[size_t(g + h)] += comps_[size_t(g)] * o.comps_[size_t(h)];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(uint32_t c) const
{
    TruncatedSeries r(ctx_, cutoff_);
    for (int n = 0; n <= cutoff_; ++n)
        r.comps_[size_t(n)] = comps_[size_t(n)].scaled(c);
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries& a)
{
    const Context& ctx = a.context();
    const int N = a.cutoff();
    uint32_t c0 = a.component(0).coeff(Word());
    if (c0 == 0)
        throw std::domain_error("series has non-unit constant term");
    // a = c0 (1 + z) with val(z) >= 1; inverse = c0^{-1} sum (-z)^k.
    uint32_t inv0 = fp_inv(c0, ctx.p);
    TruncatedSeries z = a.scaled(inv0) - TruncatedSeries::one(ctx, N);
    TruncatedSeries acc = TruncatedSeries::one(ctx, N);
    TruncatedSeries pow = TruncatedSeries::one(ctx, N);
    TruncatedSeries minus_z = z.scaled(fp_neg(1, ctx.p));
    for (int k = 1; k <= N; ++k) {
        pow = pow * minus_z;
        if (pow.is_zero())
            break;
        acc = acc + pow;
    }
    return acc.scaled(inv0);
}

IntSeries IntSeries::mul_truncated(const IntSeries& o, int maxdeg) const
{
    IntSeries r = IntSeries::zeros(maxdeg);
    for (int g = 0; g <= max_degree() && g <= maxdeg; ++g)
        for (int h = 0; h <= o.max_degree() && g + h <= maxdeg; ++h)
            r[g + h] += c_[size_t(g)] * o[h];
    return r;
}

bool IntSeries::prefix_equal(const IntSeries& o, int through_degree) const
{
    if (max_degree() < through_degree || o.max_degree() < through_degree)
        return false;
    for (int n = 0; n <= through_degree; ++n)
        if (c_[size_t(n)] != o[n])
            return false;
    return true;
}

std::string IntSeries::to_string() const
{
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i)
            os << ' ';
        os << c_[i];
    }
    return os.str();
}

IntSeries invert_int_series(const IntSeries& c)
{
    if (c.max_degree() < 0 || c[0] != 1)
        throw std::domain_error("series must have constant term 1");
    const int N = c.max_degree();
    IntSeries a = IntSeries::zeros(N);
    a[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt s = 0;
        for (int k = 1; k <= n; ++k)
            s += c[k] * a[n - k];
        a[n] = -s;
    }
    return a;
}

} // namespace gocha
