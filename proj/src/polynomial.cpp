#include "gocha/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "gocha/errors.hpp"

namespace gocha {

std::string render_word(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (int i = 0; i < w.degree(); ++i) {
        if (i)
            s += '*';
        s += 'X';
        s += std::to_string(w.letter(i));
    }
    return s;
}

Polynomial Polynomial::generator(Context ctx, int i)
{
    if (i < 1 || uint32_t(i) > ctx.d)
        throw std::invalid_argument("generator index out of range");
    return monomial(ctx, Word::generator(i), 1);
}

Polynomial Polynomial::monomial(Context ctx, const Word& w, uint32_t coeff)
{
    Polynomial f(ctx);
    f.add_term(w, coeff);
    return f;
}

std::pair<Word, uint32_t> Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw std::domain_error("leading monomial of zero");
    return *terms_.begin();
}

uint32_t Polynomial::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Word& w, uint32_t c)
{
    c %= ctx_.p;
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = fp_add(it->second, c, ctx_.p);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same(ctx_, o.ctx_);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same(ctx_, o.ctx_);
    for (const auto& [w, c] : o.terms_)
        add_term(w, fp_neg(c, ctx_.p));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    return mul_truncated(o, -1);
}

Polynomial Polynomial::mul_truncated(const Polynomial& o, int maxdeg) const
{
    require_same(ctx_, o.ctx_);
    Polynomial r(ctx_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            if (maxdeg >= 0 && wa.degree() + wb.degree() > maxdeg)
                continue;
            r.add_term(wa * wb, fp_mul(ca, cb, ctx_.p));
        }
    }
    return r;
}

Polynomial Polynomial::sandwich(const Word& left, const Word& right) const
{
    Polynomial r(ctx_);
    for (const auto& [w, c] : terms_)
        r.add_term(left * w * right, c);
    return r;
}

Polynomial Polynomial::scaled(uint32_t c) const
{
    Polynomial r(ctx_);
    for (const auto& [w, cw] : terms_)
        r.add_term(w, fp_mul(cw, c, ctx_.p));
    return r;
}

Polynomial Polynomial::homogeneous_component(int n) const
{
    Polynomial r(ctx_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == n)
            r.add_term(w, c);
    return r;
}

Polynomial Polynomial::leading_form() const
{
    if (terms_.empty())
        return *this;
    return homogeneous_component(valuation());
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty())
        throw std::domain_error("monic of zero");
    return scaled(fp_inv(leading_monomial().second, ctx_.p));
}

Polynomial commutator(const Polynomial& a, const Polynomial& b)
{
    return a * b - b * a;
}

Polynomial generator_commutator(Context ctx, int i, int j)
{
    return commutator(Polynomial::generator(ctx, i), Polynomial::generator(ctx, j));
}

std::string render_polynomial(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    // Term map is (degree asc, monomial desc); rendering wants descending
    // deglex, so walk degree groups from the back.
    const auto& terms = f.terms();
    std::vector<const Polynomial::TermMap::value_type*> order;
    order.reserve(terms.size());
    for (const auto& t : terms)
        order.push_back(&t);
    std::string s;
    int hi = int(order.size());
    std::vector<std::pair<int, int>> groups; // [begin, end) per degree
    int i = 0;
    while (i < hi) {
        int j = i;
        while (j < hi && order[size_t(j)]->first.degree() == order[size_t(i)]->first.degree())
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    for (auto git = groups.rbegin(); git != groups.rend(); ++git) {
        for (int k = git->first; k < git->second; ++k) {
            const auto& [w, c] = *order[size_t(k)];
            if (!s.empty())
                s += " + ";
            if (c != 1 || w.empty()) {
                s += std::to_string(c);
                if (!w.empty())
                    s += '*';
            }
            if (!w.empty())
                s += render_word(w);
        }
    }
    return s;
}

namespace {

struct PolyLexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(uint8_t(text[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg)
    {
        throw ParseError(msg + " at offset " + std::to_string(pos));
    }
    uint64_t number()
    {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(uint8_t(text[pos])))
            fail("expected number");
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
            v = v * 10 + uint64_t(text[pos] - '0');
            if (v > (1ull << 40))
                fail("number too large");
            ++pos;
        }
        return v;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, Context ctx)
{
    PolyLexer lx{text};
    Polynomial f(ctx);
    if (lx.eof())
        throw ParseError("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        if (!first) {
            if (lx.peek() != '+')
                lx.fail("expected '+'");
            ++lx.pos;
        }
        first = false;
        // term: [coeff] ('*' X<i>)* | X<i> ('*' X<i>)* | coeff
        uint32_t c = 1;
        Word w;
        bool saw_atom = false;
        if (std::isdigit(uint8_t(lx.peek()))) {
            c = uint32_t(lx.number() % ctx.p);
            saw_atom = true;
            if (lx.peek() == '*')
                ++lx.pos;
            else {
                f.add_term(w, c);
                continue;
            }
        }
        while (true) {
            if (lx.peek() != 'X')
                lx.fail("expected generator 'X<i>'");
            ++lx.pos;
            uint64_t i = lx.number();
            if (i < 1 || i > ctx.d)
                lx.fail("generator index out of range 1..d");
            w = w * Word::generator(int(i));
            saw_atom = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!saw_atom)
            lx.fail("empty term");
        f.add_term(w, c);
    }
    return f;
}

} // namespace gocha
