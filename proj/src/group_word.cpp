#include "gocha/group_word.hpp"

#include <cctype>
#include <stdexcept>

#include "gocha/errors.hpp"

namespace gocha {

GroupWord GroupWord::generator(int index)
{
    if (index < 1)
        throw std::invalid_argument("generator index must be >= 1");
    GroupWord w;
    w.kind_ = Kind::generator;
    w.gen_ = index;
    return w;
}

GroupWord GroupWord::inverse(GroupWord x)
{
    GroupWord w;
    w.kind_ = Kind::inverse;
    w.children_.push_back(std::move(x));
    return w;
}

GroupWord GroupWord::product(std::vector<GroupWord> factors)
{
    GroupWord w;
    w.kind_ = Kind::product;
    w.children_ = std::move(factors);
    return w;
}

GroupWord GroupWord::power(GroupWord base, long long exponent)
{
    if (exponent > 65536 || exponent < -65536)
        throw std::invalid_argument("exponent magnitude limited to 65536");
    GroupWord w;
    w.kind_ = Kind::power;
    w.exp_ = exponent;
    w.children_.push_back(std::move(base));
    return w;
}

GroupWord GroupWord::commutator(GroupWord a, GroupWord b)
{
    GroupWord w;
    w.kind_ = Kind::commutator;
    w.children_.push_back(std::move(a));
    w.children_.push_back(std::move(b));
    return w;
}

GroupWord GroupWord::simplified() const
{
    switch (kind_) {
    case Kind::generator:
        return *this;
    case Kind::inverse:
        return inverse(children_[0].simplified());
    case Kind::commutator:
        return commutator(children_[0].simplified(), children_[1].simplified());
    case Kind::power: {
        if (exp_ == 0)
            return identity();
        GroupWord base = children_[0].simplified();
        if (exp_ == 1)
            return base;
        return power(std::move(base), exp_);
    }
    case Kind::product: {
        std::vector<GroupWord> flat;
        for (const auto& c : children_) {
            GroupWord s = c.simplified();
            if (s.is_identity())
                continue;
            if (s.kind_ == Kind::product)
                for (auto& cc : s.children_)
                    flat.push_back(std::move(cc));
            else
                flat.push_back(std::move(s));
        }
        if (flat.size() == 1)
            return flat[0];
        return product(std::move(flat));
    }
    }
    throw std::logic_error("unreachable word kind");
}

bool GroupWord::is_literal_commutator(int& u, int& v) const
{
    GroupWord s = simplified();
    if (s.kind_ != Kind::commutator)
        return false;
    const GroupWord& a = s.children_[0];
    const GroupWord& b = s.children_[1];
    if (a.kind_ != Kind::generator || b.kind_ != Kind::generator)
        return false;
    u = a.gen_;
    v = b.gen_;
    return true;
}

int GroupWord::max_generator() const
{
    if (kind_ == Kind::generator)
        return gen_;
    int m = 0;
    for (const auto& c : children_)
        m = std::max(m, c.max_generator());
    return m;
}

bool GroupWord::operator==(const GroupWord& o) const
{
    if (kind_ != o.kind_ || gen_ != o.gen_ || exp_ != o.exp_)
        return false;
    return children_ == o.children_;
}

namespace {

struct WordParser {
    const std::string& text;
    int d;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, 1, int(pos) + 1);
    }
    void skip_ws()
    {
        while (pos < text.size() && std::isspace(uint8_t(text[pos])))
            ++pos;
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long integer()
    {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(uint8_t(text[pos])))
            fail("expected integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 65536)
                fail("exponent magnitude limited to 65536");
            ++pos;
        }
        return neg ? -v : v;
    }

    // product := factor ('*' factor)*
    GroupWord product()
    {
        std::vector<GroupWord> factors;
        factors.push_back(factor());
        while (eat('*'))
            factors.push_back(factor());
        if (factors.size() == 1)
            return factors[0];
        return GroupWord::product(std::move(factors));
    }

    // factor := atom ('^' integer)?
    GroupWord factor()
    {
        GroupWord a = atom();
        if (eat('^'))
            return GroupWord::power(std::move(a), integer());
        return a;
    }

    // atom := x<i> | '[' product ',' product ']' | '(' product ')'
    GroupWord atom()
    {
        char c = peek();
        if (c == 'x') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(uint8_t(text[pos])))
                fail("expected generator index after 'x'");
            long long i = 0;
            while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
                i = i * 10 + (text[pos] - '0');
                if (i > 1000)
                    fail("generator index too large");
                ++pos;
            }
            if (i < 1 || i > d)
                fail("generator index out of range 1.." + std::to_string(d));
            return GroupWord::generator(int(i));
        }
        if (c == '[') {
            ++pos;
            GroupWord a = product();
            if (!eat(','))
                fail("expected ',' in commutator");
            GroupWord b = product();
            if (!eat(']'))
                fail("expected ']'");
            return GroupWord::commutator(std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos;
            GroupWord a = product();
            if (!eat(')'))
                fail("expected ')'");
            return a;
        }
        fail("expected 'x<i>', '[' or '('");
    }
};

void render_rec(const GroupWord& w, std::string& out)
{
    switch (w.kind()) {
    case GroupWord::Kind::generator:
        out += 'x';
        out += std::to_string(w.generator_index());
        return;
    case GroupWord::Kind::inverse:
        render_rec(GroupWord::power(w.children()[0], -1), out);
        return;
    case GroupWord::Kind::power: {
        const GroupWord& base = w.children()[0];
        if (base.kind() == GroupWord::Kind::generator ||
            base.kind() == GroupWord::Kind::commutator) {
            render_rec(base, out);
        } else {
            out += '(';
            render_rec(base, out);
            out += ')';
        }
        out += '^';
        out += std::to_string(w.exponent());
        return;
    }
    case GroupWord::Kind::commutator:
        out += '[';
        render_rec(w.children()[0], out);
        out += ',';
        render_rec(w.children()[1], out);
        out += ']';
        return;
    case GroupWord::Kind::product: {
        if (w.children().empty()) {
            out += "x1^0"; // canonical identity spelling
            return;
        }
        bool first = true;
        for (const auto& c : w.children()) {
            if (!first)
                out += '*';
            first = false;
            if (c.kind() == GroupWord::Kind::product) {
                out += '(';
                render_rec(c, out);
                out += ')';
            } else {
                render_rec(c, out);
            }
        }
        return;
    }
    }
}

} // namespace

GroupWord parse_group_word(const std::string& text, int d)
{
    WordParser p{text, d};
    if (p.peek() == '\0')
        throw ParseError("empty word", 1, 1);
    GroupWord w = p.product();
    if (p.peek() != '\0')
        p.fail("unexpected trailing input");
    return w;
}

std::string render_group_word(const GroupWord& w)
{
    std::string out;
    render_rec(w, out);
    return out;
}

} // namespace gocha
