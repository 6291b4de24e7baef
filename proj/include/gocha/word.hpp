#ifndef GOCHA_WORD_HPP
#define GOCHA_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gocha {

// A monomial: a word over generator indices 1..d, stored one letter per
// byte. The empty word is the unit. Degree = length.
//
// Monomial order is degree-first, then lexicographic with X_1 > X_2 > ...
// > X_d. Since smaller letter index means greater variable, the byte-wise
// smaller word of two equal-length words is the greater monomial.
class Word {
  public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    static Word generator(int i) { return Word(std::string(1, char(i))); }

    int degree() const { return int(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int pos) const { return int(uint8_t(letters_[size_t(pos)])); }
    const std::string& letters() const { return letters_; }

    Word operator*(const Word& o) const { return Word(letters_ + o.letters_); }

    bool operator==(const Word&) const = default;

    // True if o occurs in this word as a contiguous factor.
    bool contains(const Word& o) const
    {
        return letters_.find(o.letters_) != std::string::npos;
    }
    // Position of the leftmost factor occurrence, or -1.
    int find_factor(const Word& o) const
    {
        auto pos = letters_.find(o.letters_);
        return pos == std::string::npos ? -1 : int(pos);
    }

    Word prefix(int len) const { return Word(letters_.substr(0, size_t(len))); }
    Word suffix_from(int pos) const { return Word(letters_.substr(size_t(pos))); }

    // Integer code of the word among all words of the same degree, in
    // byte-lexicographic (= deglex-descending) order: big-endian base d.
    uint64_t code(uint32_t d) const
    {
        uint64_t c = 0;
        for (char ch : letters_)
            c = c * d + uint64_t(uint8_t(ch)) - 1;
        return c;
    }
    static Word from_code(uint64_t code, int degree, uint32_t d)
    {
        std::string s(size_t(degree), '\0');
        for (int i = degree - 1; i >= 0; --i) {
            s[size_t(i)] = char(code % d + 1);
            code /= d;
        }
        return Word(std::move(s));
    }

  private:
    std::string letters_;
};

// a < b in the monomial order (deglex, X_1 greatest).
inline bool monomial_less(const Word& a, const Word& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.letters() > b.letters();
}

// Key order used for polynomial term maps: degree ascending, and within a
// degree monomial-descending, so the first term of the lowest degree is
// the leading monomial in the sense used throughout.
struct TermKeyOrder {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.letters() < b.letters();
    }
};

// True if some nonempty proper suffix of a equals a prefix of b.
inline bool suffix_meets_prefix(const Word& a, const Word& b)
{
    int la = a.degree(), lb = b.degree();
    for (int k = 1; k < la; ++k) { // suffix of a starting at position k
        int len = la - k;
        if (len > lb)
            continue;
        if (a.letters().compare(size_t(k), size_t(len), b.letters(), 0, size_t(len)) == 0)
            return true;
    }
    return false;
}

std::string render_word(const Word& w); // "X1*X2", "1" for the unit

} // namespace gocha

#endif
