#ifndef GOCHA_GROUP_WORD_HPP
#define GOCHA_GROUP_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gocha {

// A free-group word as an expression tree. Commutator [a,b] denotes
// a^{-1} b^{-1} a b. The empty product is the identity. Trees are kept
// (rather than flattened letter strings) so that syntactic checks on
// relations can see commutator structure.
class GroupWord {
  public:
    enum class Kind : uint8_t { generator, inverse, product, power, commutator };

    static GroupWord generator(int index);
    static GroupWord inverse(GroupWord w);
    static GroupWord product(std::vector<GroupWord> factors);
    static GroupWord power(GroupWord base, long long exponent);
    static GroupWord commutator(GroupWord a, GroupWord b);
    static GroupWord identity() { return product({}); }

    Kind kind() const { return kind_; }
    int generator_index() const { return gen_; }
    long long exponent() const { return exp_; }
    const std::vector<GroupWord>& children() const { return children_; }

    // Structural normal form: power^1 peeled, power^0 to identity,
    // singleton and nested products flattened. Commutator/inverse
    // structure is preserved.
    GroupWord simplified() const;
    bool is_identity() const { return kind_ == Kind::product && children_.empty(); }
    // True when the simplified tree is exactly commutator(x_u, x_v).
    bool is_literal_commutator(int& u, int& v) const;

    int max_generator() const;

    bool operator==(const GroupWord& o) const;

  private:
    GroupWord() = default;
    Kind kind_ = Kind::product;
    int gen_ = 0;
    long long exp_ = 0;
    std::vector<GroupWord> children_;
};

// Grammar: atoms x1..xd; '*' product, '^' integer power (binds tighter
// than '*'), "[a,b]" commutator, parentheses; whitespace ignored.
// Exponents are limited to |e| <= 65536. Column numbers are 1-based.
GroupWord parse_group_word(const std::string& text, int d);

std::string render_group_word(const GroupWord& w);

} // namespace gocha

#endif
