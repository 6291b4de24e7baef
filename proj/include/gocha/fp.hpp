#ifndef GOCHA_FP_HPP
#define GOCHA_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gocha {

inline bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

// Shared parameters of a computation: the coefficient prime p and the
// number of generators d (variables X_1..X_d, group generators x_1..x_d).
// All algebra values carry their context; mixing contexts is an error.
struct Context {
    uint32_t p = 2;
    uint32_t d = 1;

    Context() = default;
    Context(uint32_t p_, uint32_t d_) : p(p_), d(d_)
    {
        if (!is_prime(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        if (d < 1 || d > 64)
            throw std::invalid_argument("generator count must be in 1..64");
    }

    bool operator==(const Context&) const = default;
};

inline void require_same(const Context& a, const Context& b)
{
    if (!(a == b))
        throw std::invalid_argument("context mismatch (p or d differ)");
}

// Residue arithmetic mod p. Values are kept in 0..p-1.
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b) % p; }
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p)
{
    return static_cast<uint32_t>((uint64_t(a) * b) % p);
}

inline uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p)
{
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint32_t fp_inv(uint32_t a, uint32_t p)
{
    if (a % p == 0)
        throw std::domain_error("division by zero in F_p");
    return fp_pow(a, p - 2, p); // Fermat
}

} // namespace gocha

#endif
