/**
 * @file base_a.hpp
 * @brief Base-a encoding of N0[x]* into pairs of naturals.
 *
 * A polynomial f with every coefficient below a is determined by the pair
 * (a, f(a)): its coefficients are the base-a digits of f(a).
 */
#pragma once

#include <cstddef>
#include <string>

#include "poly.hpp"

namespace nnpoly {

struct BaseAPair {
    Int a;
    Int b;

    friend bool operator==(const BaseAPair&, const BaseAPair&) = default;
};

/// f(a), for a > alpha(f).
inline Int encode_base(const NNPoly& f, const Int& a)
{
    if (a <= f.alpha())
        throw domain_error("encode_base: base " + a.str() + " does not exceed alpha(f) = " + f.alpha().str());
    return f.eval(a);
}

/// The unique f with alpha(f) < a and f(a) = b (repeated division by a).
inline NNPoly decode_base(const Int& a, const Int& b)
{
    if (a < 2)
        throw domain_error("decode_base: base must be at least 2");
    if (b < 1)
        throw domain_error("decode_base: value must be at least 1");
    std::vector<Int> digits;
    Int q = b;
    while (q != 0) {
        Int r;
        boost::multiprecision::divide_qr(q, a, q, r);
        digits.push_back(std::move(r));
    }
    return NNPoly::unchecked(ZPoly(std::move(digits)));
}

/// max{ n : a^n < b }, or 0 when a >= b.
inline std::size_t eta(const Int& a, const Int& b)
{
    if (a < 2)
        throw domain_error("eta: base must be at least 2");
    if (b <= 1)
        throw domain_error("eta: value must be at least 2");
    std::size_t n = 0;
    Int power = a;
    while (power < b) {
        ++n;
        power *= a;
    }
    return n;
}

enum class EmbedMode { alpha, eval, eval_N };

inline std::string to_string(EmbedMode m)
{
    switch (m) {
    case EmbedMode::alpha: return "alpha";
    case EmbedMode::eval: return "eval";
    case EmbedMode::eval_N: return "eval_N";
    }
    return "?";
}

/**
 * Injective maps N0[x]* -> N^2:
 *   alpha:  (alpha(f)+1, f(alpha(f)+1))
 *   eval:   (f(1)+1, f(f(1)+1))
 *   eval_N: (f(1), f(f(1))), only for x not dividing f, deg f >= 1 and f(1) > alpha(f)
 */
inline BaseAPair embed_pair(const NNPoly& f, EmbedMode mode)
{
    Int a;
    switch (mode) {
    case EmbedMode::alpha: a = f.alpha() + 1; break;
    case EmbedMode::eval: a = f.eval(Int(1)) + 1; break;
    case EmbedMode::eval_N:
        if (f.constant_term() == 0)
            throw domain_error("embed_pair(eval_N): x divides f");
        if (f.degree() == 0)
            throw domain_error("embed_pair(eval_N): f is constant");
        a = f.eval(Int(1));
        if (a <= f.alpha())
            throw domain_error("embed_pair(eval_N): f(1) does not exceed alpha(f)");
        break;
    }
    return {a, f.eval(a)};
}

/// (a1,b1) ~ (a2,b2): some f with alpha(f) < min(a1,a2) has f(a1)=b1 and f(a2)=b2.
inline bool sim_equiv(const BaseAPair& p1, const BaseAPair& p2)
{
    if (p1.a < 2 || p2.a < 2 || p1.b < 1 || p2.b < 1)
        return false;
    const BaseAPair& hi = p1.a >= p2.a ? p1 : p2;
    const BaseAPair& lo = p1.a >= p2.a ? p2 : p1;
    NNPoly f = decode_base(hi.a, hi.b);
    return f.alpha() < lo.a && f.eval(lo.a) == lo.b;
}

} // namespace nnpoly
