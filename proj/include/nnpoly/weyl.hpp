/**
 * @file weyl.hpp
 * @brief The Weyl algebra A_1(Z) = Z<x, z>/(zx - xz - 1) acting on Z[x]
 *        (x by multiplication, z by d/dx), and the description of N0[x]
 *        through the functionals v_0 d^n.
 */
#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace nnpoly {

/// Normal form sum c_ij x^i z^j (x-powers to the left), zero terms dropped.
class WeylOp {
public:
    using Key = std::pair<std::size_t, std::size_t>; ///< (i, j) for x^i z^j

    WeylOp() = default;

    static WeylOp monomial(const Int& c, std::size_t i, std::size_t j)
    {
        WeylOp r;
        if (c != 0)
            r.terms_[{i, j}] = c;
        return r;
    }
    static WeylOp constant(const Int& c) { return monomial(c, 0, 0); }
    static WeylOp x() { return monomial(1, 1, 0); }
    static WeylOp z() { return monomial(1, 0, 1); }

    /// Multiplication by a polynomial: sum f_i x^i.
    static WeylOp from_poly(const ZPoly& f)
    {
        WeylOp r;
        for (std::size_t i = 0; i <= f.degree() && !f.is_zero(); ++i)
            r.add(f[i], i, 0);
        return r;
    }

    const std::map<Key, Int>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Int& c, std::size_t i, std::size_t j)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted && (it->second += c) == 0)
            terms_.erase(it);
    }

    friend WeylOp operator+(WeylOp a, const WeylOp& b)
    {
        for (const auto& [k, c] : b.terms_)
            a.add(c, k.first, k.second);
        return a;
    }

    friend WeylOp operator-(WeylOp a, const WeylOp& b)
    {
        for (const auto& [k, c] : b.terms_)
            a.add(-c, k.first, k.second);
        return a;
    }

    friend bool operator==(const WeylOp&, const WeylOp&) = default;

private:
    std::map<Key, Int> terms_;
};

/**
 * Normal-form product. Moving z^b past x^c uses
 *   z^b x^c = sum_k C(b,k) c!/(c-k)! x^{c-k} z^{b-k},
 * which is the rewrite z x = x z + 1 applied until no z stands left of an x.
 */
inline WeylOp weyl_mul(const WeylOp& u, const WeylOp& v)
{
    WeylOp r;
    for (const auto& [ku, cu] : u.terms()) {
        const auto [a, b] = ku;
        for (const auto& [kv, cv] : v.terms()) {
            const auto [c, d] = kv;
            Int falling = 1;
            for (std::size_t k = 0; k <= std::min(b, c); ++k) {
                if (k > 0)
                    falling *= c - k + 1;
                r.add(cu * cv * binomial(static_cast<unsigned>(b), static_cast<unsigned>(k)) * falling, a + c - k,
                      b + d - k);
            }
        }
    }
    return r;
}

inline WeylOp operator*(const WeylOp& u, const WeylOp& v) { return weyl_mul(u, v); }

/// u applied to f: x multiplies, z differentiates.
inline ZPoly weyl_apply(const WeylOp& u, const ZPoly& f)
{
    ZPoly r;
    for (const auto& [k, c] : u.terms())
        r += c * (ZPoly::monomial(1, k.first) * derivative(f, k.second));
    return r;
}

/// f(0)
inline Int v0(const ZPoly& f) { return f.constant_term(); }

/// (v_0 d^n f) for n = 0 .. deg f; every later entry is zero.
inline std::vector<Int> delta_map(const ZPoly& f)
{
    std::vector<Int> out;
    if (f.is_zero())
        return out;
    for (std::size_t n = 0; n <= f.degree(); ++n)
        out.push_back(v0(derivative(f, n)));
    return out;
}

/// f in N0[x] iff v_0 d^n f >= 0 for every n; only n <= deg f can be non-zero.
inline bool prop_m_membership(const ZPoly& f)
{
    if (f.is_zero())
        throw domain_error("prop_m_membership: zero polynomial");
    for (std::size_t n = 0; n <= f.degree(); ++n)
        if (v0(derivative(f, n)) < 0)
            return false;
    return true;
}

inline std::string to_string(const WeylOp& u)
{
    if (u.is_zero())
        return "0";
    std::string out;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const auto [i, j] = it->first;
        const Int& c = it->second;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const Int mag = abs(c);
        if ((i == 0 && j == 0) || mag != 1)
            out += mag.str();
        if (i >= 1)
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        if (j >= 1)
            out += j == 1 ? "z" : "z^" + std::to_string(j);
    }
    return out;
}

/**
 * Parses sums of words such as "3x^2z", "z*x", "-x*z^2+1". Each term is the
 * product of its generators in the order written, so "zx" is x z + 1.
 */
inline WeylOp parse_weyl(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw parse_error("empty operator");
    auto fail = [&](const std::string& why) {
        return parse_error("cannot parse operator '" + std::string(text) + "': " + why);
    };
    WeylOp result;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        const bool has_coeff = pos > start;
        Int c = has_coeff ? parse_int(std::string_view(s).substr(start, pos - start)) : Int(1);
        WeylOp term = WeylOp::constant(negative ? Int(-c) : c);
        bool any_gen = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            const char g = s[pos];
            if (g != 'x' && g != 'z')
                throw fail(std::string("unexpected '") + g + "'");
            ++pos;
            std::size_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t es = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (pos == es || pos - es > 4)
                    throw fail("bad exponent");
                e = std::stoul(s.substr(es, pos - es));
            }
            term = weyl_mul(term, g == 'x' ? WeylOp::monomial(1, e, 0) : WeylOp::monomial(1, 0, e));
            any_gen = true;
        }
        if (!has_coeff && !any_gen)
            throw fail("empty term");
        result = result + term;
    }
    return result;
}

} // namespace nnpoly
