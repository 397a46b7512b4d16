/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Z and the monoid N0[x]* of
 *        non-zero polynomials with non-negative coefficients.
 *
 * Coefficients are stored in ascending order (index = exponent). A ZPoly is
 * always trimmed, so the zero polynomial is the empty list. An NNPoly is a
 * ZPoly that is non-zero and has no negative coefficient; the invariant is
 * checked whenever one is built from untrusted data.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace nnpoly {

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static ZPoly constant(const Int& v) { return ZPoly(std::vector<Int>{v}); }

    /// coefficient * x^exponent
    static ZPoly monomial(const Int& coefficient, std::size_t exponent)
    {
        std::vector<Int> c(exponent + 1);
        c[exponent] = coefficient;
        return ZPoly(std::move(c));
    }

    static ZPoly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree; the zero polynomial reports 0.
    std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }

    const std::vector<Int>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^i (zero beyond the degree).
    Int operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
    Int constant_term() const { return c_.empty() ? Int(0) : c_.front(); }

    bool is_constant() const noexcept { return c_.size() <= 1; }

    /// Horner evaluation.
    template <typename T>
    T eval(const T& t) const
    {
        T acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + T(*it);
        return acc;
    }

    ZPoly operator-() const
    {
        std::vector<Int> r(c_);
        for (auto& v : r)
            v = -v;
        return ZPoly(std::move(r));
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b)
    {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] += b.c_[i];
        return ZPoly(std::move(r));
    }

    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return ZPoly(std::move(r));
    }

    friend ZPoly operator*(const Int& s, const ZPoly& p)
    {
        std::vector<Int> r(p.c_);
        for (auto& v : r)
            v *= s;
        return ZPoly(std::move(r));
    }

    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    /// Lexicographic order on the ascending coefficient list.
    friend std::strong_ordering operator<=>(const ZPoly& a, const ZPoly& b)
    {
        return std::lexicographical_compare_three_way(
            a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
            [](const Int& l, const Int& r) { return l < r ? std::strong_ordering::less
                                                    : r < l ? std::strong_ordering::greater
                                                            : std::strong_ordering::equal; });
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Int> c_;
};

inline ZPoly pow(const ZPoly& base, unsigned exponent)
{
    ZPoly result = ZPoly::constant(1);
    ZPoly b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

/// Formal derivative.
inline ZPoly derivative(const ZPoly& f)
{
    if (f.degree() == 0)
        return {};
    std::vector<Int> r(f.degree());
    for (std::size_t i = 1; i <= f.degree(); ++i)
        r[i - 1] = f[i] * i;
    return ZPoly(std::move(r));
}

/// n-th formal derivative.
inline ZPoly derivative(const ZPoly& f, std::size_t n)
{
    if (n > f.degree())
        return {};
    std::vector<Int> r(f.degree() - n + 1);
    for (std::size_t i = n; i <= f.degree(); ++i) {
        Int falling = 1;
        for (std::size_t k = 0; k < n; ++k)
            falling *= i - k;
        r[i - n] = f[i] * falling;
    }
    return ZPoly(std::move(r));
}

/// True iff every coefficient is >= 0. The zero polynomial is rejected.
inline bool is_nonneg(const ZPoly& f)
{
    if (f.is_zero())
        throw domain_error("is_nonneg: zero polynomial");
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Int& v) { return v >= 0; });
}

/// gcd of the coefficients (non-negative; 0 for the zero polynomial).
inline Int content(const ZPoly& f)
{
    Int g = 0;
    for (const auto& v : f.coeffs()) {
        g = gcd(g, v);
        if (g == 1)
            break;
    }
    return abs(g);
}

/// Quotient of exact division in Z[x], or nullopt when g does not divide f.
inline std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g)
{
    if (g.is_zero())
        throw domain_error("divide_exact: division by the zero polynomial");
    if (f.is_zero())
        return ZPoly{};
    if (f.degree() < g.degree())
        return std::nullopt;
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> q(f.degree() - g.degree() + 1);
    const Int& lead = g.coeffs().back();
    const std::size_t dg = g.degree();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int& top = rem[k + dg];
        if (top == 0)
            continue;
        if (top % lead != 0)
            return std::nullopt;
        Int factor = top / lead;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[k + j] -= factor * g.coeffs()[j];
        q[k] = std::move(factor);
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (rem[i] != 0)
            return std::nullopt;
    return ZPoly(std::move(q));
}

/// Divides every coefficient by s, which must divide them all.
inline ZPoly divide_scalar(const ZPoly& f, const Int& s)
{
    std::vector<Int> r(f.coeffs());
    for (auto& v : r)
        v /= s;
    return ZPoly(std::move(r));
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& f)
{
    if (f.is_zero())
        return f;
    ZPoly p = divide_scalar(f, content(f));
    return p.leading() < 0 ? -p : p;
}

/// Element of the monoid N0[x]*: non-zero, all coefficients >= 0.
class NNPoly {
public:
    NNPoly() : p_(ZPoly::constant(1)) {}

    explicit NNPoly(ZPoly p) : p_(std::move(p))
    {
        if (p_.is_zero())
            throw domain_error("NNPoly: the zero polynomial is not in N0[x]*");
        if (!is_nonneg(p_))
            throw domain_error("NNPoly: negative coefficient");
    }

    explicit NNPoly(std::vector<Int> coeffs) : NNPoly(ZPoly(std::move(coeffs))) {}
    NNPoly(std::initializer_list<Int> coeffs) : NNPoly(ZPoly(coeffs)) {}

    static NNPoly one() { return NNPoly(); }
    static NNPoly constant(const Int& v) { return NNPoly(ZPoly::constant(v)); }
    static NNPoly x() { return NNPoly(ZPoly::x()); }
    static NNPoly monomial(const Int& c, std::size_t e) { return NNPoly(ZPoly::monomial(c, e)); }

    /// Wraps p without checking; callers guarantee the invariant.
    static NNPoly unchecked(ZPoly p)
    {
        NNPoly r;
        r.p_ = std::move(p);
        return r;
    }

    const ZPoly& z() const noexcept { return p_; }
    operator const ZPoly&() const noexcept { return p_; }

    std::size_t degree() const noexcept { return p_.degree(); }
    const std::vector<Int>& coeffs() const noexcept { return p_.coeffs(); }
    Int operator[](std::size_t i) const { return p_[i]; }
    Int leading() const { return p_.leading(); }
    Int constant_term() const { return p_.constant_term(); }
    bool is_one() const { return p_.degree() == 0 && p_.leading() == 1; }
    bool is_constant() const noexcept { return p_.is_constant(); }

    template <typename T>
    T eval(const T& t) const
    {
        return p_.eval(t);
    }

    /// alpha(f): the greatest coefficient.
    Int alpha() const { return *std::max_element(p_.coeffs().begin(), p_.coeffs().end()); }

    friend NNPoly operator*(const NNPoly& a, const NNPoly& b) { return unchecked(a.p_ * b.p_); }
    NNPoly& operator*=(const NNPoly& o) { return *this = *this * o; }

    friend bool operator==(const NNPoly&, const NNPoly&) = default;
    friend std::strong_ordering operator<=>(const NNPoly& a, const NNPoly& b) { return a.p_ <=> b.p_; }

private:
    ZPoly p_;
};

inline NNPoly pow(const NNPoly& base, unsigned exponent) { return NNPoly::unchecked(pow(base.z(), exponent)); }

/// Product of a range of NNPoly.
inline NNPoly product(std::span<const NNPoly> factors)
{
    NNPoly r;
    for (const auto& f : factors)
        r *= f;
    return r;
}

/// Returns f as an NNPoly when it lies in N0[x]*.
inline std::optional<NNPoly> to_nn(const ZPoly& f)
{
    if (f.is_zero() || !is_nonneg(f))
        return std::nullopt;
    return NNPoly::unchecked(f);
}

inline Int content(const NNPoly& f) { return content(f.z()); }

/// x-adic valuation: number of leading zero coefficients.
inline std::size_t x_valuation(const ZPoly& f)
{
    std::size_t e = 0;
    while (e < f.coeffs().size() && f.coeffs()[e] == 0)
        ++e;
    return e;
}

/// f = content * x^x_exponent * core with core in P0.
struct CanonicalDecomposition {
    Int content;
    std::size_t x_exponent = 0;
    NNPoly core;

    NNPoly reconstruct() const { return NNPoly::monomial(content, x_exponent) * core; }

    friend bool operator==(const CanonicalDecomposition&, const CanonicalDecomposition&) = default;
};

inline CanonicalDecomposition canonical_decompose(const NNPoly& f)
{
    CanonicalDecomposition d;
    d.content = content(f);
    d.x_exponent = x_valuation(f.z());
    std::vector<Int> core(f.coeffs().begin() + static_cast<std::ptrdiff_t>(d.x_exponent), f.coeffs().end());
    for (auto& v : core)
        v /= d.content;
    d.core = NNPoly::unchecked(ZPoly(std::move(core)));
    return d;
}

/// Membership in P0: primitive with non-zero constant term.
inline bool in_p0(const NNPoly& f) { return f.constant_term() != 0 && content(f) == 1; }

/// The involution of P0 that reverses the coefficient list.
inline NNPoly involution(const NNPoly& f)
{
    if (!in_p0(f))
        throw domain_error("involution: argument is not primitive with non-zero constant term");
    std::vector<Int> r(f.coeffs().rbegin(), f.coeffs().rend());
    return NNPoly::unchecked(ZPoly(std::move(r)));
}

} // namespace nnpoly
