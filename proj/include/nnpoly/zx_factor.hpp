/**
 * @file zx_factor.hpp
 * @brief Factorization in Z[x] by Kronecker's interpolation method, and the
 *        embedding of N0[x]* into the free abelian group on primes and
 *        irreducible polynomials.
 *
 * A divisor of degree m of a primitive g is determined by its values at m+1
 * integer points, each of which divides the value of g there. Candidates are
 * enumerated point by point in Newton form; the divided differences of an
 * integer polynomial at integer nodes are integers, which prunes most partial
 * tuples before they are completed.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "int_factor.hpp"
#include "poly.hpp"

namespace nnpoly {

struct KroneckerLimits {
    std::size_t max_degree = 16;
    Int max_coefficient = pow(Int(10), 18);
};

struct ZFactorization {
    int sign = 1;
    std::map<Int, unsigned> content_primes;
    /// Irreducible, primitive, positive leading coefficient; sorted.
    std::vector<ZPoly> factors;

    ZPoly reconstruct() const
    {
        Int c = sign;
        for (const auto& [p, e] : content_primes)
            c *= pow(p, e);
        ZPoly r = ZPoly::constant(c);
        for (const auto& f : factors)
            r *= f;
        return r;
    }
};

namespace detail {

/// Kronecker evaluation points 0, 1, -1, 2, -2, ...
inline Int kronecker_point(std::size_t i)
{
    if (i == 0)
        return 0;
    const long long k = static_cast<long long>((i + 1) / 2);
    return (i % 2 == 1) ? Int(k) : Int(-k);
}

class KroneckerSearch {
public:
    KroneckerSearch(const ZPoly& g, std::size_t m) : g_(g), m_(m) {}

    /// A divisor of g of degree exactly m with positive leading coefficient, if any.
    std::optional<ZPoly> run()
    {
        choose_points();
        if (points_.size() < m_ + 1)
            return std::nullopt;
        rows_.assign(m_ + 1, {});
        newton_.assign(m_ + 1, 0);
        return descend(0);
    }

private:
    void choose_points()
    {
        // Pool of the first 2*deg+3 points; pick the m+1 with the fewest divisors.
        struct Candidate {
            Int t;
            std::vector<Int> divs;
            std::size_t order;
        };
        std::vector<Candidate> pool;
        const std::size_t pool_size = 2 * g_.degree() + 3;
        for (std::size_t i = 0; i < pool_size; ++i) {
            Int t = kronecker_point(i);
            Int v = g_.eval(t);
            if (v == 0)
                continue;
            pool.push_back({t, divisors(v), i});
        }
        std::stable_sort(pool.begin(), pool.end(),
                         [](const Candidate& a, const Candidate& b) { return a.divs.size() < b.divs.size(); });
        if (pool.size() > m_ + 1)
            pool.resize(m_ + 1);
        for (auto& c : pool) {
            points_.push_back(c.t);
            divs_.push_back(std::move(c.divs));
        }
    }

    std::optional<ZPoly> descend(std::size_t k)
    {
        const auto& ds = divs_[k];
        for (const Int& d : ds) {
            for (int s : {1, -1}) {
                // h and -h are both divisors; fix the sign at the first node.
                if (k == 0 && s < 0)
                    continue;
                Int v = s * d;
                if (!extend(k, v))
                    continue;
                if (k == m_) {
                    if (auto h = finish())
                        return h;
                } else if (auto h = descend(k + 1)) {
                    return h;
                }
            }
        }
        return std::nullopt;
    }

    /// Appends value v at node k; false if a divided difference is not integral.
    bool extend(std::size_t k, const Int& v)
    {
        std::vector<Int>& row = rows_[k];
        row.assign(k + 1, 0);
        row[k] = v;
        for (std::size_t i = k; i-- > 0;) {
            Int num = row[i + 1] - rows_[k - 1][i];
            Int den = points_[k] - points_[i];
            if (num % den != 0)
                return false;
            row[i] = num / den;
        }
        newton_[k] = row[0];
        if (k == m_) {
            const Int& lead = newton_[m_];
            if (lead == 0 || g_.leading() % lead != 0)
                return false;
        }
        return true;
    }

    std::optional<ZPoly> finish()
    {
        ZPoly h;
        ZPoly basis = ZPoly::constant(1);
        for (std::size_t i = 0; i <= m_; ++i) {
            h += newton_[i] * basis;
            basis *= ZPoly{-points_[i], 1};
        }
        if (h.degree() != m_)
            return std::nullopt;
        if (h.leading() < 0)
            h = -h;
        if (h.constant_term() == 0 ? g_.constant_term() != 0 : g_.constant_term() % h.constant_term() != 0)
            return std::nullopt;
        if (divide_exact(g_, h))
            return h;
        return std::nullopt;
    }

    const ZPoly& g_;
    std::size_t m_;
    std::vector<Int> points_;
    std::vector<std::vector<Int>> divs_;
    std::vector<std::vector<Int>> rows_;
    std::vector<Int> newton_;
};

/// Factors a primitive g with positive leading coefficient into irreducibles.
inline void kronecker_split(const ZPoly& g, std::vector<ZPoly>& out)
{
    if (g.degree() == 0)
        return;
    if (g.degree() == 1) {
        out.push_back(g);
        return;
    }
    const std::size_t pool_size = 2 * g.degree() + 3;
    for (std::size_t i = 0; i < pool_size; ++i) {
        Int t = kronecker_point(i);
        if (g.eval(t) == 0) {
            ZPoly linear{-t, 1};
            out.push_back(linear);
            kronecker_split(*divide_exact(g, linear), out);
            return;
        }
    }
    for (std::size_t m = 1; m <= g.degree() / 2; ++m) {
        if (auto h = KroneckerSearch(g, m).run()) {
            kronecker_split(*h, out);
            kronecker_split(*divide_exact(g, *h), out);
            return;
        }
    }
    out.push_back(g);
}

} // namespace detail

inline ZFactorization kronecker_factor(const ZPoly& f, const KroneckerLimits& limits = {})
{
    if (f.is_zero())
        throw domain_error("kronecker_factor: zero polynomial");
    if (f.degree() > limits.max_degree)
        throw resource_error("kronecker_factor: degree " + std::to_string(f.degree()) + " exceeds cap " +
                             std::to_string(limits.max_degree));
    for (const auto& c : f.coeffs())
        if (abs(c) > limits.max_coefficient)
            throw resource_error("kronecker_factor: coefficient exceeds cap");

    ZFactorization r;
    r.sign = f.leading() < 0 ? -1 : 1;
    Int c = content(f);
    if (c != 1)
        r.content_primes = factor_int(c).prime_powers;
    detail::kronecker_split(primitive_part(f), r.factors);
    std::sort(r.factors.begin(), r.factors.end());
    return r;
}

/// A prime p certifying irreducibility of the primitive part by Eisenstein's criterion.
inline std::optional<Int> eisenstein_prime(const ZPoly& f)
{
    if (f.degree() == 0)
        return std::nullopt;
    ZPoly g = primitive_part(f);
    Int lower = 0;
    for (std::size_t i = 0; i < g.degree(); ++i)
        lower = gcd(lower, g[i]);
    if (lower == 0 || abs(lower) == 1)
        return std::nullopt;
    if (abs(lower) > pow(Int(10), 30))
        return std::nullopt;
    for (const auto& [p, e] : factor_int(lower).prime_powers) {
        if (g.leading() % p != 0 && g.constant_term() % (p * p) != 0)
            return p;
    }
    return std::nullopt;
}

/// Irreducibility of the primitive part of f in Z[x].
inline bool is_irreducible_z(const ZPoly& f, const KroneckerLimits& limits = {})
{
    if (f.degree() == 0)
        throw domain_error("is_irreducible_z: constant polynomial");
    if (eisenstein_prime(f))
        return true;
    return kronecker_factor(primitive_part(f), limits).factors.size() == 1;
}

/// Exponent vectors over primes and canonical irreducibles.
struct QuotientCoords {
    std::map<Int, long long> prime_exponents;
    std::map<ZPoly, long long> irreducible_exponents;

    bool is_zero() const { return prime_exponents.empty() && irreducible_exponents.empty(); }

    friend QuotientCoords operator+(QuotientCoords a, const QuotientCoords& b)
    {
        for (const auto& [p, e] : b.prime_exponents)
            if ((a.prime_exponents[p] += e) == 0)
                a.prime_exponents.erase(p);
        for (const auto& [q, e] : b.irreducible_exponents)
            if ((a.irreducible_exponents[q] += e) == 0)
                a.irreducible_exponents.erase(q);
        return a;
    }

    friend bool operator==(const QuotientCoords&, const QuotientCoords&) = default;
};

inline QuotientCoords psi_coords(const NNPoly& f, const KroneckerLimits& limits = {})
{
    QuotientCoords r;
    ZFactorization fac = kronecker_factor(f.z(), limits);
    for (const auto& [p, e] : fac.content_primes)
        r.prime_exponents[p] += e;
    for (const auto& q : fac.factors)
        ++r.irreducible_exponents[q];
    return r;
}

/// Multiplicity of the irreducible lambda in the Z[x]-factorization of f.
inline std::size_t v_lambda(const NNPoly& f, const ZPoly& lambda, const KroneckerLimits& limits = {})
{
    if (lambda.degree() == 0 || lambda.leading() < 0 || content(lambda) != 1 || !is_irreducible_z(lambda, limits))
        throw domain_error("v_lambda: lambda must be irreducible, primitive, with positive leading coefficient");
    std::size_t k = 0;
    ZPoly rest = f.z();
    while (auto q = divide_exact(rest, lambda)) {
        rest = std::move(*q);
        ++k;
    }
    return k;
}

} // namespace nnpoly
