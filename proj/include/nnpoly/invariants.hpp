/**
 * @file invariants.hpp
 * @brief Factorization invariants of elements of N0[x]* (lengths,
 *        elasticity, distances, catenary degree) and the correspondence
 *        between ordered factorizations and chains of principal ideals.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "nn_factor.hpp"

namespace nnpoly {

using LengthSet = std::set<std::size_t>;

inline LengthSet lengths(std::span<const Factorization> zs)
{
    LengthSet out;
    for (const auto& z : zs)
        out.insert(z.length());
    return out;
}

inline LengthSet lengths(const NNPoly& f)
{
    const auto zs = atom_factorizations(f);
    return lengths(zs);
}

/// max L / min L as an exact reduced fraction.
inline Rational elasticity(const LengthSet& ls)
{
    if (ls.empty())
        throw domain_error("elasticity: empty set of lengths");
    return Rational(Int(*ls.rbegin()), Int(*ls.begin()));
}

inline Rational elasticity(const NNPoly& f) { return elasticity(lengths(f)); }

/// Gaps between consecutive lengths.
inline std::set<std::size_t> delta_set(const LengthSet& ls)
{
    std::set<std::size_t> out;
    for (auto it = ls.begin(); it != ls.end() && std::next(it) != ls.end(); ++it)
        out.insert(*std::next(it) - *it);
    return out;
}

inline std::set<std::size_t> delta_set(const NNPoly& f) { return delta_set(lengths(f)); }

/// max(|z1 / gcd|, |z2 / gcd|) for two factorizations of the same element.
inline std::size_t distance(const Factorization& z1, const Factorization& z2)
{
    if (z1.value() != z2.value())
        throw domain_error("distance: factorizations of different elements");
    std::vector<NNPoly> common;
    std::set_intersection(z1.atoms.begin(), z1.atoms.end(), z2.atoms.begin(), z2.atoms.end(),
                          std::back_inserter(common));
    return std::max(z1.length(), z2.length()) - common.size();
}

/**
 * Smallest N such that any two factorizations are joined by a chain with
 * consecutive distances <= N: the largest edge of a minimum bottleneck
 * spanning tree of the complete distance graph on Z(f).
 */
inline std::size_t catenary_degree(std::span<const Factorization> zs, std::size_t max_factorizations = 10'000)
{
    const std::size_t n = zs.size();
    if (n <= 1)
        return 0;
    if (n > max_factorizations)
        throw resource_error("catenary_degree: |Z(f)| = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(max_factorizations));
    // Prim's algorithm; distance() is recomputed lazily per edge.
    auto dist = [&](std::size_t i, std::size_t j) {
        std::vector<NNPoly> common;
        std::set_intersection(zs[i].atoms.begin(), zs[i].atoms.end(), zs[j].atoms.begin(), zs[j].atoms.end(),
                              std::back_inserter(common));
        return std::max(zs[i].length(), zs[j].length()) - common.size();
    };
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(n, inf);
    std::vector<bool> in_tree(n, false);
    best[0] = 0;
    std::size_t bottleneck = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = inf;
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v] && (u == inf || best[v] < best[u]))
                u = v;
        in_tree[u] = true;
        bottleneck = std::max(bottleneck, best[u]);
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v])
                best[v] = std::min(best[v], dist(u, v));
    }
    return bottleneck;
}

inline std::size_t catenary_degree(const NNPoly& f, std::size_t max_factorizations = 10'000)
{
    const auto zs = atom_factorizations(f);
    return catenary_degree(zs, max_factorizations);
}

/// g_{n,k} = (x+n)^n (x^2-x+1) (x+1)^k.
inline NNPoly g_polynomial(unsigned n, unsigned k)
{
    if (n == 0 || k == 0)
        throw domain_error("g_polynomial: n and k must be at least 1");
    ZPoly g = pow(ZPoly{Int(n), 1}, n) * ZPoly{1, -1, 1} * pow(ZPoly{1, 1}, k);
    auto nn = to_nn(g);
    if (!nn)
        throw error("g_polynomial: expansion has a negative coefficient");
    return *nn;
}

/// (x+n)^n (x^2-x+1), the atom inside g_{n,k}.
inline NNPoly g_atom(unsigned n)
{
    if (n == 0)
        throw domain_error("g_atom: n must be at least 1");
    auto nn = to_nn(pow(ZPoly{Int(n), 1}, n) * ZPoly{1, -1, 1});
    if (!nn)
        throw error("g_atom: expansion has a negative coefficient");
    return *nn;
}

using OrderedFactorization = std::vector<NNPoly>;

/// Principal-ideal chain (f) = (c_0) < (c_1) < ... < (c_n) = N0[x]*, by generators.
struct ChainOfIdeals {
    std::vector<NNPoly> generators;

    friend bool operator==(const ChainOfIdeals&, const ChainOfIdeals&) = default;
    friend auto operator<=>(const ChainOfIdeals& l, const ChainOfIdeals& r) { return l.generators <=> r.generators; }
};

namespace detail {

/// Non-unit divisors of f, each with its own non-unit divisors (indices into the list).
struct DivisorPoset {
    std::vector<NNPoly> elements;               // sorted, includes 1 and f
    std::vector<std::vector<std::size_t>> down; // proper divisors of elements[i]

    explicit DivisorPoset(const NNPoly& f) : elements(nn_divisors(f)), down(elements.size())
    {
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t j = 0; j < elements.size(); ++j)
                if (i != j && divides_N(elements[j], elements[i]))
                    down[i].push_back(j);
    }

    std::size_t index_of(const NNPoly& g) const
    {
        return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), g) - elements.begin());
    }
};

} // namespace detail

/// All ordered tuples of non-unit factors with product f.
inline std::vector<OrderedFactorization> ordered_factorizations(const NNPoly& f)
{
    if (f.is_one())
        throw domain_error("ordered_factorizations: 1 is the unit of N0[x]*");
    const detail::DivisorPoset poset(f);
    std::map<std::size_t, std::vector<OrderedFactorization>> memo;
    auto rec = [&](auto&& self, std::size_t i) -> const std::vector<OrderedFactorization>& {
        if (auto it = memo.find(i); it != memo.end())
            return it->second;
        std::vector<OrderedFactorization> out;
        const NNPoly& cur = poset.elements[i];
        out.push_back({cur});
        for (std::size_t j : poset.down[i]) {
            const NNPoly& first = poset.elements[j];
            if (first.is_one())
                continue;
            const NNPoly rest = *quotient_N(cur, first);
            for (const auto& tail : self(self, poset.index_of(rest))) {
                OrderedFactorization t{first};
                t.insert(t.end(), tail.begin(), tail.end());
                out.push_back(std::move(t));
            }
        }
        std::sort(out.begin(), out.end());
        return memo[i] = std::move(out);
    };
    return rec(rec, poset.index_of(f));
}

/// All strictly ascending chains of principal ideals from (f) to N0[x]*.
inline std::vector<ChainOfIdeals> chains(const NNPoly& f)
{
    if (f.is_one())
        throw domain_error("chains: 1 is the unit of N0[x]*");
    const detail::DivisorPoset poset(f);
    std::vector<ChainOfIdeals> out;
    std::vector<NNPoly> path;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        path.push_back(poset.elements[i]);
        if (poset.elements[i].is_one())
            out.push_back({path});
        else
            for (std::size_t j : poset.down[i])
                self(self, j);
        path.pop_back();
    };
    rec(rec, poset.index_of(f));
    std::sort(out.begin(), out.end());
    return out;
}

/// (a_1, ..., a_n) -> generators (a_1...a_n, a_1...a_{n-1}, ..., a_1, 1).
inline ChainOfIdeals chain_of(const OrderedFactorization& t)
{
    std::vector<NNPoly> prefix{NNPoly::one()};
    for (const auto& a : t)
        prefix.push_back(prefix.back() * a);
    return {std::vector<NNPoly>(prefix.rbegin(), prefix.rend())};
}

/// Inverse of chain_of: a_i = c_{n-i} / c_{n-i+1}.
inline OrderedFactorization tuple_of(const ChainOfIdeals& c)
{
    const auto& g = c.generators;
    OrderedFactorization t;
    for (std::size_t i = g.size() - 1; i-- > 0;)
        t.push_back(*quotient_N(g[i], g[i + 1]));
    return t;
}

struct ChainBijectionReport {
    std::size_t tuples = 0;
    std::size_t chains = 0;
    bool injective = false;
    bool onto = false;
    bool inverse_ok = false;

    bool ok() const { return tuples == chains && injective && onto && inverse_ok; }
};

/// Checks that chain_of is a bijection from ordered_factorizations(f) onto chains(f).
inline ChainBijectionReport verify_chain_bijection(const NNPoly& f)
{
    const auto ts = ordered_factorizations(f);
    const auto cs = chains(f);
    ChainBijectionReport r;
    r.tuples = ts.size();
    r.chains = cs.size();
    std::set<ChainOfIdeals> image;
    r.inverse_ok = true;
    for (const auto& t : ts) {
        ChainOfIdeals c = chain_of(t);
        r.inverse_ok = r.inverse_ok && tuple_of(c) == t;
        image.insert(std::move(c));
    }
    r.injective = image.size() == ts.size();
    r.onto = std::equal(image.begin(), image.end(), cs.begin(), cs.end());
    return r;
}

/// Generators of I_k = (x+1) u ... u (x+k), with the certificate that x+k is not in I_{k-1}.
struct IdealChainStep {
    std::vector<NNPoly> generators;
    bool strict = true;
};

inline std::vector<IdealChainStep> nonstationary_ideal_chain(std::size_t n)
{
    if (n == 0)
        throw domain_error("nonstationary_ideal_chain: n must be at least 1");
    std::vector<IdealChainStep> out;
    std::vector<NNPoly> gens;
    for (std::size_t k = 1; k <= n; ++k) {
        NNPoly next{Int(k), 1};
        IdealChainStep step;
        step.strict = std::none_of(gens.begin(), gens.end(), [&](const NNPoly& g) { return divides_N(g, next); });
        gens.push_back(next);
        step.generators = gens;
        out.push_back(std::move(step));
    }
    return out;
}

} // namespace nnpoly
