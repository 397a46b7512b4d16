/**
 * @file poset.hpp
 * @brief Finite posets with products and disjoint unions, isomorphism and
 *        automorphism counting by refinement plus backtracking, and the
 *        failure of Krull-Schmidt for finite posets read off the identity
 *        (x^3+1)(x^2+x+1) = (x+1)(x^4+x^2+1).
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "poly.hpp"

namespace nnpoly {

/// Elements 0..size-1 with a reflexive, antisymmetric, transitive relation.
class FinPoset {
public:
    FinPoset() : FinPoset(1) {}

    /// The antichain on n elements.
    explicit FinPoset(std::size_t n) : n_(n), le_(n * n, 0)
    {
        for (std::size_t i = 0; i < n; ++i)
            le_[i * n + i] = 1;
    }

    /// From a full relation matrix (row-major); validated.
    static FinPoset from_relation(std::size_t n, std::vector<std::uint8_t> le)
    {
        if (le.size() != n * n)
            throw domain_error("FinPoset: relation matrix has the wrong size");
        FinPoset p;
        p.n_ = n;
        p.le_ = std::move(le);
        p.validate();
        return p;
    }

    /// From cover pairs (i below j); the reflexive-transitive closure is taken.
    static FinPoset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    {
        FinPoset p(n);
        for (const auto& [i, j] : covers) {
            if (i >= n || j >= n)
                throw domain_error("FinPoset: cover index out of range");
            p.le_[i * n + j] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (p.le_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (p.le_[k * n + j])
                            p.le_[i * n + j] = 1;
        p.validate();
        return p;
    }

    std::size_t size() const noexcept { return n_; }
    bool le(std::size_t i, std::size_t j) const { return le_[i * n_ + j] != 0; }
    bool lt(std::size_t i, std::size_t j) const { return i != j && le(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return le(i, j) || le(j, i); }

    /// i is covered by j: i < j with nothing strictly between.
    bool covered_by(std::size_t i, std::size_t j) const
    {
        if (!lt(i, j))
            return false;
        for (std::size_t k = 0; k < n_; ++k)
            if (lt(i, k) && lt(k, j))
                return false;
        return true;
    }

    std::vector<std::pair<std::size_t, std::size_t>> covers() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (covered_by(i, j))
                    out.emplace_back(i, j);
        return out;
    }

    /// Number of connected components of the comparability graph.
    std::size_t components() const
    {
        std::vector<std::size_t> parent(n_);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        std::size_t count = n_;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (comparable(i, j)) {
                    auto a = find(i), b = find(j);
                    if (a != b) {
                        parent[a] = b;
                        --count;
                    }
                }
        return count;
    }

    bool connected() const { return n_ > 0 && components() == 1; }

    /// Returns the poset with element i renamed to perm[i].
    FinPoset relabel(const std::vector<std::size_t>& perm) const
    {
        std::vector<std::uint8_t> le(n_ * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                le[perm[i] * n_ + perm[j]] = le_[i * n_ + j];
        return from_relation(n_, std::move(le));
    }

private:
    void validate() const
    {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!le(i, i))
                throw domain_error("FinPoset: relation is not reflexive");
            for (std::size_t j = 0; j < n_; ++j) {
                if (i != j && le(i, j) && le(j, i))
                    throw domain_error("FinPoset: relation is not antisymmetric");
                if (le(i, j))
                    for (std::size_t k = 0; k < n_; ++k)
                        if (le(j, k) && !le(i, k))
                            throw domain_error("FinPoset: relation is not transitive");
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint8_t> le_;
};

/// L = {0 < 1}.
inline FinPoset chain_L() { return FinPoset::from_covers(2, {{0, 1}}); }

/// Componentwise order on P x Q; (i, j) has index i * |Q| + j.
inline FinPoset product(const FinPoset& p, const FinPoset& q)
{
    const std::size_t n = p.size() * q.size();
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            le[a * n + b] = p.le(a / q.size(), b / q.size()) && q.le(a % q.size(), b % q.size());
    return FinPoset::from_relation(n, std::move(le));
}

/// P^n, with P^0 the one-element poset.
inline FinPoset power(const FinPoset& p, std::size_t n)
{
    FinPoset r(1);
    for (std::size_t i = 0; i < n; ++i)
        r = product(r, p);
    return r;
}

/// Disjoint union, summands laid out consecutively.
inline FinPoset coproduct(const std::vector<FinPoset>& parts)
{
    std::size_t n = 0;
    for (const auto& p : parts)
        n += p.size();
    std::vector<std::uint8_t> le(n * n, 0);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                le[(off + i) * n + off + j] = p.le(i, j);
        off += p.size();
    }
    return FinPoset::from_relation(n, std::move(le));
}

namespace detail {

/// Joint colour refinement of two posets by up/down neighbourhoods.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const FinPoset& p,
                                                                                   const FinPoset& q)
{
    auto initial = [](const FinPoset& s) {
        std::vector<std::vector<std::size_t>> sig(s.size());
        std::vector<std::size_t> level(s.size(), 0);
        // Longest chain below each element; elements sorted by number of predecessors.
        std::vector<std::size_t> order(s.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<std::size_t> below(s.size(), 0), above(s.size(), 0), cov_dn(s.size(), 0), cov_up(s.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s.lt(j, i))
                    ++below[i];
                if (s.lt(i, j))
                    ++above[i];
                if (s.covered_by(j, i))
                    ++cov_dn[i];
                if (s.covered_by(i, j))
                    ++cov_up[i];
            }
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
        for (std::size_t i : order)
            for (std::size_t j = 0; j < s.size(); ++j)
                if (s.lt(j, i))
                    level[i] = std::max(level[i], level[j] + 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            sig[i] = {below[i], above[i], cov_dn[i], cov_up[i], level[i]};
        return sig;
    };

    auto sp = initial(p);
    auto sq = initial(q);
    std::vector<std::size_t> cp(p.size()), cq(q.size());
    std::size_t classes = 0;
    for (int round = 0;; ++round) {
        std::map<std::vector<std::size_t>, std::size_t> dict;
        for (const auto& s : sp)
            dict.emplace(s, 0);
        for (const auto& s : sq)
            dict.emplace(s, 0);
        std::size_t id = 0;
        for (auto& [k, v] : dict)
            v = id++;
        for (std::size_t i = 0; i < p.size(); ++i)
            cp[i] = dict[sp[i]];
        for (std::size_t i = 0; i < q.size(); ++i)
            cq[i] = dict[sq[i]];
        if (dict.size() == classes || round > 64)
            break;
        classes = dict.size();
        auto next = [](const FinPoset& s, const std::vector<std::size_t>& col) {
            std::vector<std::vector<std::size_t>> sig(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::size_t> dn, up;
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (s.lt(j, i))
                        dn.push_back(col[j]);
                    if (s.lt(i, j))
                        up.push_back(col[j]);
                }
                std::sort(dn.begin(), dn.end());
                std::sort(up.begin(), up.end());
                sig[i] = {col[i], dn.size()};
                sig[i].insert(sig[i].end(), dn.begin(), dn.end());
                sig[i].push_back(up.size());
                sig[i].insert(sig[i].end(), up.begin(), up.end());
            }
            return sig;
        };
        sp = next(p, cp);
        sq = next(q, cq);
    }
    return {cp, cq};
}

/// Backtracking over colour-preserving, order-preserving bijections.
class IsoSearch {
public:
    IsoSearch(const FinPoset& p, const FinPoset& q, std::uint64_t limit) : p_(p), q_(q), limit_(limit) {}

    /// Number of isomorphisms found, stopping at limit.
    std::uint64_t run()
    {
        const std::size_t n = p_.size();
        if (n != q_.size())
            return 0;
        std::tie(cp_, cq_) = refine_colors(p_, q_);
        std::vector<std::size_t> hp(n + 1, 0), hq(n + 1, 0);
        std::map<std::size_t, std::size_t> histp, histq;
        for (auto c : cp_)
            ++histp[c];
        for (auto c : cq_)
            ++histq[c];
        if (histp != histq)
            return 0;
        // Visit order: smallest colour class first, then elements comparable to visited ones.
        std::vector<bool> seen(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n;
            std::size_t best_score = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (seen[i])
                    continue;
                std::size_t links = 0;
                for (std::size_t v : order_)
                    links += p_.comparable(i, v);
                const std::size_t score = links * (n + 1) + (n - histp[cp_[i]]);
                if (best == n || score > best_score) {
                    best = i;
                    best_score = score;
                }
            }
            seen[best] = true;
            order_.push_back(best);
        }
        map_.assign(n, n);
        used_.assign(n, false);
        count_ = 0;
        extend(0);
        return count_;
    }

private:
    void extend(std::size_t depth)
    {
        if (count_ >= limit_)
            return;
        const std::size_t n = p_.size();
        if (depth == n) {
            ++count_;
            return;
        }
        const std::size_t a = order_[depth];
        for (std::size_t b = 0; b < n; ++b) {
            if (used_[b] || cq_[b] != cp_[a])
                continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t a2 = order_[d], b2 = map_[a2];
                ok = p_.le(a, a2) == q_.le(b, b2) && p_.le(a2, a) == q_.le(b2, b);
            }
            if (!ok)
                continue;
            map_[a] = b;
            used_[b] = true;
            extend(depth + 1);
            used_[b] = false;
            map_[a] = n;
            if (count_ >= limit_)
                return;
        }
    }

    const FinPoset& p_;
    const FinPoset& q_;
    std::uint64_t limit_;
    std::vector<std::size_t> cp_, cq_, order_, map_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

inline void check_poset_cap(const FinPoset& p, std::size_t cap)
{
    if (p.size() > cap)
        throw resource_error("poset of size " + std::to_string(p.size()) + " exceeds cap " + std::to_string(cap));
}

} // namespace detail

inline bool is_isomorphic(const FinPoset& p, const FinPoset& q, std::size_t size_cap = 256)
{
    detail::check_poset_cap(p, size_cap);
    detail::check_poset_cap(q, size_cap);
    return detail::IsoSearch(p, q, 1).run() == 1;
}

/// Number of order automorphisms; resource_error past count_cap.
inline std::uint64_t aut_count(const FinPoset& p, std::size_t size_cap = 256, std::uint64_t count_cap = 10'000'000)
{
    detail::check_poset_cap(p, size_cap);
    const std::uint64_t n = detail::IsoSearch(p, p, count_cap + 1).run();
    if (n > count_cap)
        throw resource_error("aut_count: more than " + std::to_string(count_cap) + " automorphisms");
    return n;
}

/// L^(e_1) u ... u L^(e_k) for the exponents of the non-zero terms of f, counted with multiplicity.
inline FinPoset poset_of(const NNPoly& f)
{
    std::vector<FinPoset> parts;
    const FinPoset L = chain_L();
    for (std::size_t e = 0; e <= f.degree(); ++e) {
        const Int& c = f.coeffs()[e];
        if (c > 64)
            throw resource_error("poset_of: coefficient too large");
        for (Int k = 0; k < c; ++k)
            parts.push_back(power(L, e));
    }
    return coproduct(parts);
}

struct KsReport {
    /// left: (L^3 u 1) x (L^2 u L u 1), right: (L u 1) x (L^4 u L^2 u 1).
    std::vector<NNPoly> factor_polys; ///< x^3+1, x^2+x+1, x+1, x^4+x^2+1
    std::vector<std::size_t> factor_sizes;
    std::vector<std::size_t> factor_components;
    std::vector<Int> factor_values_at_2;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    bool products_isomorphic = false;
    bool polynomial_identity = false; ///< (x^3+1)(x^2+x+1) == (x+1)(x^4+x^2+1)
    bool sizes_match_evaluation = false;
    /// (i, j, isomorphic) for the six pairs of factors.
    std::vector<std::tuple<std::size_t, std::size_t, bool>> factor_pairs;

    bool factor_pairs_all_distinct() const
    {
        return std::none_of(factor_pairs.begin(), factor_pairs.end(), [](const auto& t) { return std::get<2>(t); });
    }
};

inline KsReport ks_counterexample_report()
{
    KsReport r;
    r.factor_polys = {NNPoly{1, 0, 0, 1}, NNPoly{1, 1, 1}, NNPoly{1, 1}, NNPoly{1, 0, 1, 0, 1}};
    std::vector<FinPoset> factors;
    for (const auto& f : r.factor_polys) {
        factors.push_back(poset_of(f));
        r.factor_sizes.push_back(factors.back().size());
        r.factor_components.push_back(factors.back().components());
        r.factor_values_at_2.push_back(f.eval(Int(2)));
    }
    const FinPoset left = product(factors[0], factors[1]);
    const FinPoset right = product(factors[2], factors[3]);
    r.left_size = left.size();
    r.right_size = right.size();
    r.products_isomorphic = is_isomorphic(left, right);
    r.polynomial_identity = r.factor_polys[0] * r.factor_polys[1] == r.factor_polys[2] * r.factor_polys[3];
    r.sizes_match_evaluation = true;
    for (std::size_t i = 0; i < factors.size(); ++i)
        r.sizes_match_evaluation = r.sizes_match_evaluation && Int(r.factor_sizes[i]) == r.factor_values_at_2[i];
    r.sizes_match_evaluation = r.sizes_match_evaluation &&
                               Int(r.left_size) == (r.factor_polys[0] * r.factor_polys[1]).eval(Int(2)) &&
                               Int(r.right_size) == (r.factor_polys[2] * r.factor_polys[3]).eval(Int(2));
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            r.factor_pairs.emplace_back(i, j, is_isomorphic(factors[i], factors[j]));
    return r;
}

/// {"size": n, "covers": [[i, j], ...]} with i covered by j.
inline nlohmann::json to_json(const FinPoset& p)
{
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [i, j] : p.covers())
        covers.push_back({i, j});
    return {{"size", p.size()}, {"covers", covers}};
}

inline FinPoset poset_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("size") || !j["size"].is_number_unsigned())
        throw parse_error("poset JSON must be an object with a non-negative integer \"size\"");
    const std::size_t n = j["size"].get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array())
            throw parse_error("poset JSON: \"covers\" must be an array");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
                throw parse_error("poset JSON: each cover must be a pair of indices");
            covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
        }
    }
    try {
        return FinPoset::from_covers(n, covers);
    } catch (const domain_error& e) {
        throw parse_error(std::string("poset JSON: ") + e.what());
    }
}

} // namespace nnpoly
