/**
 * @file nn_factor.hpp
 * @brief Divisibility and factorization in N0[x]*.
 *
 * N0[x]* = N x N x P0 (content, power of x, primitive part with non-zero
 * constant term), and the first two factors are free on the prime integers
 * and on x. All non-uniqueness lives in P0, where divisors are found by the
 * base-a scan: with a = alpha(f) + 1 every N0[x]-divisor g of f has
 * alpha(g) <= alpha(f) < a, so g is the base-a reading of the integer
 * divisor g(a) of b = f(a).
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "base_a.hpp"
#include "int_factor.hpp"
#include "poly.hpp"

namespace nnpoly {

/// g |_N f: f = g h with h in N0[x]*.
inline bool divides_N(const NNPoly& g, const NNPoly& f)
{
    auto q = divide_exact(f.z(), g.z());
    return q && is_nonneg(*q);
}

/// g |_Z f: f = g h with h in Z[x].
inline bool divides_Z(const ZPoly& g, const ZPoly& f) { return divide_exact(f, g).has_value(); }

/// Quotient f / g in N0[x]*, if g |_N f.
inline std::optional<NNPoly> quotient_N(const NNPoly& f, const NNPoly& g)
{
    auto q = divide_exact(f.z(), g.z());
    if (!q || !is_nonneg(*q))
        return std::nullopt;
    return NNPoly::unchecked(std::move(*q));
}

/// Unordered pair {g, h} with g h = f, stored with g <= h.
struct DivisorPair {
    NNPoly g;
    NNPoly h;

    friend bool operator==(const DivisorPair&, const DivisorPair&) = default;
    friend auto operator<=>(const DivisorPair&, const DivisorPair&) = default;
};

/// One unordered split b = d * e (d <= e) examined by the base-a scan.
struct SplitCandidate {
    Int d;
    Int e;
    std::size_t eta_d = 0;
    std::size_t eta_e = 0;
    bool eta_ok = false;
    std::optional<NNPoly> g;       ///< decode_base(a, d), when eta_ok
    std::optional<NNPoly> h;       ///< decode_base(a, e), when eta_ok
    std::optional<NNPoly> product; ///< g * h, when eta_ok
    bool accepted = false;
};

struct BaseATrace {
    Int a;
    Int b;
    std::size_t eta_b = 0;
    std::vector<SplitCandidate> candidates;
    std::vector<DivisorPair> pairs;
};

namespace detail {

inline void require_p0_nonconstant(const NNPoly& f, const char* who)
{
    if (f.degree() == 0 || !in_p0(f))
        throw domain_error(std::string(who) + ": argument must be primitive, non-constant, with non-zero constant term");
}

inline std::vector<DivisorPair> base_a_scan(const NNPoly& f, BaseATrace* trace)
{
    require_p0_nonconstant(f, "divisor_pairs");
    const Int a = f.alpha() + 1;
    const Int b = f.eval(a);
    const std::size_t n = f.degree();
    if (trace) {
        trace->a = a;
        trace->b = b;
        trace->eta_b = eta(a, b);
    }

    std::set<DivisorPair> found;
    for (const Int& d : divisors(b)) {
        if (d == 1 || d == b)
            continue;
        const Int e = b / d;
        const bool record = trace && d <= e;
        const std::size_t eta_d = eta(a, d);
        const bool in_range = eta_d >= 1 && eta_d + 1 <= n;
        const std::size_t eta_e = (in_range || record) ? eta(a, e) : 0;
        SplitCandidate cand;
        if (record) {
            cand.d = d;
            cand.e = e;
            cand.eta_d = eta_d;
            cand.eta_e = eta_e;
        }
        if (in_range && eta_d + eta_e == n) {
            NNPoly g = decode_base(a, d);
            NNPoly h = decode_base(a, e);
            NNPoly prod = g * h;
            // alpha(g), alpha(h) < a holds by construction of decode_base.
            const bool ok = prod == f;
            if (record) {
                cand.eta_ok = true;
                cand.g = g;
                cand.h = h;
                cand.product = prod;
                cand.accepted = ok;
            }
            if (ok) {
                if (h < g)
                    std::swap(g, h);
                found.insert({std::move(g), std::move(h)});
            }
        }
        if (record)
            trace->candidates.push_back(std::move(cand));
    }
    std::vector<DivisorPair> out(found.begin(), found.end());
    if (trace)
        trace->pairs = out;
    return out;
}

} // namespace detail

/// Every unordered {g, h}, g, h != 1, with g h = f, for f in P0 of degree >= 1.
inline std::vector<DivisorPair> divisor_pairs(const NNPoly& f) { return detail::base_a_scan(f, nullptr); }

/// divisor_pairs together with the per-split record of the base-a scan.
inline BaseATrace trace_divisor_pairs(const NNPoly& f)
{
    BaseATrace t;
    detail::base_a_scan(f, &t);
    return t;
}

/// The degree condition on a split b = b_1 ... b_k: sum of eta(a, b_j) equals eta(a, b).
inline bool eta_additive(const Int& a, const Int& b, std::span<const Int> parts)
{
    Int prod = 1;
    std::size_t sum = 0;
    for (const Int& p : parts) {
        if (p <= 1)
            return false;
        prod *= p;
        sum += eta(a, p);
    }
    return prod == b && sum == eta(a, b);
}

/// All g with g |_N f, sorted, including 1 and f.
inline std::vector<NNPoly> nn_divisors(const NNPoly& f)
{
    const CanonicalDecomposition dec = canonical_decompose(f);
    std::vector<NNPoly> core_divs{NNPoly::one()};
    if (!dec.core.is_one()) {
        core_divs.push_back(dec.core);
        for (const auto& [g, h] : divisor_pairs(dec.core)) {
            core_divs.push_back(g);
            core_divs.push_back(h);
        }
    }
    std::vector<NNPoly> out;
    for (const Int& c : divisors(dec.content))
        for (std::size_t e = 0; e <= dec.x_exponent; ++e)
            for (const auto& g : core_divs)
                out.push_back(NNPoly::monomial(c, e) * g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Atoms: prime integers, x, and non-constant members of P0 without a proper split.
inline bool is_atom(const NNPoly& f)
{
    if (f.is_one())
        throw domain_error("is_atom: 1 is the unit of N0[x]*");
    const CanonicalDecomposition dec = canonical_decompose(f);
    const bool has_content = dec.content != 1;
    const bool has_x = dec.x_exponent != 0;
    const bool has_core = !dec.core.is_one();
    if (has_content + has_x + has_core != 1)
        return false;
    if (has_content)
        return is_prime(dec.content);
    if (has_x)
        return dec.x_exponent == 1;
    return divisor_pairs(dec.core).empty();
}

/// A factorization: a sorted multiset of atoms.
struct Factorization {
    std::vector<NNPoly> atoms;

    Factorization() = default;
    explicit Factorization(std::vector<NNPoly> a) : atoms(std::move(a)) { std::sort(atoms.begin(), atoms.end()); }

    std::size_t length() const noexcept { return atoms.size(); }
    NNPoly value() const { return product(atoms); }

    friend bool operator==(const Factorization&, const Factorization&) = default;
    friend auto operator<=>(const Factorization& l, const Factorization& r) { return l.atoms <=> r.atoms; }
};

/// Multiset union of two sorted atom lists.
inline Factorization merge(const Factorization& l, const Factorization& r)
{
    Factorization out;
    out.atoms.reserve(l.atoms.size() + r.atoms.size());
    std::merge(l.atoms.begin(), l.atoms.end(), r.atoms.begin(), r.atoms.end(), std::back_inserter(out.atoms));
    return out;
}

/**
 * Computes Z(f), the set of all factorizations of f into atoms, by recursive
 * expansion over divisor_pairs. Results for P0 cores are memoized in a
 * bounded LRU cache; the engine is safe to share between threads.
 */
class FactorizationEngine {
public:
    explicit FactorizationEngine(std::size_t cache_capacity = 100'000) : capacity_(cache_capacity) {}

    /// Sorted, duplicate-free Z(f).
    std::vector<Factorization> atom_factorizations(const NNPoly& f)
    {
        if (f.is_one())
            throw domain_error("atom_factorizations: 1 is the unit of N0[x]*");
        const CanonicalDecomposition dec = canonical_decompose(f);
        Factorization free_part;
        if (dec.content != 1)
            for (const auto& [p, e] : factor_int(dec.content).prime_powers)
                free_part.atoms.insert(free_part.atoms.end(), e, NNPoly::constant(p));
        free_part.atoms.insert(free_part.atoms.end(), dec.x_exponent, NNPoly::x());
        std::sort(free_part.atoms.begin(), free_part.atoms.end());
        if (dec.core.is_one())
            return {free_part};
        std::vector<Factorization> out;
        for (const auto& z : core_factorizations(dec.core))
            out.push_back(merge(free_part, z));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t cache_size() const
    {
        std::lock_guard lock(mutex_);
        return index_.size();
    }

    std::size_t capacity() const noexcept { return capacity_; }

private:
    using Value = std::vector<Factorization>;

    static std::string key_of(const NNPoly& f)
    {
        std::string k;
        for (const auto& c : f.coeffs()) {
            k += c.str();
            k += ',';
        }
        return k;
    }

    std::optional<Value> lookup(const std::string& key)
    {
        std::lock_guard lock(mutex_);
        auto it = index_.find(key);
        if (it == index_.end())
            return std::nullopt;
        lru_.splice(lru_.begin(), lru_, it->second);
        return it->second->second;
    }

    void store(const std::string& key, const Value& value)
    {
        if (capacity_ == 0)
            return;
        std::lock_guard lock(mutex_);
        if (auto it = index_.find(key); it != index_.end()) {
            it->second->second = value;
            lru_.splice(lru_.begin(), lru_, it->second);
            return;
        }
        lru_.emplace_front(key, value);
        index_[key] = lru_.begin();
        if (index_.size() > capacity_) {
            index_.erase(lru_.back().first);
            lru_.pop_back();
        }
    }

    Value core_factorizations(const NNPoly& core)
    {
        const std::string key = key_of(core);
        if (auto hit = lookup(key))
            return std::move(*hit);
        const auto pairs = divisor_pairs(core);
        Value result;
        if (pairs.empty()) {
            result.push_back(Factorization({core}));
        } else {
            std::set<Factorization> acc;
            for (const auto& [g, h] : pairs) {
                const Value zg = core_factorizations(g);
                const Value zh = core_factorizations(h);
                for (const auto& l : zg)
                    for (const auto& r : zh)
                        acc.insert(merge(l, r));
            }
            result.assign(acc.begin(), acc.end());
        }
        store(key, result);
        return result;
    }

    std::size_t capacity_;
    mutable std::mutex mutex_;
    std::list<std::pair<std::string, Value>> lru_;
    std::unordered_map<std::string, std::list<std::pair<std::string, Value>>::iterator> index_;
};

inline FactorizationEngine& default_engine()
{
    static FactorizationEngine engine;
    return engine;
}

/// Z(f) using the shared engine.
inline std::vector<Factorization> atom_factorizations(const NNPoly& f)
{
    return default_engine().atom_factorizations(f);
}

} // namespace nnpoly
