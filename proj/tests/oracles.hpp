#pragma once

// Independent brute-force references on plain int64 coefficient vectors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>; // ascending, no trailing zeros

inline long long at_one(const Poly& p) { return std::accumulate(p.begin(), p.end(), 0LL); }

/// f / g when the division is exact with a non-negative quotient.
inline std::optional<Poly> nn_quotient(const Poly& f, const Poly& g)
{
    if (g.size() > f.size())
        return std::nullopt;
    Poly r = f;
    Poly q(f.size() - g.size() + 1, 0);
    const long long lg = g.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        const long long top = r[i + g.size() - 1];
        if (top % lg != 0)
            return std::nullopt;
        const long long c = top / lg;
        if (c < 0)
            return std::nullopt;
        q[i] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] -= c * g[j];
    }
    if (std::any_of(r.begin(), r.end(), [](long long v) { return v != 0; }))
        return std::nullopt;
    return q;
}

/// Odometer over all coefficient vectors of length len with entries in [0, hi].
template <typename F>
void for_each_vector(std::size_t len, long long hi, F&& fn)
{
    Poly v(len, 0);
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < len && v[i] == hi)
            v[i++] = 0;
        if (i == len)
            return;
        ++v[i];
    }
}

/// Members of P0 of degree d with coefficients in [0, hi]: f(0) > 0, gcd 1, leading > 0.
template <typename F>
void for_each_p0(std::size_t d, long long hi, F&& fn)
{
    for_each_vector(d + 1, hi, [&](const Poly& v) {
        if (v.front() == 0 || v.back() == 0)
            return;
        long long g = 0;
        for (long long c : v)
            g = std::gcd(g, c);
        if (g == 1)
            fn(v);
    });
}

/// All unordered {g, h} (g <= h lexicographically) with g h = f, found by
/// trying every non-constant g in P0 with deg g < deg f and coefficients <= alpha(f).
inline std::vector<std::pair<Poly, Poly>> brute_force_pairs(const Poly& f)
{
    std::vector<std::pair<Poly, Poly>> out;
    const long long alpha = *std::max_element(f.begin(), f.end());
    const long long f1 = at_one(f);
    for (std::size_t d = 1; d + 1 <= f.size() - 1; ++d)
        for_each_vector(d + 1, alpha, [&](const Poly& g) {
            if (g.front() == 0 || g.back() == 0 || f1 % at_one(g) != 0)
                return;
            if (auto h = nn_quotient(f, g); h && g <= *h)
                out.emplace_back(g, *h);
        });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace oracle
