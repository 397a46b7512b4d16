/**
 * @file int_factor.hpp
 * @brief Certified factorization of integers.
 *
 * Trial division by the primes below 10^6, then Miller-Rabin (deterministic
 * base set below 2^64, Baillie-PSW above) and Brent's variant of Pollard rho
 * for the cofactor. Magnitudes above 10^30 raise resource_error.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace nnpoly {

struct IntFactorization {
    int sign = 1;
    std::map<Int, unsigned> prime_powers;

    Int value() const
    {
        Int v = sign;
        for (const auto& [p, e] : prime_powers)
            v *= pow(p, e);
        return v;
    }

    friend bool operator==(const IntFactorization&, const IntFactorization&) = default;
};

namespace detail {

inline constexpr std::uint32_t trial_division_limit = 1'000'000;
inline constexpr unsigned rho_iteration_cap = 1U << 26;

inline const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(trial_division_limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= trial_division_limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= trial_division_limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

inline const Int& factor_magnitude_cap()
{
    static const Int cap = pow(Int(10), 30);
    return cap;
}

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1U)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

inline bool miller_rabin_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // This base set is deterministic for every n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

inline u64 gcd_u64(u64 a, u64 b)
{
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 absdiff(u64 a, u64 b) { return a > b ? a - b : b - a; }

/// A non-trivial factor of the odd composite n (Brent's cycle detection).
inline u64 pollard_brent_u64(u64 n)
{
    unsigned iterations = 0;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
        const u64 m = 128;
        for (u64 r = 1; g == 1; r <<= 1U) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, absdiff(x, y), n);
                }
                g = gcd_u64(q, n);
                iterations += static_cast<unsigned>(std::min(m, r - k));
                if (iterations > rho_iteration_cap)
                    throw resource_error("factor_int: Pollard rho iteration cap exceeded");
            }
        }
        if (g == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = gcd_u64(absdiff(x, ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline Int mod(const Int& a, const Int& m)
{
    Int r = a % m;
    return r < 0 ? Int(r + m) : r;
}

inline int jacobi(Int a, Int n)
{
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const unsigned r = static_cast<unsigned>(n % 8);
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool miller_rabin_big(const Int& n, const Int& base)
{
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Int x = boost::multiprecision::powm(base, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

/// Strong Lucas probable-prime test with Selfridge parameters.
inline bool strong_lucas(const Int& n)
{
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n)
        return false;
    Int D = 5;
    while (true) {
        int j = jacobi(D, n);
        if (j == -1)
            break;
        if (j == 0 && abs(D) != n)
            return false;
        D = D > 0 ? Int(-(D + 2)) : Int(-D + 2);
    }
    const Int P = 1;
    const Int Q = (1 - D) / 4;
    Int d = n + 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Int U = 1, V = P, Qk = mod(Q, n);
    const Int Dm = mod(D, n);
    for (std::size_t bit = boost::multiprecision::msb(d); bit-- > 0;) {
        U = U * V % n;
        V = mod(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (boost::multiprecision::bit_test(d, static_cast<unsigned>(bit))) {
            Int u2 = P * U + V;
            Int v2 = Dm * U + P * V;
            if ((u2 & 1) != 0)
                u2 += n;
            if ((v2 & 1) != 0)
                v2 += n;
            U = mod(u2 >> 1, n);
            V = mod(v2 >> 1, n);
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        V = mod(V * V - 2 * Qk, n);
        if (V == 0)
            return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

inline Int pollard_brent_big(const Int& n)
{
    unsigned iterations = 0;
    for (Int c = 1;; ++c) {
        Int y = 2, x = 2, ys = 2, q = 1, g = 1;
        const unsigned m = 128;
        for (unsigned long r = 1; g == 1; r <<= 1U) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                const unsigned long steps = std::min<unsigned long>(m, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                iterations += static_cast<unsigned>(steps);
                if (iterations > rho_iteration_cap)
                    throw resource_error("factor_int: Pollard rho iteration cap exceeded");
            }
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void split_u64(u64 n, std::map<Int, unsigned>& out)
{
    if (n == 1)
        return;
    if (miller_rabin_u64(n)) {
        ++out[Int(n)];
        return;
    }
    u64 f = pollard_brent_u64(n);
    split_u64(f, out);
    split_u64(n / f, out);
}

inline void split_big(const Int& n, std::map<Int, unsigned>& out);

} // namespace detail

/// Primality: exact below 2^64, Baillie-PSW above.
inline bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    if (fits_u64(n))
        return detail::miller_rabin_u64(to_u64(n));
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U})
        if (n % p == 0)
            return false;
    return detail::miller_rabin_big(n, 2) && detail::strong_lucas(n);
}

inline void detail::split_big(const Int& n, std::map<Int, unsigned>& out)
{
    if (n == 1)
        return;
    if (fits_u64(n)) {
        split_u64(to_u64(n), out);
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int f = pollard_brent_big(n);
    split_big(f, out);
    split_big(n / f, out);
}

inline IntFactorization factor_int(const Int& n)
{
    if (n == 0)
        throw domain_error("factor_int: zero has no factorization");
    IntFactorization result;
    result.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    if (m > detail::factor_magnitude_cap())
        throw resource_error("factor_int: |n| exceeds 10^30");

    if (fits_u64(m)) {
        std::uint64_t v = to_u64(m);
        for (std::uint32_t p : detail::small_primes()) {
            if (std::uint64_t(p) * p > v)
                break;
            while (v % p == 0) {
                ++result.prime_powers[Int(p)];
                v /= p;
            }
        }
        if (v != 1) {
            const std::uint64_t lim = detail::trial_division_limit;
            if (v < lim * lim)
                ++result.prime_powers[Int(v)];
            else
                detail::split_u64(v, result.prime_powers);
        }
        return result;
    }

    for (std::uint32_t p : detail::small_primes()) {
        if (Int(p) * p > m)
            break;
        if (m % p != 0)
            continue;
        do {
            ++result.prime_powers[Int(p)];
            m /= p;
        } while (m % p == 0);
        if (fits_u64(m))
            break;
    }
    if (fits_u64(m)) {
        IntFactorization rest = factor_int(m);
        for (const auto& [p, e] : rest.prime_powers)
            result.prime_powers[p] += e;
    } else {
        detail::split_big(m, result.prime_powers);
    }
    return result;
}

/// All positive divisors of |value| in increasing order.
inline std::vector<Int> divisors(const IntFactorization& fac)
{
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac.prime_powers) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Int> divisors(const Int& n) { return divisors(factor_int(n)); }

/// Smallest prime >= n.
inline Int next_prime(Int n)
{
    if (n <= 2)
        return 2;
    while (!is_prime(n))
        ++n;
    return n;
}

} // namespace nnpoly
