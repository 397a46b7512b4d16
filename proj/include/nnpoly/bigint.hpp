#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace nnpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& v)
{
    return boost::multiprecision::denominator(v) == 1
               ? boost::multiprecision::numerator(v).str()
               : boost::multiprecision::numerator(v).str() + "/" +
                     boost::multiprecision::denominator(v).str();
}

/// Parses an optionally signed decimal integer; whitespace is not accepted.
inline Int parse_int(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw parse_error("expected an integer, got '" + std::string(text) + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9')
            throw parse_error("expected an integer, got '" + std::string(text) + "'");
        value *= 10;
        value += c - '0';
    }
    return negative ? Int(-value) : value;
}

inline Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int pow(const Int& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

inline Int factorial(unsigned n)
{
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Floor division for signed operands (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline bool fits_u64(const Int& v) { return v >= 0 && boost::multiprecision::msb(v | 1) < 64; }

inline std::uint64_t to_u64(const Int& v) { return v.convert_to<std::uint64_t>(); }

} // namespace nnpoly
