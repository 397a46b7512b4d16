#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nnpoly/nnpoly.hpp>

namespace nnpoly {

// readable gtest failure messages
inline void PrintTo(const ZPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const NNPoly& p, std::ostream* os) { *os << to_string(p); }

} // namespace nnpoly

namespace testutil {

inline nnpoly::NNPoly N(const std::string& s) { return nnpoly::parse_nnpoly(s); }
inline nnpoly::ZPoly Z(const std::string& s) { return nnpoly::parse_zpoly(s); }

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240601);
    return gen;
}

inline long long uniform(long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

/// Random NNPoly of degree <= max_deg with coefficients in [0, max_coeff].
inline nnpoly::NNPoly random_nn(std::size_t max_deg, long long max_coeff)
{
    const auto d = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_deg)));
    std::vector<nnpoly::Int> c(d + 1);
    for (auto& v : c)
        v = uniform(0, max_coeff);
    c.back() = uniform(1, std::max(1LL, max_coeff));
    return nnpoly::NNPoly(std::move(c));
}

/// Random non-zero ZPoly of degree <= max_deg with |coefficients| <= bound.
inline nnpoly::ZPoly random_z(std::size_t max_deg, long long bound)
{
    const auto d = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_deg)));
    std::vector<nnpoly::Int> c(d + 1);
    for (auto& v : c)
        v = uniform(-bound, bound);
    while (c.back() == 0)
        c.back() = uniform(-bound, bound);
    return nnpoly::ZPoly(std::move(c));
}

/// Schoolbook product on plain vectors, independent of ZPoly.
inline std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b)
{
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

} // namespace testutil
