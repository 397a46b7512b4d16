/**
 * @file fourier_motzkin.hpp
 * @brief Exact feasibility of systems of linear inequalities over Q by
 *        Fourier-Motzkin elimination, with back-substitution to a point.
 *
 * Rows are kept with integer coefficients reduced by their gcd. Kohler's
 * rule (a row built from more than k+1 original rows after k eliminations
 * is redundant) keeps the intermediate systems small.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace nnpoly {

/// sum_i coeffs[i] * x_i >= rhs
struct LinearInequality {
    std::vector<Int> coeffs;
    Int rhs;
};

namespace detail {

struct FmRow {
    std::vector<Int> coeffs;
    Int rhs;
    std::set<std::size_t> origin;
};

inline void normalize(FmRow& r)
{
    Int g = abs(r.rhs);
    for (const auto& c : r.coeffs)
        g = gcd(g, c);
    if (g > 1) {
        for (auto& c : r.coeffs)
            c /= g;
        r.rhs /= g;
    }
}

inline Rational ceil_rational(const Rational& v)
{
    Int n = boost::multiprecision::numerator(v);
    Int d = boost::multiprecision::denominator(v);
    return Rational(-floor_div(-n, d));
}

inline Rational floor_rational(const Rational& v)
{
    return Rational(floor_div(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v)));
}

} // namespace detail

/**
 * A rational point satisfying every inequality, or nullopt if none exists.
 * Each coordinate is chosen as the smallest integer within its bounds when
 * there is one, so small integral witnesses are preferred.
 */
inline std::optional<std::vector<Rational>> fourier_motzkin_solve(const std::vector<LinearInequality>& system,
                                                                   std::size_t num_vars)
{
    using detail::FmRow;
    std::vector<FmRow> rows;
    for (std::size_t i = 0; i < system.size(); ++i) {
        FmRow r{system[i].coeffs, system[i].rhs, {i}};
        r.coeffs.resize(num_vars);
        detail::normalize(r);
        rows.push_back(std::move(r));
    }

    // stages[k] holds the system over variables 0 .. num_vars-1-k.
    std::vector<std::vector<FmRow>> stages{rows};
    for (std::size_t step = 0; step < num_vars; ++step) {
        const std::size_t var = num_vars - 1 - step;
        const auto& cur = stages.back();
        std::vector<const FmRow*> pos, neg;
        std::vector<FmRow> next;
        for (const auto& r : cur) {
            if (r.coeffs[var] > 0)
                pos.push_back(&r);
            else if (r.coeffs[var] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        for (const FmRow* p : pos) {
            for (const FmRow* q : neg) {
                FmRow r;
                std::set_union(p->origin.begin(), p->origin.end(), q->origin.begin(), q->origin.end(),
                               std::inserter(r.origin, r.origin.end()));
                if (r.origin.size() > step + 2)
                    continue;
                const Int mp = -q->coeffs[var];
                const Int mq = p->coeffs[var];
                r.coeffs.resize(num_vars);
                for (std::size_t j = 0; j < num_vars; ++j)
                    r.coeffs[j] = mp * p->coeffs[j] + mq * q->coeffs[j];
                r.rhs = mp * p->rhs + mq * q->rhs;
                detail::normalize(r);
                next.push_back(std::move(r));
            }
        }
        // Drop duplicates (same coefficients and bound) and trivially true rows.
        std::vector<FmRow> dedup;
        std::set<std::pair<std::vector<Int>, Int>> seen;
        for (auto& r : next) {
            const bool all_zero = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Int& c) { return c == 0; });
            if (all_zero) {
                if (r.rhs > 0)
                    return std::nullopt;
                continue;
            }
            if (seen.insert({r.coeffs, r.rhs}).second)
                dedup.push_back(std::move(r));
        }
        stages.push_back(std::move(dedup));
    }
    for (const auto& r : stages.back())
        if (r.rhs > 0)
            return std::nullopt;

    std::vector<Rational> x(num_vars, Rational(0));
    for (std::size_t var = 0; var < num_vars; ++var) {
        const auto& sys = stages[num_vars - 1 - var];
        std::optional<Rational> lo, hi;
        for (const auto& r : sys) {
            const Int& a = r.coeffs[var];
            if (a == 0)
                continue;
            Rational rest = r.rhs;
            for (std::size_t j = 0; j < var; ++j)
                rest -= Rational(r.coeffs[j]) * x[j];
            Rational bound = rest / Rational(a);
            if (a > 0) {
                if (!lo || bound > *lo)
                    lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        if (lo && hi && *lo > *hi)
            return std::nullopt;
        if (lo) {
            Rational c = detail::ceil_rational(*lo);
            x[var] = (!hi || c <= *hi) ? c : *lo;
        } else if (hi) {
            x[var] = *hi >= 0 ? Rational(0) : detail::floor_rational(*hi);
        } else {
            x[var] = 0;
        }
    }
    for (const auto& ineq : system) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < num_vars && j < ineq.coeffs.size(); ++j)
            lhs += Rational(ineq.coeffs[j]) * x[j];
        if (lhs < Rational(ineq.rhs))
            throw error("fourier_motzkin_solve: back-substituted point violates the system");
    }
    return x;
}

} // namespace nnpoly
