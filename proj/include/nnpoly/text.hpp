/**
 * @file text.hpp
 * @brief Text and JSON forms of polynomials.
 *
 * Input terms are "c", "x", "x^k", "c*x^k" or "cx^k" joined by '+' (or '-',
 * for signed polynomials), in any order; whitespace is ignored and repeated
 * exponents are summed. Output is descending with no zero terms, e.g.
 * "x^5+x^4+3x^2-x+1".
 */
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "poly.hpp"

namespace nnpoly {

inline ZPoly parse_zpoly(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw parse_error("empty polynomial");

    auto fail = [&](const std::string& why) -> parse_error {
        return parse_error("cannot parse polynomial '" + std::string(text) + "': " + why);
    };

    std::vector<Int> coeffs;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        bool has_coeff = pos > start;
        Int coeff = has_coeff ? parse_int(std::string_view(s).substr(start, pos - start)) : Int(1);

        std::size_t exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_coeff)
                throw fail("'*' without a coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 'x')
                throw fail("expected 'x' after '*'");
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t es = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (pos == es)
                    throw fail("missing exponent after '^'");
                if (pos - es > 6)
                    throw fail("exponent too large");
                exponent = std::stoul(s.substr(es, pos - es));
            }
        } else if (!has_coeff) {
            throw fail("expected a term at offset " + std::to_string(pos));
        }
        if (coeffs.size() <= exponent)
            coeffs.resize(exponent + 1);
        coeffs[exponent] += negative ? Int(-coeff) : coeff;
    }
    return ZPoly(std::move(coeffs));
}

/// Parses a member of N0[x]*; a negative coefficient or zero is a parse error.
inline NNPoly parse_nnpoly(std::string_view text)
{
    ZPoly p = parse_zpoly(text);
    if (p.is_zero())
        throw parse_error("'" + std::string(text) + "' is the zero polynomial, not an element of N0[x]*");
    if (!is_nonneg(p))
        throw parse_error("'" + std::string(text) + "' has a negative coefficient");
    return NNPoly::unchecked(std::move(p));
}

inline std::string to_string(const ZPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = f.degree() + 1; i-- > 0;) {
        const Int& c = f.coeffs()[i];
        if (c == 0)
            continue;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        Int mag = abs(c);
        if (i == 0 || mag != 1)
            out += mag.str();
        if (i >= 1)
            out += 'x';
        if (i >= 2)
            out += '^' + std::to_string(i);
    }
    return out;
}

inline std::string to_string(const NNPoly& f) { return to_string(f.z()); }

/// Coefficient-list JSON form: ascending array of decimal strings.
inline nlohmann::json to_coeff_json(const ZPoly& f)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(c.str());
    return arr;
}

inline ZPoly from_coeff_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw parse_error("coefficient list must be a JSON array");
    std::vector<Int> coeffs;
    for (const auto& v : j) {
        if (v.is_string())
            coeffs.push_back(parse_int(v.get<std::string>()));
        else if (v.is_number_integer())
            coeffs.emplace_back(v.get<long long>());
        else
            throw parse_error("coefficient must be a decimal string");
    }
    return ZPoly(std::move(coeffs));
}

} // namespace nnpoly
