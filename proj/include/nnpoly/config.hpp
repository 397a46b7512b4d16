/**
 * @file config.hpp
 * @brief Search bounds and output settings, read from a JSON file and from
 *        NNPOLY_* environment variables (the environment wins).
 */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "error.hpp"

namespace nnpoly {

enum class OutputFormat { text, json };

struct Config {
    std::uint64_t e_degree_bound = 6;
    std::uint64_t root_closure_n_max = 8;
    std::uint64_t a_lambda_k_max = 12;
    std::uint64_t kronecker_deg_cap = 16;
    std::uint64_t factorization_cache_size = 100'000;
    std::uint64_t catenary_cap = 10'000;
    std::uint64_t poset_size_cap = 256;
    std::uint64_t seed = 20240601;
    OutputFormat output = OutputFormat::json;

    void validate() const
    {
        for (const auto& [name, v] : bounds())
            if (v < 1)
                throw domain_error("config: " + name + " must be at least 1");
    }

    std::map<std::string, std::uint64_t> bounds() const
    {
        return {{"e_degree_bound", e_degree_bound},
                {"root_closure_n_max", root_closure_n_max},
                {"a_lambda_k_max", a_lambda_k_max},
                {"kronecker_deg_cap", kronecker_deg_cap},
                {"factorization_cache_size", factorization_cache_size},
                {"catenary_cap", catenary_cap},
                {"poset_size_cap", poset_size_cap}};
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        for (const auto& [name, v] : bounds())
            j[name] = v;
        j["seed"] = seed;
        j["output"] = output == OutputFormat::json ? "json" : "text";
        return j;
    }
};

namespace detail {

inline std::map<std::string, std::uint64_t Config::*> config_fields()
{
    return {{"e_degree_bound", &Config::e_degree_bound},
            {"root_closure_n_max", &Config::root_closure_n_max},
            {"a_lambda_k_max", &Config::a_lambda_k_max},
            {"kronecker_deg_cap", &Config::kronecker_deg_cap},
            {"factorization_cache_size", &Config::factorization_cache_size},
            {"catenary_cap", &Config::catenary_cap},
            {"poset_size_cap", &Config::poset_size_cap},
            {"seed", &Config::seed}};
}

inline OutputFormat parse_output(const std::string& s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "text")
        return OutputFormat::text;
    throw parse_error("config: output must be \"text\" or \"json\", got \"" + s + "\"");
}

inline std::uint64_t parse_u64(const std::string& name, const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        throw parse_error("config: " + name + " must be a non-negative integer, got \"" + s + "\"");
    return std::stoull(s);
}

} // namespace detail

/// Applies the keys present in j; unknown keys are rejected.
inline void apply_json(Config& cfg, const nlohmann::json& j)
{
    if (!j.is_object())
        throw parse_error("config: top level must be a JSON object");
    const auto fields = detail::config_fields();
    for (const auto& [key, value] : j.items()) {
        if (key == "output") {
            if (!value.is_string())
                throw parse_error("config: output must be a string");
            cfg.output = detail::parse_output(value.get<std::string>());
        } else if (auto it = fields.find(key); it != fields.end()) {
            if (!value.is_number_unsigned())
                throw parse_error("config: " + key + " must be a non-negative integer");
            cfg.*(it->second) = value.get<std::uint64_t>();
        } else {
            throw parse_error("config: unknown key \"" + key + "\"");
        }
    }
}

inline Config load_config_file(const std::string& path, Config cfg = {})
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("config: " + path + ": " + e.what());
    }
    apply_json(cfg, j);
    return cfg;
}

/// NNPOLY_<FIELD> overrides, e.g. NNPOLY_E_DEGREE_BOUND=4, NNPOLY_OUTPUT=text.
inline void apply_env(Config& cfg, const std::function<const char*(const char*)>& getenv_fn = [](const char* n) {
    return std::getenv(n);
})
{
    auto env_name = [](std::string key) {
        for (auto& c : key)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return "NNPOLY_" + key;
    };
    for (const auto& [key, member] : detail::config_fields())
        if (const char* v = getenv_fn(env_name(key).c_str()))
            cfg.*member = detail::parse_u64(env_name(key), v);
    if (const char* v = getenv_fn("NNPOLY_OUTPUT"))
        cfg.output = detail::parse_output(v);
}

} // namespace nnpoly
