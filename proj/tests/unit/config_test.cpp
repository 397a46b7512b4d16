#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>

#include <nnpoly/config.hpp>

using nnpoly::Config;
using nnpoly::OutputFormat;

TEST(Config, Defaults)
{
    const Config c;
    EXPECT_EQ(c.e_degree_bound, 6U);
    EXPECT_EQ(c.root_closure_n_max, 8U);
    EXPECT_EQ(c.a_lambda_k_max, 12U);
    EXPECT_EQ(c.kronecker_deg_cap, 16U);
    EXPECT_EQ(c.factorization_cache_size, 100000U);
    EXPECT_EQ(c.catenary_cap, 10000U);
    EXPECT_EQ(c.poset_size_cap, 256U);
    EXPECT_EQ(c.output, OutputFormat::json);
    EXPECT_NO_THROW(c.validate());
}

TEST(Config, ApplyJson)
{
    Config c;
    nnpoly::apply_json(c, nlohmann::json::parse(R"({"e_degree_bound": 3, "output": "text", "seed": 7})"));
    EXPECT_EQ(c.e_degree_bound, 3U);
    EXPECT_EQ(c.output, OutputFormat::text);
    EXPECT_EQ(c.seed, 7U);
    EXPECT_EQ(c.catenary_cap, 10000U);
    EXPECT_THROW(nnpoly::apply_json(c, nlohmann::json::parse(R"({"e_degree_bnd": 3})")), nnpoly::parse_error);
    EXPECT_THROW(nnpoly::apply_json(c, nlohmann::json::parse(R"({"e_degree_bound": -1})")), nnpoly::parse_error);
    EXPECT_THROW(nnpoly::apply_json(c, nlohmann::json::parse(R"({"output": "xml"})")), nnpoly::parse_error);
    EXPECT_THROW(nnpoly::apply_json(c, nlohmann::json::parse("[1]")), nnpoly::parse_error);
    // round trip through to_json
    Config d;
    nnpoly::apply_json(d, c.to_json());
    EXPECT_EQ(d.to_json(), c.to_json());
}

TEST(Config, LoadFile)
{
    const std::string path = testing::TempDir() + "nnpoly_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"poset_size_cap": 64})";
    }
    const Config c = nnpoly::load_config_file(path);
    EXPECT_EQ(c.poset_size_cap, 64U);
    std::remove(path.c_str());
    EXPECT_THROW(nnpoly::load_config_file(path), nnpoly::parse_error);
}

TEST(Config, EnvironmentOverrides)
{
    std::map<std::string, std::string> env{{"NNPOLY_E_DEGREE_BOUND", "4"}, {"NNPOLY_OUTPUT", "text"}};
    auto fake = [&](const char* name) -> const char* {
        auto it = env.find(name);
        return it == env.end() ? nullptr : it->second.c_str();
    };
    Config c;
    nnpoly::apply_json(c, nlohmann::json::parse(R"({"e_degree_bound": 2})"));
    nnpoly::apply_env(c, fake);
    EXPECT_EQ(c.e_degree_bound, 4U);
    EXPECT_EQ(c.output, OutputFormat::text);
    env["NNPOLY_CATENARY_CAP"] = "ten";
    EXPECT_THROW(nnpoly::apply_env(c, fake), nnpoly::parse_error);
}

TEST(Config, ValidateRejectsZeroBounds)
{
    Config c;
    c.a_lambda_k_max = 0;
    EXPECT_THROW(c.validate(), nnpoly::domain_error);
}
