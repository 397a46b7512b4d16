#include <gtest/gtest.h>

#include <chrono>
#include <fstream>

#include "test_util.hpp"

using namespace nnpoly;

namespace {

FinPoset antichain_union(const std::vector<FinPoset>& ps) { return coproduct(ps); }

std::vector<std::size_t> random_permutation(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), testutil::rng());
    return p;
}

/// Automorphisms by trying every permutation (tiny posets only).
std::uint64_t aut_brute_force(const FinPoset& p)
{
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i)
            for (std::size_t j = 0; j < p.size() && ok; ++j)
                ok = p.le(i, j) == p.le(perm[i], perm[j]);
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST(Poset, Constructions)
{
    const FinPoset L = chain_L();
    EXPECT_EQ(L.size(), 2U);
    EXPECT_TRUE(L.lt(0, 1));
    const FinPoset L3 = power(L, 3);
    EXPECT_EQ(L3.size(), 8U);
    EXPECT_TRUE(L3.connected());
    EXPECT_EQ(product(L, L).size(), 4U);
    EXPECT_EQ(power(L, 0).size(), 1U);
    EXPECT_EQ(coproduct({L, L3, FinPoset(1)}).size(), 11U);
    EXPECT_EQ(coproduct({L, L3, FinPoset(1)}).components(), 3U);
    EXPECT_EQ(L3.covers().size(), 12U); // edges of the cube
}

TEST(Poset, ValidationRejectsNonOrders)
{
    EXPECT_THROW(FinPoset::from_covers(2, {{0, 1}, {1, 0}}), domain_error);
    EXPECT_THROW(FinPoset::from_covers(2, {{0, 2}}), domain_error);
    std::vector<std::uint8_t> not_transitive{1, 1, 0, 0, 1, 1, 0, 0, 1};
    EXPECT_THROW(FinPoset::from_relation(3, not_transitive), domain_error);
    std::vector<std::uint8_t> not_reflexive{0, 0, 0, 1};
    EXPECT_THROW(FinPoset::from_relation(2, not_reflexive), domain_error);
}

TEST(Poset, Isomorphism)
{
    const FinPoset L = chain_L();
    EXPECT_FALSE(is_isomorphic(power(L, 2), coproduct({L, L})));
    const FinPoset P = coproduct({power(L, 2), L, FinPoset(1)});
    EXPECT_TRUE(is_isomorphic(P, P));
    // chain of 4 versus the square: same size, different shape
    EXPECT_FALSE(is_isomorphic(FinPoset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}}), power(L, 2)));
    // N poset versus its dual-free variant
    const FinPoset n_shape = FinPoset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
    const FinPoset z_shape = FinPoset::from_covers(4, {{0, 2}, {0, 3}, {1, 3}});
    EXPECT_TRUE(is_isomorphic(n_shape, z_shape));
    const FinPoset w_shape = FinPoset::from_covers(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    EXPECT_FALSE(is_isomorphic(n_shape, w_shape));
    EXPECT_THROW(is_isomorphic(power(L, 9), power(L, 9), 256), resource_error);
}

TEST(Poset, IsomorphismRespectsRelabeling)
{
    const FinPoset L = chain_L();
    std::vector<FinPoset> samples{power(L, 3), coproduct({power(L, 2), L, FinPoset(1)}),
                                  product(coproduct({L, FinPoset(1)}), coproduct({power(L, 2), L}))};
    for (int i = 0; i < 20; ++i) {
        // random posets from random covers i < j
        const std::size_t n = static_cast<std::size_t>(testutil::uniform(3, 12));
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (testutil::uniform(0, 4) == 0)
                    covers.emplace_back(a, b);
        samples.push_back(FinPoset::from_covers(n, covers));
    }
    for (const auto& p : samples) {
        const FinPoset q = p.relabel(random_permutation(p.size()));
        EXPECT_TRUE(is_isomorphic(p, q));
        EXPECT_EQ(aut_count(p), aut_count(q));
    }
}

TEST(Poset, AutomorphismCounts)
{
    const FinPoset L = chain_L();
    std::uint64_t fact = 1;
    for (std::size_t n = 1; n <= 4; ++n) {
        fact *= n;
        EXPECT_EQ(aut_count(power(L, n)), fact) << n;
    }
    EXPECT_EQ(aut_count(L), 1U);
    EXPECT_EQ(aut_count(FinPoset(1)), 1U);
    EXPECT_EQ(aut_count(FinPoset(4)), 24U);
    EXPECT_EQ(aut_count(antichain_union({L, L, L})), 6U);
    // against brute force on small random posets
    for (int i = 0; i < 15; ++i) {
        const std::size_t n = static_cast<std::size_t>(testutil::uniform(2, 7));
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (testutil::uniform(0, 2) == 0)
                    covers.emplace_back(a, b);
        const FinPoset p = FinPoset::from_covers(n, covers);
        EXPECT_EQ(aut_count(p), aut_brute_force(p));
    }
    EXPECT_THROW(aut_count(FinPoset(12), 256, 1000), resource_error);
}

TEST(Poset, KrullSchmidtCounterexample)
{
    const auto start = std::chrono::steady_clock::now();
    const KsReport r = ks_counterexample_report();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(r.products_isomorphic);
    EXPECT_EQ(r.left_size, 63U);
    EXPECT_EQ(r.right_size, 63U);
    EXPECT_EQ(r.factor_sizes, (std::vector<std::size_t>{9, 7, 3, 21}));
    EXPECT_TRUE(r.factor_pairs_all_distinct());
    EXPECT_EQ(r.factor_pairs.size(), 6U);
    EXPECT_TRUE(r.polynomial_identity);
    EXPECT_TRUE(r.sizes_match_evaluation);
    EXPECT_EQ(r.factor_components, (std::vector<std::size_t>{2, 3, 2, 3}));
    EXPECT_LT(secs, 5.0);
}

TEST(Poset, SizesFollowEvaluationAtTwo)
{
    for (int i = 0; i < 20; ++i) {
        const NNPoly f = testutil::random_nn(3, 2), g = testutil::random_nn(2, 2);
        const FinPoset pf = poset_of(f), pg = poset_of(g);
        EXPECT_EQ(Int(pf.size()), f.eval(Int(2)));
        EXPECT_EQ(Int(product(pf, pg).size()), (f * g).eval(Int(2)));
        EXPECT_EQ(Int(coproduct({pf, pg}).size()), f.eval(Int(2)) + g.eval(Int(2)));
    }
}

TEST(Poset, JsonRoundTrip)
{
    const FinPoset p = coproduct({power(chain_L(), 2), chain_L()});
    const FinPoset q = poset_from_json(to_json(p));
    EXPECT_EQ(q.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            EXPECT_EQ(p.le(i, j), q.le(i, j));
    EXPECT_THROW(poset_from_json(nlohmann::json::parse(R"({"size": 2, "covers": [[0, 1], [1, 0]]})")), parse_error);
    EXPECT_THROW(poset_from_json(nlohmann::json::parse(R"({"covers": []})")), parse_error);
    EXPECT_THROW(poset_from_json(nlohmann::json::parse(R"({"size": 2, "covers": [[0]]})")), parse_error);
}

TEST(Poset, ShippedDataFilesLoad)
{
    for (const char* name : {"L3.json", "L3_relabeled.json", "L2_plus_L.json"}) {
        std::ifstream in(std::string(NNPOLY_POSET_DIR) + "/" + name);
        ASSERT_TRUE(in.good()) << name;
        const FinPoset p = poset_from_json(nlohmann::json::parse(in));
        EXPECT_GT(p.size(), 0U);
    }
}
