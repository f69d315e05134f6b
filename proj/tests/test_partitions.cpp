#include <catch_amalgamated.hpp>

#include <corehook/errors.hpp>
#include <corehook/partitions.hpp>

#include "support/brute_force.hpp"

#include <random>

using namespace corehook;

namespace {

Partition P(std::vector<Int> parts)
{
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("partition validation", "[partitions]")
{
    CHECK_NOTHROW(P({}));
    CHECK_NOTHROW(P({3, 3, 1}));
    CHECK_THROWS_AS(P({1, 2}), InvalidInput);
    CHECK_THROWS_AS(P({2, 0}), InvalidInput);
    CHECK(P({8, 6, 3, 1}).size() == 18);
}

TEST_CASE("beta-set validation", "[partitions]")
{
    CHECK(BetaSet({1, 11, 4, 8}).elements() == std::vector<Int>{11, 8, 4, 1});
    CHECK_THROWS_AS(BetaSet({3, 3}), InvalidInput);
    CHECK_THROWS_AS(BetaSet({0, 2}), InvalidInput);
    CHECK_THROWS_AS(BetaSet({-4}), InvalidInput);
    CHECK_FALSE(BetaSet{}.max().has_value());
}

TEST_CASE("hook grid of (8,6,3,1) matches the printed diagram", "[partitions]")
{
    const HookGrid expected{{11, 9, 8, 6, 5, 4, 2, 1}, {8, 6, 5, 3, 2, 1}, {4, 2, 1}, {1}};
    CHECK(hook_length_grid(P({8, 6, 3, 1})) == expected);
    CHECK(hook_length_grid(P({})).empty());
    CHECK(hook_length_grid(P({1})) == HookGrid{{1}});
}

TEST_CASE("beta_set", "[partitions]")
{
    CHECK(beta_set(P({8, 6, 3, 1})) == BetaSet({11, 8, 4, 1}));
    CHECK(beta_set(P({})).empty());
    CHECK(beta_set(P({3, 1})) == BetaSet({4, 1}));
}

TEST_CASE("partition_from_beta", "[partitions]")
{
    CHECK(partition_from_beta(BetaSet({11, 8, 4, 1})) == P({8, 6, 3, 1}));
    CHECK(partition_from_beta(BetaSet{}).empty());
    CHECK(partition_from_beta(BetaSet({19, 12, 9, 5, 2})) == P({15, 9, 7, 4, 2}));
}

TEST_CASE("max_hook", "[partitions]")
{
    CHECK(max_hook(P({8, 6, 3, 1})) == 11);
    CHECK_FALSE(max_hook(P({})).has_value());
    CHECK(max_hook(P({15, 9, 7, 4, 2})) == 19);
}

TEST_CASE("core predicates", "[partitions]")
{
    CHECK(is_s_core(P({8, 6, 3, 1}), 7));
    CHECK(is_s_core(P({}), 5));
    CHECK_FALSE(is_s_core(P({2, 2}), 2));
    CHECK_THROWS_AS(is_s_core(P({1}), 0), InvalidInput);

    CHECK(is_st_core(P({8, 6, 3, 1}), 7, 10));
    CHECK(is_st_core(P({}), 3, 5));
    CHECK_FALSE(is_st_core(P({2, 2}), 2, 3));
}

TEST_CASE("d-distinct predicate", "[partitions]")
{
    CHECK(is_d_distinct(P({15, 9, 7, 4, 2}), 1));
    CHECK_FALSE(is_d_distinct(P({5, 5}), 1));
    CHECK(is_d_distinct(P({5, 5}), 0));
    CHECK(is_d_distinct(P({15, 9, 7, 4, 2}), 2));
    CHECK_FALSE(is_d_distinct(P({15, 9, 7, 4, 2}), 3));
    CHECK_THROWS_AS(is_d_distinct(P({1}), -1), InvalidInput);
}

TEST_CASE("random partitions: grid, beta-set and predicates agree", "[partitions][property]")
{
    std::mt19937_64 rng(20221);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto parts = brute::random_parts(rng, 50, 20);
        const Partition p(parts);
        const auto grid = hook_length_grid(p);
        REQUIRE(grid == brute::hooks(parts));

        // Round trip.
        const auto beta = beta_set(p);
        REQUIRE(partition_from_beta(beta) == p);

        // First column of the grid is the β-set, descending.
        std::vector<Int> column;
        for (const auto& row : grid)
            column.push_back(row.front());
        REQUIRE(column == beta.elements());

        for (Int s = 1; s <= 15; ++s)
            REQUIRE(is_s_core(p, s) == !brute::grid_contains(grid, s));

        // d-distinct is monotone in d and matches the β-set formulation.
        bool previous = true;
        for (Int d = 0; d <= 8; ++d) {
            const bool now = is_d_distinct(p, d);
            REQUIRE(now == is_d_distinct(beta, d));
            if (now)
                REQUIRE(previous);
            previous = now;
        }
    }
}

TEST_CASE("random beta-sets round-trip", "[partitions][property]")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> value(1, 70);
    std::uniform_int_distribution<int> count(0, 20);
    for (int iter = 0; iter < 1000; ++iter) {
        std::set<Int> chosen;
        const int n = count(rng);
        while (static_cast<int>(chosen.size()) < n)
            chosen.insert(value(rng));
        const BetaSet beta(std::vector<Int>(chosen.begin(), chosen.end()));
        REQUIRE(beta_set(partition_from_beta(beta)) == beta);
    }
}
