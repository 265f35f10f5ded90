#include <zfcube/errors.hpp>
#include <zfcube/forcing.hpp>
#include <zfcube/minority.hpp>
#include <zfcube/solver.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace zfcube;

TEST(Bounds, Lower)
{
    EXPECT_EQ(zero_forcing_lower_bound(build_hypercube(4)), 4U);
    EXPECT_EQ(zero_forcing_lower_bound(make_complete(1)), 0U);
    EXPECT_EQ(zero_forcing_lower_bound(build_minority_recursive(5).graph()), 5U);
}

TEST(Bounds, Upper)
{
    auto q4 = build_hypercube(4);
    auto u = zero_forcing_upper_bound(q4);
    EXPECT_EQ(u.size, 8U);
    for (auto v : u.witness)
        EXPECT_EQ(v & 1U, 0U);
    EXPECT_TRUE(is_zero_forcing_set(q4, u.witness));

    EXPECT_EQ(zero_forcing_upper_bound(build_minority_recursive(4).graph()).size, 8U);
    EXPECT_EQ(zero_forcing_upper_bound(build_hypercube(1)).size, 1U);
    EXPECT_THROW(zero_forcing_upper_bound(make_cycle(4)), DomainError);
    EXPECT_THROW(zero_forcing_upper_bound(build_hypercube(0)), DomainError);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = build_twisted(oracle::random_twist_spec(1 + trial % 7, rng));
        EXPECT_TRUE(is_zero_forcing_set(g, zero_forcing_upper_bound(g).witness));
    }
}

TEST(SolveExact, Hypercubes)
{
    for (int n = 1; n <= 4; ++n) {
        auto r = solve_exact(build_hypercube(n));
        ASSERT_EQ(r.status, SolveStatus::exact);
        EXPECT_EQ(*r.z, std::size_t{1} << (n - 1)) << n;
        EXPECT_EQ(r.lower, *r.z);
        EXPECT_EQ(r.upper, *r.z);
    }
}

TEST(SolveExact, MinorityFour)
{
    auto g = build_minority_recursive(4).graph();
    auto r = solve_exact(g);
    ASSERT_EQ(r.status, SolveStatus::exact);
    EXPECT_EQ(*r.z, 7U);
    EXPECT_TRUE(is_zero_forcing_set(g, r.witness));
    EXPECT_EQ(r.witness, oracle::brute_force_zero_forcing(g).witness);
}

TEST(SolveExact, TrivialGraphs)
{
    auto k1 = solve_exact(make_complete(1));
    EXPECT_EQ(*k1.z, 1U);
    EXPECT_EQ(k1.witness, VertexSet{0});
    EXPECT_EQ(*solve_exact(make_path(5)).z, 1U);
    EXPECT_EQ(*solve_exact(make_complete(5)).z, 4U);
    EXPECT_EQ(*solve_exact(Graph::on_vertices(3, {})).z, 3U);
}

TEST(SolveExact, AgreesWithUnprunedEnumeration)
{
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 150; ++trial) {
        auto n = 1 + static_cast<std::size_t>(trial % 8);
        auto g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 7), rng);
        auto r = solve_exact(g);
        auto b = oracle::brute_force_zero_forcing(g);
        ASSERT_EQ(r.status, SolveStatus::exact);
        // the empty set forces only the empty graph; the solver starts at 1
        EXPECT_EQ(*r.z, std::max<std::size_t>(1, b.z));
        EXPECT_TRUE(is_zero_forcing_set(g, r.witness));
        if (b.z > 0)
            EXPECT_EQ(r.witness, b.witness);
    }
}

TEST(SolveExact, WorkerCountDoesNotChangeResult)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_connected_graph(12, 0.3, rng);
        auto one = solve_exact(g);
        for (unsigned w : {2U, 3U, 8U}) {
            SolveOptions o;
            o.workers = w;
            auto many = solve_exact(g, o);
            EXPECT_EQ(many.z, one.z);
            EXPECT_EQ(many.witness, one.witness);
            EXPECT_EQ(many.subsets_tested, one.subsets_tested);
        }
    }
}

TEST(SolveExact, BudgetGivesBounds)
{
    auto g = build_minority_recursive(4).graph();
    SolveOptions o;
    o.subset_budget = 10;
    auto r = solve_exact(g, o);
    EXPECT_EQ(r.status, SolveStatus::inconclusive);
    EXPECT_FALSE(r.z);
    EXPECT_LE(r.lower, 7U);
    EXPECT_GE(r.upper, 7U);
    EXPECT_EQ(r.upper, r.witness.size());
    EXPECT_TRUE(is_zero_forcing_set(g, r.witness));

    SolveOptions capped;
    capped.max_k = 5;
    auto c = solve_exact(g, capped);
    EXPECT_EQ(c.status, SolveStatus::inconclusive);
    EXPECT_EQ(c.lower, 6U);

    SolveOptions timed;
    timed.time_budget = std::chrono::duration<double>(0);
    EXPECT_EQ(solve_exact(build_hypercube(5), timed).status, SolveStatus::inconclusive);
}

TEST(SolveExact, Guards)
{
    auto q6 = build_hypercube(6);
    EXPECT_THROW(solve_exact(q6), ResourceError);
    SolveOptions o;
    o.allow_large = true;
    o.subset_budget = 1000;
    EXPECT_EQ(solve_exact(q6, o).status, SolveStatus::inconclusive);
    EXPECT_THROW(solve_exact(build_hypercube(7), o), ResourceError);
}
