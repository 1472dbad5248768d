#include <gtest/gtest.h>

#include <random>

#include "dmpf/planner.hpp"
#include "oracles.hpp"

using namespace dmpf;

TEST(PlanPath, SameCell)
{
    const OccupancyGrid m(4, 4, 0.5, CellState::Free);
    const auto p = plan_path(m, Cell { 1, 1 }, Cell { 1, 1 });
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->cost, 0);
    EXPECT_EQ(p->cells.size(), 1u);
}

TEST(PlanPath, StraightLine)
{
    const OccupancyGrid m(5, 1, 0.5, CellState::Free);
    const auto p = plan_path(m, Cell { 0, 0 }, Cell { 4, 0 });
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->cost, 12);
    EXPECT_EQ(p->cells.size(), 5u);
}

TEST(PlanPath, WalledOff)
{
    OccupancyGrid m(7, 7, 0.5, CellState::Free);
    for (int y = 0; y < 7; ++y)
        m.set(Cell { 3, y }, CellState::Occupied);
    EXPECT_FALSE(plan_path(m, Cell { 0, 0 }, Cell { 6, 6 }).has_value());
    EXPECT_FALSE(plan_path(m, Cell { 0, 0 }, Cell { 3, 3 }).has_value());
}

TEST(PlanPath, OctileHeuristic)
{
    EXPECT_EQ(octile_heuristic(Cell { 0, 0 }, Cell { 4, 0 }), 12);
    EXPECT_EQ(octile_heuristic(Cell { 0, 0 }, Cell { 3, 3 }), 12);
    EXPECT_EQ(octile_heuristic(Cell { 0, 0 }, Cell { 5, 2 }), 17);
}

TEST(PlanPath, OptimalAndValidOnRandomMaps)
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::random_world(30, 30, 0.25, rng);
        const Cell a = oracle::random_free_cell(m, rng);
        const Cell b = oracle::random_free_cell(m, rng);
        const auto dist = oracle::dijkstra34(m, a);
        const auto p = plan_path(m, a, b);
        const int expect = dist[m.index(b)];
        ASSERT_EQ(p.has_value(), expect != oracle::kInf) << trial;
        if (!p)
            continue;
        EXPECT_EQ(p->cost, expect) << trial;
        ASSERT_FALSE(p->cells.empty());
        EXPECT_EQ(p->cells.front(), a);
        EXPECT_EQ(p->cells.back(), b);
        int cost = 0;
        for (std::size_t i = 1; i < p->cells.size(); ++i) {
            const int dx = std::abs(p->cells[i].x - p->cells[i - 1].x);
            const int dy = std::abs(p->cells[i].y - p->cells[i - 1].y);
            ASSERT_LE(std::max(dx, dy), 1);
            ASSERT_TRUE(m.is_free(p->cells[i]));
            cost += (dx && dy) ? 4 : 3;
        }
        EXPECT_EQ(cost, p->cost);
    }
}
