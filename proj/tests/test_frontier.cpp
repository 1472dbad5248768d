#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dmpf/frontier.hpp"
#include "oracles.hpp"

using namespace dmpf;

namespace {

bool brute_frontier(const OccupancyGrid& m, const Cell& c)
{
    if (m.at(c) != CellState::Free)
        return false;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            const Cell n { c.x + dx, c.y + dy };
            if ((dx || dy) && m.in_bounds(n) && m.at(n) == CellState::Unknown)
                return true;
        }
    return false;
}

} // namespace

TEST(DetectFrontiers, AllUnknownHasNone)
{
    const OccupancyGrid m(10, 10, 0.5, CellState::Unknown);
    EXPECT_TRUE(detect_frontiers(m).empty());
}

TEST(DetectFrontiers, FullyKnownHasNone)
{
    const OccupancyGrid m(10, 10, 0.5, CellState::Free);
    EXPECT_TRUE(detect_frontiers(m).empty());
}

TEST(DetectFrontiers, HalfSplitGivesBoundaryRow)
{
    OccupancyGrid m(8, 6, 0.5, CellState::Unknown);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 8; ++x)
            m.set(Cell { x, y }, CellState::Free);
    const auto f = detect_frontiers(m);
    ASSERT_EQ(f.size(), 8u);
    for (int x = 0; x < 8; ++x)
        EXPECT_EQ(f[static_cast<std::size_t>(x)], (Cell { x, 2 }));
}

TEST(DetectFrontiers, MatchesBruteForceOnRandomMaps)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = oracle::random_belief(30, 30, rng);
        std::vector<Cell> expect;
        for (int y = 0; y < 30; ++y)
            for (int x = 0; x < 30; ++x)
                if (brute_frontier(m, Cell { x, y }))
                    expect.push_back(Cell { x, y });
        EXPECT_EQ(detect_frontiers(m, FrontierRule::Strict), expect);
    }
}

TEST(DetectFrontiers, AccessibleRuleIsSubsetOfStrict)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = oracle::random_belief(30, 30, rng);
        const auto strict = detect_frontiers(m, FrontierRule::Strict);
        const auto acc = detect_frontiers(m, FrontierRule::Accessible);
        EXPECT_TRUE(std::includes(strict.begin(), strict.end(), acc.begin(), acc.end()));
    }
}

TEST(DetectFrontiers, AccessibleRuleIgnoresSealedCorner)
{
    /* Free cell whose only Unknown neighbor sits diagonally behind two walls */
    OccupancyGrid m(3, 3, 0.5, CellState::Free);
    m.set(Cell { 2, 2 }, CellState::Unknown);
    m.set(Cell { 2, 1 }, CellState::Occupied);
    m.set(Cell { 1, 2 }, CellState::Occupied);
    EXPECT_TRUE(is_frontier(m, Cell { 1, 1 }, FrontierRule::Strict));
    EXPECT_FALSE(is_frontier(m, Cell { 1, 1 }, FrontierRule::Accessible));
    m.set(Cell { 1, 2 }, CellState::Free);
    EXPECT_TRUE(is_frontier(m, Cell { 1, 1 }, FrontierRule::Accessible));
}

TEST(ClusterFrontiers, EmptyInput)
{
    EXPECT_TRUE(cluster_frontiers({}).empty());
}

TEST(ClusterFrontiers, SingleCell)
{
    const auto c = cluster_frontiers({ Cell { 4, 7 } });
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].size, 1);
    EXPECT_EQ(c[0].centroid, (Cell { 4, 7 }));
}

TEST(ClusterFrontiers, DiagonalNeighborsJoin)
{
    const auto c = cluster_frontiers({ Cell { 1, 1 }, Cell { 2, 2 } });
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].size, 2);
}

TEST(ClusterFrontiers, OrderedBySizeThenCentroid)
{
    const auto c = cluster_frontiers({ Cell { 10, 0 }, Cell { 0, 5 }, Cell { 20, 20 }, Cell { 21, 20 }, Cell { 22, 20 } });
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].size, 3);
    EXPECT_EQ(c[0].centroid, (Cell { 21, 20 }));
    EXPECT_EQ(c[1].centroid, (Cell { 10, 0 }));   /* row 0 before row 5 */
    EXPECT_EQ(c[2].centroid, (Cell { 0, 5 }));
}

TEST(ClusterFrontiers, MinimumSizeFilter)
{
    const auto c = cluster_frontiers({ Cell { 0, 0 }, Cell { 5, 5 }, Cell { 6, 5 } }, 2);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].size, 2);
}

TEST(ClusterFrontiers, CentroidIsNearestMemberToMean)
{
    /* an L shape: mean lies off the shape, centroid must still be a member */
    std::vector<Cell> l;
    for (int i = 0; i < 6; ++i) {
        l.push_back(Cell { 0, i });
        l.push_back(Cell { i, 0 });
    }
    const auto c = cluster_frontiers(l);
    ASSERT_EQ(c.size(), 1u);
    const auto& m = c[0].members;
    EXPECT_TRUE(std::find(m.begin(), m.end(), c[0].centroid) != m.end());
    double mx = 0.0;
    double my = 0.0;
    for (const Cell& x : m) {
        mx += x.x;
        my += x.y;
    }
    mx /= m.size();
    my /= m.size();
    const double best = std::hypot(c[0].centroid.x - mx, c[0].centroid.y - my);
    for (const Cell& x : m)
        EXPECT_LE(best, std::hypot(x.x - mx, x.y - my) + 1e-12);
}

TEST(ClusterFrontiers, PartitionMatchesUnionFind)
{
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> coord(0, 24);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<Cell> unique;
        while (unique.size() < 100)
            unique.insert(Cell { coord(rng), coord(rng) });
        const std::vector<Cell> cells(unique.begin(), unique.end());

        oracle::UnionFind uf(static_cast<int>(cells.size()));
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j)
                if (std::abs(cells[i].x - cells[j].x) <= 1 && std::abs(cells[i].y - cells[j].y) <= 1)
                    uf.unite(static_cast<int>(i), static_cast<int>(j));
        std::map<int, std::set<Cell>> groups;
        for (std::size_t i = 0; i < cells.size(); ++i)
            groups[uf.find(static_cast<int>(i))].insert(cells[i]);
        std::set<std::set<Cell>> expect;
        for (auto& [root, g] : groups)
            expect.insert(g);

        std::vector<Cell> shuffled = cells;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto clusters = cluster_frontiers(shuffled);
        std::set<std::set<Cell>> got;
        std::size_t total = 0;
        for (const auto& c : clusters) {
            EXPECT_EQ(c.size, static_cast<int>(c.members.size()));
            EXPECT_TRUE(std::find(c.members.begin(), c.members.end(), c.centroid) != c.members.end());
            got.insert(std::set<Cell>(c.members.begin(), c.members.end()));
            total += c.members.size();
        }
        EXPECT_EQ(got, expect);
        EXPECT_EQ(total, cells.size());
        EXPECT_EQ(clusters, cluster_frontiers(cells));
    }
}
