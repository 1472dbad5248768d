#include <gtest/gtest.h>

#include <random>

#include "dmpf/wavefront.hpp"
#include "oracles.hpp"

using namespace dmpf;

namespace {

void expect_matches(const DistanceField& f, const std::vector<int>& oracle_dist)
{
    for (std::size_t i = 0; i < oracle_dist.size(); ++i) {
        const int v = f.values()[i];
        if (oracle_dist[i] == oracle::kInf)
            EXPECT_EQ(v, DistanceField::kUnreachable) << i;
        else
            EXPECT_EQ(v, oracle_dist[i]) << i;
    }
}

} // namespace

TEST(MwfField, SourceAndNeighbors)
{
    const OccupancyGrid m(11, 11, 0.5, CellState::Free);
    const auto f = mwf_field(m, Cell { 5, 5 });
    EXPECT_EQ(f.at(Cell { 5, 5 }), 0);
    EXPECT_EQ(f.at(Cell { 6, 5 }), 3);
    EXPECT_EQ(f.at(Cell { 5, 4 }), 3);
    EXPECT_EQ(f.at(Cell { 6, 6 }), 4);
    EXPECT_EQ(f.at(Cell { 4, 6 }), 4);
    EXPECT_EQ(f.at(Cell { 10, 5 }), 15);
}

TEST(MwfField, DetourAroundWall)
{
    OccupancyGrid m(9, 9, 0.5, CellState::Free);
    for (int y = 0; y < 8; ++y)
        m.set(Cell { 4, y }, CellState::Occupied);
    const auto f = mwf_field(m, Cell { 2, 2 });
    const auto o = oracle::dijkstra34(m, Cell { 2, 2 });
    expect_matches(f, o);
    EXPECT_GT(f.at(Cell { 6, 2 }), 12);
}

TEST(MwfField, UnknownAndObstaclesUnreachable)
{
    OccupancyGrid m(5, 1, 0.5, CellState::Free);
    m.set(Cell { 2, 0 }, CellState::Unknown);
    const auto f = mwf_field(m, Cell { 0, 0 });
    EXPECT_EQ(f.at(Cell { 1, 0 }), 3);   /* frontier cell, reachable */
    EXPECT_FALSE(f.reachable(Cell { 2, 0 }));
    EXPECT_FALSE(f.reachable(Cell { 3, 0 }));
}

TEST(MwfField, InvalidSource)
{
    OccupancyGrid m(5, 5, 0.5, CellState::Free);
    m.set(Cell { 1, 1 }, CellState::Occupied);
    m.set(Cell { 2, 2 }, CellState::Unknown);
    EXPECT_THROW(mwf_field(m, Cell { 1, 1 }), InvalidSourceError);
    EXPECT_THROW(mwf_field(m, Cell { 2, 2 }), InvalidSourceError);
    EXPECT_THROW(mwf_field(m, Cell { 9, 9 }), InvalidSourceError);
    EXPECT_THROW(orig_wavefront_field(m, Cell { 1, 1 }), InvalidSourceError);
}

TEST(MwfField, MatchesDijkstraOnRandomMaps)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::random_world(40, 40, 0.2, rng);
        const Cell s = oracle::random_free_cell(m, rng);
        expect_matches(mwf_field(m, s), oracle::dijkstra34(m, s));
    }
}

TEST(OrigWavefront, SourceAndDiagonal)
{
    const OccupancyGrid m(5, 5, 0.5, CellState::Free);
    const auto f = orig_wavefront_field(m, Cell { 2, 2 });
    EXPECT_EQ(f.at(Cell { 2, 2 }), 0);
    EXPECT_EQ(f.at(Cell { 3, 3 }), 2);
    EXPECT_EQ(f.at(Cell { 3, 2 }), 1);
}

TEST(OrigWavefront, MatchesBfsOnRandomMaps)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::random_world(40, 40, 0.2, rng);
        const Cell s = oracle::random_free_cell(m, rng);
        expect_matches(orig_wavefront_field(m, s), oracle::bfs(m, s, false));
    }
}

TEST(MwfField, TriangleProperty)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = oracle::random_world(25, 25, 0.2, rng);
        const Cell s = oracle::random_free_cell(m, rng);
        const auto fs = mwf_field(m, s);
        for (int k = 0; k < 20; ++k) {
            const Cell a = oracle::random_free_cell(m, rng);
            if (!fs.reachable(a))
                continue;
            const auto fa = mwf_field(m, a);
            for (std::size_t i = 0; i < m.size(); ++i) {
                const Cell b = m.cell_at(i);
                if (!fs.reachable(b))
                    continue;
                EXPECT_LE(std::abs(fs.at(a) - fs.at(b)), fa.at(b));
            }
        }
    }
}

TEST(MwfField, BoundedByEightConnectedHops)
{
    const OccupancyGrid m(30, 20, 0.5, CellState::Free);
    const Cell s { 7, 4 };
    const auto f = mwf_field(m, s);
    const auto hops = oracle::bfs(m, s, true);
    for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_LE(3 * hops[i], f.values()[i]);
        EXPECT_LE(f.values()[i], 4 * hops[i]);
    }
}

TEST(MwfField, RemovingObstacleNeverIncreasesDistance)
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = oracle::random_world(30, 30, 0.25, rng);
        const Cell s = oracle::random_free_cell(m, rng);
        const auto before = mwf_field(m, s);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.at(i) == CellState::Occupied) {
                m.set(i, CellState::Free);
                break;
            }
        const auto after = mwf_field(m, s);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (before.values()[i] != DistanceField::kUnreachable) {
                EXPECT_LE(after.values()[i], before.values()[i]);
            }
    }
}
